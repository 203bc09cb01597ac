#include "orbits.hh"

#include <algorithm>
#include <map>
#include <sstream>

namespace gorb {

Partition Partition::from_multiset(std::vector<long long> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<long long>());
  return Partition{std::move(parts)};
}

long long Partition::sum() const {
  long long t = 0;
  for (long long p : parts)
    t += p;
  return t;
}

bool Partition::totally_even() const {
  std::map<long long, long long> mult;
  for (long long p : parts) {
    if (p % 2 != 0)
      return false;
    ++mult[p];
  }
  for (const auto& [p, m] : mult)
    if (m % 2 != 0)
      return false;
  return true;
}

std::string Partition::multiplicative() const {
  std::map<long long, long long> mult;
  for (long long p : parts)
    ++mult[p];
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, m] : mult) {
    if (!first)
      os << ' ';
    first = false;
    os << p << '^' << m;
  }
  return os.str();
}

std::string split_tag_name(SplitTag t) {
  switch (t) {
  case SplitTag::NotSplit: return "none";
  case SplitTag::Prime: return "prime";
  case SplitTag::DoublePrime: return "doubleprime";
  }
  return "?";
}

Int dim_g2(const GradingSpec& spec, const DimensionVector& delta) {
  Int d = 0;
  if (spec.odd_case()) {
    for (int i = 0; i < 2 * spec.m - 2; i += 2)
      d += Int(delta.at(i)) * delta.at(i + 2);
  } else {
    Int d1 = delta.at(1);
    d += d1 * (d1 - spec.epsilon()) / 2;
    for (int i = 1; i < 2 * spec.m - 1; i += 2)
      d += Int(delta.at(i)) * delta.at(i + 2);
  }
  return d;
}

Int dim_g0(const GradingSpec& spec, const DimensionVector& delta) {
  Int d = 0;
  for (int i : spec.interval())
    if (i > 0)
      d += Int(delta.at(i)) * delta.at(i);
  if (spec.odd_case()) {
    Int d0 = delta.at(0);
    d += d0 * (d0 - spec.epsilon()) / 2;
  }
  return d;
}

namespace {

// Flat list of every box together with its coefficient.
std::vector<std::pair<IBox, long long>> box_values(const CoefficientFunction& c) {
  std::vector<std::pair<IBox, long long>> out;
  const auto& orbs = c.orbits();
  for (std::size_t k = 0; k < orbs.size(); ++k)
    for (const IBox& b : orbs[k].boxes)
      out.push_back({b, c.values[k]});
  return out;
}

} // namespace

Int orbit_dimension(const CoefficientFunction& c) {
  const GradingSpec& spec = c.spec;
  DimensionVector delta = dimension_vector(c);
  auto bv = box_values(c);
  int eps = spec.epsilon();
  // The formulas keep everything integral: every halved sum is even.
  Int twice = 0;

  if (spec.odd_case()) {
    Int d0 = delta.at(0);
    twice += d0 * (d0 - eps);
    for (int i : spec.interval())
      if (i > 0)
        twice += 2 * Int(delta.at(i)) * delta.at(i);
    for (int i = 0; i < 2 * spec.m - 2; i += 2)
      for (const auto& [b, cb] : bv)
        for (const auto& [b2, cb2] : bv)
          if (supp_contains(b, i) && supp_contains(b2, i + 2) && lambda_of(b) >= lambda_of(b2))
            twice += 2 * Int(cb) * cb2;
    for (int i : spec.interval())
      if (i > 0)
        for (const auto& [b, cb] : bv)
          for (const auto& [b2, cb2] : bv)
            if (supp_contains(b, i) && supp_contains(b2, i) && lambda_of(b) >= lambda_of(b2))
              twice -= 2 * Int(cb) * cb2;
    for (const auto& [b, cb] : bv)
      for (const auto& [b2, cb2] : bv)
        if (supp_contains(b, 0) && supp_contains(b2, 0) && b != tau(spec, b2) &&
            lambda_of(b) >= lambda_of(b2))
          twice -= Int(cb) * cb2;
    for (const auto& [b, cb] : bv)
      if (supp_contains(b, 0) && lambda_of(b) >= 0)
        twice -= Int(cb) * (cb - eps);
  } else {
    for (int i : spec.interval())
      if (i > 0)
        twice += 2 * Int(delta.at(i)) * delta.at(i);
    for (int i : spec.interval())
      if (i > 0)
        for (const auto& [b, cb] : bv)
          for (const auto& [b2, cb2] : bv)
            if (supp_contains(b, i) && supp_contains(b2, i) && lambda_of(b) >= lambda_of(b2))
              twice -= 2 * Int(cb) * cb2;
    for (int i = 1; i < 2 * spec.m - 1; i += 2)
      for (const auto& [b, cb] : bv)
        for (const auto& [b2, cb2] : bv)
          if (supp_contains(b, i) && supp_contains(b2, i + 2) && lambda_of(b) >= lambda_of(b2))
            twice += 2 * Int(cb) * cb2;
    for (const auto& [b, cb] : bv)
      for (const auto& [b2, cb2] : bv)
        if (b != tau(spec, b2) && supp_contains(b, -1) && supp_contains(b2, 1) &&
            lambda_of(b) >= lambda_of(b2))
          twice += Int(cb) * cb2;
    for (const auto& [b, cb] : bv)
      if (supp_contains(b, -1) && lambda_of(b) >= 0)
        twice += Int(cb) * (cb - 1) + Int(1 - eps) * cb;
  }
  if (twice % 2 != 0)
    throw std::logic_error("orbit dimension: half-integral result");
  return twice / 2;
}

Partition jordan_type(const CoefficientFunction& c) {
  std::vector<long long> parts;
  for (const auto& [b, cb] : box_values(c)) {
    long long size = (b.i - b.j) / 2 + 1;
    for (long long r = 0; r < cb; ++r)
      parts.push_back(size);
  }
  return Partition::from_multiset(std::move(parts));
}

bool splits(const GradingSpec& spec, const CoefficientFunction& c) {
  if (spec.family != Family::OddOrthogonalSpecial)
    return false;
  const auto& orbs = c.orbits();
  for (std::size_t k = 0; k < orbs.size(); ++k) {
    const IBox& b = orbs[k].rep();
    if (b.i + b.j == 0 && c.values[k] != 0)
      return false;
  }
  return true;
}

std::vector<Orbit> enumerate_orbits(const GradingSpec& spec, const DimensionVector& delta) {
  std::vector<Orbit> out;
  for (CoefficientFunction& c : enumerate_coefficients(spec, delta)) {
    if (splits(spec, c)) {
      out.push_back(Orbit{c, SplitTag::Prime, ""});
      out.push_back(Orbit{std::move(c), SplitTag::DoublePrime, ""});
    } else {
      out.push_back(Orbit{std::move(c), SplitTag::NotSplit, ""});
    }
  }
  std::vector<Int> dims(out.size());
  for (std::size_t k = 0; k < out.size(); ++k)
    dims[k] = orbit_dimension(out[k].c);
  std::vector<std::size_t> order(out.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (dims[a] != dims[b])
      return dims[a] > dims[b];
    if (!(out[a].c == out[b].c))
      return out[a].c < out[b].c;
    return out[a].split < out[b].split;
  });
  std::vector<Orbit> sorted;
  sorted.reserve(out.size());
  for (std::size_t k : order)
    sorted.push_back(std::move(out[k]));
  // Names: index within equal dimension; the split halves of one orbit share
  // the index and differ by the prime marks.
  std::size_t k = 0;
  while (k < sorted.size()) {
    Int d = orbit_dimension(sorted[k].c);
    std::size_t idx = 0;
    std::size_t start = k;
    while (k < sorted.size() && orbit_dimension(sorted[k].c) == d)
      ++k;
    for (std::size_t r = start; r < k; ++r) {
      if (sorted[r].split != SplitTag::DoublePrime)
        ++idx;
      std::ostringstream os;
      if (sorted[r].split == SplitTag::Prime)
        os << '\'';
      else if (sorted[r].split == SplitTag::DoublePrime)
        os << "''";
      os << "O_" << d << '^' << idx;
      sorted[r].name = os.str();
    }
  }
  return sorted;
}

bool closure_known(const Orbit& a, const Orbit& b) {
  // The two halves of one split orbit are not comparable by the tableau
  // criterion; their relation is left undetermined.
  return !(a.c == b.c && a.split != b.split && a.split != SplitTag::NotSplit &&
           b.split != SplitTag::NotSplit);
}

bool closure_leq(const Orbit& a, const Orbit& b) {
  if (!closure_known(a, b))
    throw std::logic_error("closure: relation between split halves is unknown");
  if (a.c == b.c)
    return a.split == b.split;
  return theta(to_tableau(a.c)).leq(theta(to_tableau(b.c)));
}

std::vector<HasseEdge> hasse_edges(const std::vector<Orbit>& orbits) {
  std::size_t n = orbits.size();
  // strict[a][b]: orbit a lies in the closure of orbit b, a != b.
  std::vector<std::vector<bool>> strict(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && closure_known(orbits[a], orbits[b]))
        strict[a][b] = closure_leq(orbits[a], orbits[b]) && !(orbits[a].c == orbits[b].c);
  std::vector<HasseEdge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!strict[a][b])
        continue;
      bool covering = true;
      for (std::size_t mid = 0; mid < n && covering; ++mid)
        if (strict[a][mid] && strict[mid][b])
          covering = false;
      if (covering)
        edges.push_back(HasseEdge{a, b});
    }
  return edges;
}

bool parity_defined(const Orbit& o) {
  // Only meaningful when the ambient group is special orthogonal. With the
  // full orthogonal group a totally even orbit is the union of both special
  // halves, so no single parity is attached to it.
  Family f = o.c.spec.family;
  if (f != Family::EvenOrthogonal && f != Family::OddOrthogonalSpecial)
    return false;
  return jordan_type(o.c).totally_even();
}

Parity parity(const Orbit& o) {
  if (!parity_defined(o))
    throw std::logic_error("parity: defined only for orthogonal orbits of totally even type");
  const GradingSpec& spec = o.c.spec;
  long long count = 0;
  const auto& orbs = o.c.orbits();
  for (std::size_t k = 0; k < orbs.size(); ++k)
    for (const IBox& b : orbs[k].boxes) {
      if (o.c.values[k] == 0)
        continue;
      // Totally even type forces even-size supports throughout.
      for (int i : supp_top(spec, b))
        if (i < 0)
          count += o.c.values[k];
      if (spec.odd_case() && below_diagonal(b) && supp_top_contains(spec, b, 0))
        count += o.c.values[k];
    }
  if (o.split == SplitTag::DoublePrime)
    count += 1;
  return count % 2 == 0 ? Parity::Even : Parity::Odd;
}

bool g_conjugate(const Orbit& a, const Orbit& b) {
  if (!(a.c.spec == b.c.spec))
    return false;
  Partition ja = jordan_type(a.c), jb = jordan_type(b.c);
  if (!(ja == jb))
    return false;
  Family f = a.c.spec.family;
  if ((f == Family::EvenOrthogonal || f == Family::OddOrthogonalSpecial) && ja.totally_even())
    return parity(a) == parity(b);
  return true;
}

} // namespace gorb
