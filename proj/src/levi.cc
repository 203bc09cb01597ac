#include "levi.hh"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gorb {

namespace {

// All boxes with a nonzero coefficient, with their values.
std::vector<std::pair<IBox, long long>> support_boxes(const CoefficientFunction& c) {
  std::vector<std::pair<IBox, long long>> out;
  const auto& orbs = c.orbits();
  for (std::size_t k = 0; k < orbs.size(); ++k)
    if (c.values[k] != 0)
      for (const IBox& b : orbs[k].boxes)
        out.push_back({b, c.values[k]});
  return out;
}

long long box_size(const IBox& b) { return (b.i - b.j) / 2 + 1; }

} // namespace

LeviData levi_factorization(const CoefficientFunction& c) {
  auto boxes = support_boxes(c);
  std::map<long long, std::vector<std::pair<IBox, long long>>> by_shift;
  for (const auto& [b, v] : boxes)
    by_shift[lambda_of(b)].push_back({b, v});

  LeviData out;
  for (const auto& [shift, group] : by_shift)
    out.lambda.push_back(shift);
  std::size_t ell = out.lambda.size();
  bool has_zero = by_shift.count(0) != 0;
  std::size_t gl_count = has_zero ? (ell - 1) / 2 : ell / 2;

  std::ostringstream disp;
  for (std::size_t r = 0; r < gl_count + (has_zero ? 1 : 0); ++r) {
    long long shift = out.lambda[r];
    long long n = 0;
    std::vector<long long> parts;
    for (const auto& [b, v] : by_shift[shift]) {
      n += v * box_size(b);
      for (long long s = 0; s < v; ++s)
        parts.push_back(box_size(b));
    }
    out.block_sizes.push_back(n);
    LeviFactor f;
    f.n = n;
    f.part = Partition::from_multiset(std::move(parts));
    f.type = (shift == 0) ? (c.spec.orthogonal() ? "SO" : "Sp") : "GL";
    if (r > 0)
      disp << " x ";
    disp << f.type << '(' << n << ')';
    out.factors.push_back(std::move(f));
  }
  out.display = disp.str();
  return out;
}

Int local_system_count(const CoefficientFunction& c) {
  const GradingSpec& spec = c.spec;
  long long zero_boxes = 0;
  for (const auto& [b, v] : support_boxes(c))
    if (lambda_of(b) == 0)
      ++zero_boxes;
  if (zero_boxes == 0)
    return 1;
  bool even = !spec.odd_case();
  if ((even && spec.epsilon() == 1) || (!even && spec.epsilon() == -1))
    return 1;
  if (even) // symplectic, even index set
    return Int(1) << zero_boxes;
  return Int(1) << (zero_boxes - 1); // orthogonal, odd index set
}

namespace {

// Maximal runs of consecutive integers in a strictly increasing sequence.
std::vector<std::pair<std::size_t, std::size_t>> runs_of(const std::vector<long long>& z) {
  std::vector<std::pair<std::size_t, std::size_t>> out; // [begin, end)
  std::size_t start = 0;
  for (std::size_t k = 1; k <= z.size(); ++k)
    if (k == z.size() || z[k] != z[k - 1] + 1) {
      out.push_back({start, k});
      start = k;
    }
  return out;
}

Symbol normalized_unordered(std::vector<long long> a, std::vector<long long> b) {
  // Longer row first; ties by lexicographic order.
  bool swap_rows = b.size() > a.size() || (b.size() == a.size() && b < a);
  if (swap_rows)
    std::swap(a, b);
  long long defect = static_cast<long long>(a.size()) - static_cast<long long>(b.size());
  return Symbol{std::move(a), std::move(b), defect < 0 ? -defect : defect};
}

} // namespace

SymbolSet symbols_for_orbit(const CoefficientFunction& c) {
  const GradingSpec& spec = c.spec;
  LeviData levi = levi_factorization(c);
  SymbolSet out;

  bool classical = !levi.factors.empty() && levi.factors.back().type != "GL";
  if (!classical) {
    out.symbols.push_back(Symbol{{}, {}, 0});
    return out;
  }
  const Partition& part = levi.factors.back().part;
  bool symplectic = levi.factors.back().type == "Sp";

  bool has_odd = false, has_even = false;
  for (long long p : part.parts)
    (p % 2 != 0 ? has_odd : has_even) = true;
  if (has_odd && has_even)
    out.verified = false;

  if (!symplectic && part.totally_even()) {
    // Doubled parts: one self-paired symbol.
    std::vector<long long> half;
    for (std::size_t k = 0; k < part.parts.size(); k += 2)
      half.push_back(part.parts[k]);
    std::sort(half.begin(), half.end());
    std::vector<long long> row;
    for (std::size_t k = 0; k < half.size(); ++k)
      row.push_back(half[k] / 2 + 2 * static_cast<long long>(k));
    out.symbols.push_back(Symbol{row, row, 0});
    return out;
  }

  std::vector<long long> parts(part.parts.rbegin(), part.parts.rend()); // ascending
  if (symplectic && parts.size() % 2 == 0)
    parts.insert(parts.begin(), 0);
  std::size_t n = parts.size();
  std::vector<long long> z(n), xi(n);
  std::vector<int> row(n); // 0 = top, 1 = bottom
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = parts[k] / 2 + static_cast<long long>(k);
    xi[k] = parts[k] + static_cast<long long>(k);
    row[k] = xi[k] % 2 == 0 ? 0 : 1;
  }
  auto runs = runs_of(z);
  std::vector<std::size_t> flippable;
  for (std::size_t rr = 0; rr < runs.size(); ++rr) {
    bool flip = false;
    for (std::size_t k = runs[rr].first; k < runs[rr].second; ++k) {
      if (symplectic && parts[k] > 0 && parts[k] % 2 == 0)
        flip = true;
      if (!symplectic && parts[k] % 2 != 0)
        flip = true;
    }
    if (flip)
      flippable.push_back(rr);
  }

  std::set<Symbol> seen;
  for (std::size_t mask = 0; mask < (std::size_t(1) << flippable.size()); ++mask) {
    std::vector<int> cur = row;
    for (std::size_t t = 0; t < flippable.size(); ++t)
      if (mask & (std::size_t(1) << t))
        for (std::size_t k = runs[flippable[t]].first; k < runs[flippable[t]].second; ++k)
          cur[k] = 1 - cur[k];
    std::vector<long long> top, bottom;
    for (std::size_t k = 0; k < n; ++k)
      (cur[k] == 0 ? top : bottom).push_back(z[k]);
    Symbol s;
    if (symplectic) {
      long long defect = static_cast<long long>(top.size()) - static_cast<long long>(bottom.size());
      s = Symbol{std::move(top), std::move(bottom), defect};
    } else {
      s = normalized_unordered(std::move(top), std::move(bottom));
    }
    seen.insert(std::move(s));
  }
  out.symbols.assign(seen.begin(), seen.end());
  return out;
}

} // namespace gorb
