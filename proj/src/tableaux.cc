#include "tableaux.hh"

#include <algorithm>

namespace gorb {

DimensionVector::DimensionVector(const GradingSpec& s) : spec(s) {
  for (int i : spec.interval())
    entries[i] = 0;
}

DimensionVector DimensionVector::from_positive_list(const GradingSpec& s,
                                                    const std::vector<long long>& positive) {
  DimensionVector d(s);
  std::vector<int> nonneg;
  for (int i : s.interval())
    if (i >= 0)
      nonneg.push_back(i); // descending
  if (positive.size() != nonneg.size())
    throw std::invalid_argument("dimension vector: wrong number of entries for this family");
  for (std::size_t k = 0; k < nonneg.size(); ++k) {
    if (positive[k] < 0)
      throw std::invalid_argument("dimension vector: negative entry");
    d.entries[nonneg[k]] = positive[k];
    d.entries[-nonneg[k]] = positive[k];
  }
  // An alternating form is nondegenerate only on an even-dimensional space,
  // and it restricts to the self-paired middle block.
  if (s.family == Family::OddSymplectic && d.at(0) % 2 != 0)
    throw std::invalid_argument("dimension vector: the middle block must be even-dimensional");
  return d;
}

long long DimensionVector::at(int i) const {
  auto it = entries.find(i);
  return it == entries.end() ? 0 : it->second;
}

long long DimensionVector::total() const {
  long long t = 0;
  for (const auto& [i, v] : entries)
    t += v;
  return t;
}

bool DimensionVector::all_positive() const {
  for (const auto& [i, v] : entries)
    if (v <= 0)
      return false;
  return true;
}

CoefficientFunction::CoefficientFunction(const GradingSpec& s)
    : spec(s), values(tau_orbits(s).size(), 0) {}

const std::vector<TauOrbit>& CoefficientFunction::orbits() const {
  if (orbit_cache_.empty())
    orbit_cache_ = tau_orbits(spec);
  return orbit_cache_;
}

long long CoefficientFunction::on_box(const IBox& b) const {
  require_box(spec, b);
  const auto& orbs = orbits();
  for (std::size_t k = 0; k < orbs.size(); ++k)
    for (const IBox& member : orbs[k].boxes)
      if (member == b)
        return values[k];
  throw std::logic_error("coefficient function: box not covered by any orbit");
}

SymmetricTableau::SymmetricTableau(const GradingSpec& s) : spec(s) {
  for (int i : spec.interval())
    for (int j = -spec.max_index(); j <= i; j += 2)
      entries[{i, j}] = 0;
}

long long SymmetricTableau::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void SymmetricTableau::validate() const {
  for (const auto& [cell, v] : entries) {
    auto [i, j] = cell;
    if (!spec.contains_index(i) || !spec.contains_index(j) || i < j)
      throw std::invalid_argument("tableau: cell outside the diagram");
    if (v < 0)
      throw std::invalid_argument("tableau: negative entry");
    if (at(-j, -i) != v)
      throw std::invalid_argument("tableau: symmetry c(-j,-i) = c(i,j) violated");
    if (i + j == 0 && spec.mu_max() == 1 && v % 2 != 0)
      throw std::invalid_argument("tableau: diagonal entries must be even for this family");
  }
}

RankTableau::RankTableau(const GradingSpec& s) : spec(s) {
  for (int i : spec.interval())
    for (int j = -spec.max_index(); j <= i; j += 2)
      entries[{i, j}] = 0;
}

long long RankTableau::at(int i, int j) const {
  if (!spec.contains_index(i) || !spec.contains_index(j) || i < j)
    return 0;
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void RankTableau::validate(const DimensionVector* delta) const {
  for (const auto& [cell, v] : entries) {
    auto [i, j] = cell;
    if (v < 0)
      throw std::invalid_argument("rank tableau: negative entry");
    if (at(-j, -i) != v)
      throw std::invalid_argument("rank tableau: symmetry violated");
    long long second_diff = v - at(i + 2, j) - at(i, j - 2) + at(i + 2, j - 2);
    if (second_diff < 0)
      throw std::invalid_argument("rank tableau: second difference negative");
    if (i + j == 0 && spec.mu_max() == 1 && second_diff % 2 != 0)
      throw std::invalid_argument("rank tableau: diagonal parity violated");
  }
  if (delta)
    for (int i : spec.interval())
      if (at(i, i) != delta->at(i))
        throw std::invalid_argument("rank tableau: diagonal does not match the dimension vector");
}

bool RankTableau::leq(const RankTableau& other) const {
  for (const auto& [cell, v] : entries)
    if (v > other.at(cell.first, cell.second))
      return false;
  return true;
}

DimensionVector dimension_vector(const CoefficientFunction& c) {
  DimensionVector d(c.spec);
  const auto& orbs = c.orbits();
  for (std::size_t k = 0; k < orbs.size(); ++k)
    for (const IBox& b : orbs[k].boxes)
      for (int i : supp(c.spec, b))
        d.entries[i] += c.values[k];
  return d;
}

SymmetricTableau to_tableau(const CoefficientFunction& c) {
  SymmetricTableau t(c.spec);
  const auto& orbs = c.orbits();
  for (std::size_t k = 0; k < orbs.size(); ++k)
    for (const IBox& b : orbs[k].boxes)
      t.entries[{b.i, b.j}] += c.values[k];
  return t;
}

CoefficientFunction from_tableau(const SymmetricTableau& t) {
  t.validate();
  CoefficientFunction c(t.spec);
  const auto& orbs = c.orbits();
  for (std::size_t k = 0; k < orbs.size(); ++k) {
    const IBox& b = orbs[k].rep();
    long long v = t.at(b.i, b.j);
    if (b.i + b.j == 0 && t.spec.mu_max() == 1)
      v /= 2; // entry is split equally between the two diagonal copies
    c.values[k] = v;
  }
  return c;
}

RankTableau theta(const SymmetricTableau& t) {
  RankTableau r(t.spec);
  for (auto& [cell, v] : r.entries) {
    auto [i, j] = cell;
    long long sum = 0;
    for (const auto& [cell2, cv] : t.entries) {
      auto [u, w] = cell2;
      if (u >= i && j >= w)
        sum += cv;
    }
    v = sum;
  }
  return r;
}

SymmetricTableau theta_inv(const RankTableau& r) {
  r.validate();
  SymmetricTableau t(r.spec);
  for (auto& [cell, v] : t.entries) {
    auto [i, j] = cell;
    v = r.at(i, j) - r.at(i + 2, j) - r.at(i, j - 2) + r.at(i + 2, j - 2);
  }
  t.validate();
  return t;
}

namespace {

void enumerate_rec(const GradingSpec& spec, const std::vector<TauOrbit>& orbs, std::size_t idx,
                   std::map<int, long long>& remaining, CoefficientFunction& current,
                   std::vector<CoefficientFunction>& out) {
  if (idx == orbs.size()) {
    for (const auto& [i, v] : remaining)
      if (v != 0)
        return;
    out.push_back(current);
    return;
  }
  // Unit weight of this orbit on each graded dimension.
  std::map<int, long long> weight;
  for (const IBox& b : orbs[idx].boxes)
    for (int i : supp(spec, b))
      ++weight[i];
  long long bound = -1;
  for (const auto& [i, w] : weight) {
    long long cap = remaining[i] / w;
    bound = bound < 0 ? cap : std::min(bound, cap);
  }
  for (long long v = 0; v <= bound; ++v) {
    current.values[idx] = v;
    if (v > 0)
      for (const auto& [i, w] : weight)
        remaining[i] -= w;
    enumerate_rec(spec, orbs, idx + 1, remaining, current, out);
  }
  for (const auto& [i, w] : weight)
    remaining[i] += bound * w;
  current.values[idx] = 0;
}

} // namespace

std::vector<CoefficientFunction> enumerate_coefficients(const GradingSpec& spec,
                                                        const DimensionVector& delta) {
  if (!(delta.spec == spec))
    throw std::invalid_argument("enumerate: spec mismatch");
  for (int i : spec.interval())
    if (delta.at(i) != delta.at(-i))
      throw std::invalid_argument("enumerate: dimension vector not symmetric");
  if (spec.family == Family::OddSymplectic && delta.at(0) % 2 != 0)
    throw std::invalid_argument("enumerate: the middle dimension must be even here");
  std::vector<TauOrbit> orbs = tau_orbits(spec);
  std::map<int, long long> remaining = delta.entries;
  CoefficientFunction current(spec);
  std::vector<CoefficientFunction> out;
  enumerate_rec(spec, orbs, 0, remaining, current, out);
  return out;
}

std::vector<std::pair<int, int>> quiver_decomposition(const TauOrbit& orbit) {
  std::vector<std::pair<int, int>> out;
  for (const IBox& b : orbit.boxes)
    out.push_back({b.j, b.i});
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace gorb
