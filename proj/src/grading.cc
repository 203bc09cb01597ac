#include "grading.hh"

#include <algorithm>

namespace gorb {

std::string family_name(Family f) {
  switch (f) {
  case Family::EvenSymplectic: return "even-sp";
  case Family::EvenOrthogonal: return "even-so";
  case Family::OddSymplectic: return "odd-sp";
  case Family::OddOrthogonalFull: return "odd-o";
  case Family::OddOrthogonalSpecial: return "odd-so-special";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::EvenSymplectic, Family::EvenOrthogonal, Family::OddSymplectic,
                   Family::OddOrthogonalFull, Family::OddOrthogonalSpecial})
    if (family_name(f) == name)
      return f;
  return std::nullopt;
}

int mu(const GradingSpec& spec, int i, int j) { return i + j == 0 ? spec.mu_max() : 0; }

bool valid_box(const GradingSpec& spec, const IBox& b) {
  return spec.contains_index(b.i) && spec.contains_index(b.j) && b.i >= b.j && b.k >= 0 &&
         b.k <= mu(spec, b.i, b.j);
}

void require_box(const GradingSpec& spec, const IBox& b) {
  if (!valid_box(spec, b))
    throw std::invalid_argument("grading: box outside the diagram");
}

std::vector<IBox> enumerate_boxes(const GradingSpec& spec) {
  std::vector<IBox> out;
  for (int i : spec.interval())
    for (int j = -spec.max_index(); j <= i; j += 2)
      for (int k = 0; k <= mu(spec, i, j); ++k)
        out.push_back(IBox{i, j, k});
  return out;
}

IBox tau(const GradingSpec& spec, const IBox& b) {
  require_box(spec, b);
  if (b.i + b.j != 0)
    return IBox{-b.j, -b.i, b.k};
  if (spec.mu_max() == 0)
    return b;
  return IBox{b.i, b.j, 1 - b.k};
}

bool on_diagonal(const IBox& b) { return b.i + b.j == 0; }
bool above_diagonal(const IBox& b) { return b.i + b.j > 0; }
bool below_diagonal(const IBox& b) { return b.i + b.j < 0; }

std::vector<TauOrbit> tau_orbits(const GradingSpec& spec) {
  std::vector<TauOrbit> out;
  for (const IBox& b : enumerate_boxes(spec)) {
    // Canonical representative: i + j >= 0, with k = 0 on doubled diagonals.
    if (b.i + b.j < 0)
      continue;
    if (b.i + b.j == 0 && b.k != 0)
      continue;
    TauOrbit orb;
    orb.boxes.push_back(b);
    IBox t = tau(spec, b);
    if (t != b)
      orb.boxes.push_back(t);
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<int> supp(const GradingSpec& spec, const IBox& b) {
  require_box(spec, b);
  std::vector<int> out;
  for (int v = b.i; v >= b.j; v -= 2)
    out.push_back(v);
  return out;
}

bool supp_contains(const IBox& b, int idx) {
  return idx <= b.i && idx >= b.j && (idx - b.i) % 2 == 0;
}

std::vector<int> supp_top(const GradingSpec& spec, const IBox& b) {
  require_box(spec, b);
  if (((b.i - b.j) / 2 + 1) % 2 != 0)
    throw std::invalid_argument("grading: top half needs an even-size support");
  std::vector<int> out;
  for (int v = b.i; v >= (b.i + b.j + 2) / 2; v -= 2)
    out.push_back(v);
  return out;
}

bool supp_top_contains(const GradingSpec& spec, const IBox& b, int idx) {
  (void)spec;
  return idx <= b.i && idx >= (b.i + b.j + 2) / 2 && (idx - b.i) % 2 == 0;
}

int h_coeff(const GradingSpec& spec, const IBox& b, int iprime) {
  require_box(spec, b);
  if (!supp_contains(b, iprime))
    throw std::invalid_argument("grading: index outside the support");
  int below = 0, above = 0;
  for (int v : spec.interval()) {
    if (v >= b.j && v <= iprime)
      ++below;
    if (v >= iprime && v <= b.i)
      ++above;
  }
  return below - above;
}

int f_coeff(const GradingSpec& spec, const IBox& b, int iprime) {
  require_box(spec, b);
  if (!supp_contains(b, iprime))
    throw std::invalid_argument("grading: index outside the support");
  int count = 0;
  for (int ii : spec.interval())
    for (int jj : spec.interval())
      if (ii >= jj && ii >= iprime && ii <= b.i && jj > b.j && jj <= iprime)
        ++count;
  return count;
}

int lambda_of(const IBox& b) { return (b.i + b.j) / 2; }

} // namespace gorb
