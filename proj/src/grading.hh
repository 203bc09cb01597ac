#ifndef GORB_GRADING_HH
#define GORB_GRADING_HH

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace gorb {

// The five classical graded families handled by this library. "Even" /
// "Odd" refer to the parity of the size of the grading index set I: the
// even families grade over the odd integers in (-2m, 2m), the odd families
// over the even integers in that range.
enum class Family {
  EvenSymplectic,
  EvenOrthogonal,
  OddSymplectic,
  OddOrthogonalFull,
  OddOrthogonalSpecial,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct GradingSpec {
  Family family;
  int m;

  GradingSpec(Family f, int m_in) : family(f), m(m_in) {
    if (m < 1)
      throw std::invalid_argument("grading: m must be >= 1");
  }

  // True when the index set consists of even integers (|I| = 2m - 1).
  bool odd_case() const {
    return family == Family::OddSymplectic || family == Family::OddOrthogonalFull ||
           family == Family::OddOrthogonalSpecial;
  }
  bool orthogonal() const { return epsilon() == 1; }
  int epsilon() const {
    return (family == Family::EvenSymplectic || family == Family::OddSymplectic) ? -1 : 1;
  }
  int size_I() const { return odd_case() ? 2 * m - 1 : 2 * m; }
  // Diagonal boxes carry an extra copy exactly when the duality fixes the
  // diagonal cell but the indecomposable splits in two.
  int mu_max() const {
    bool even = !odd_case();
    return ((even && epsilon() == 1) || (!even && epsilon() == -1)) ? 1 : 0;
  }
  int max_index() const { return odd_case() ? 2 * m - 2 : 2 * m - 1; }
  bool contains_index(int i) const {
    if (i < -max_index() || i > max_index())
      return false;
    return odd_case() ? (i % 2 == 0) : (i % 2 != 0);
  }
  // All indices, descending.
  std::vector<int> interval() const {
    std::vector<int> out;
    for (int i = max_index(); i >= -max_index(); i -= 2)
      out.push_back(i);
    return out;
  }

  friend bool operator==(const GradingSpec& a, const GradingSpec& b) {
    return a.family == b.family && a.m == b.m;
  }
};

// A cell of the staircase diagram: rows and columns indexed by I, with
// i >= j, plus a copy index k for diagonal cells that occur twice.
struct IBox {
  int i, j, k;

  friend bool operator==(const IBox& a, const IBox& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k;
  }
  friend bool operator!=(const IBox& a, const IBox& b) { return !(a == b); }
};

// Canonical order: i descending, then j ascending, then k ascending.
inline int compare_boxes(const IBox& a, const IBox& b) {
  auto ka = std::make_tuple(-a.i, a.j, a.k);
  auto kb = std::make_tuple(-b.i, b.j, b.k);
  if (ka < kb)
    return -1;
  if (kb < ka)
    return 1;
  return 0;
}

inline bool operator<(const IBox& a, const IBox& b) { return compare_boxes(a, b) < 0; }

struct BoxLess {
  bool operator()(const IBox& a, const IBox& b) const { return compare_boxes(a, b) < 0; }
};

int mu(const GradingSpec& spec, int i, int j);
bool valid_box(const GradingSpec& spec, const IBox& b);
void require_box(const GradingSpec& spec, const IBox& b);

// All boxes in canonical order.
std::vector<IBox> enumerate_boxes(const GradingSpec& spec);

// The duality involution on boxes.
IBox tau(const GradingSpec& spec, const IBox& b);

bool on_diagonal(const IBox& b);     // i + j == 0
bool above_diagonal(const IBox& b);  // i + j > 0
bool below_diagonal(const IBox& b);  // i + j < 0

struct TauOrbit {
  std::vector<IBox> boxes; // 1 or 2 members, canonical representative first
  const IBox& rep() const { return boxes.front(); }
};

// Orbits of the duality, ordered by canonical representative.
std::vector<TauOrbit> tau_orbits(const GradingSpec& spec);

// Supp(b) = {i' in I : j <= i' <= i}, descending.
std::vector<int> supp(const GradingSpec& spec, const IBox& b);
bool supp_contains(const IBox& b, int idx);
// Top half of an even-size support: {i' : i >= i' >= (i+j+2)/2}.
std::vector<int> supp_top(const GradingSpec& spec, const IBox& b);
bool supp_top_contains(const GradingSpec& spec, const IBox& b, int idx);

// Diagonal eigenvalue of the semisimple element of the standard triple on
// the degree-i' line of the indecomposable labeled b.
int h_coeff(const GradingSpec& spec, const IBox& b, int iprime);
// Lowering coefficient of the triple at degree i'.
int f_coeff(const GradingSpec& spec, const IBox& b, int iprime);
// Constant value i' - h_{i'}(b) = (i + j) / 2.
int lambda_of(const IBox& b);

} // namespace gorb

#endif
