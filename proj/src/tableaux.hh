#ifndef GORB_TABLEAUX_HH
#define GORB_TABLEAUX_HH

#include "grading.hh"

#include <map>
#include <utility>
#include <vector>

namespace gorb {

// Graded dimension delta_i = dim V_i, symmetric under i -> -i.
struct DimensionVector {
  GradingSpec spec;
  std::map<int, long long> entries; // keyed by every index of I

  explicit DimensionVector(const GradingSpec& s);
  // Positive-side wire convention: highest index first, down to delta_1
  // (even families) or delta_0 (odd families); mirrored automatically.
  static DimensionVector from_positive_list(const GradingSpec& s,
                                            const std::vector<long long>& positive);
  long long at(int i) const;
  long long total() const;
  bool all_positive() const;
  friend bool operator==(const DimensionVector& a, const DimensionVector& b) {
    return a.spec == b.spec && a.entries == b.entries;
  }
};

// Multiplicity assignment on duality orbits of boxes; the orbit label of
// one graded nilpotent orbit. Stored in canonical orbit order.
struct CoefficientFunction {
  GradingSpec spec;
  std::vector<long long> values; // aligned with tau_orbits(spec)

  explicit CoefficientFunction(const GradingSpec& s);
  const std::vector<TauOrbit>& orbits() const;
  // Value of the symmetric per-box function c on any box.
  long long on_box(const IBox& b) const;
  long long& orbit_value(std::size_t idx) { return values[idx]; }
  friend bool operator==(const CoefficientFunction& a, const CoefficientFunction& b) {
    return a.spec == b.spec && a.values == b.values;
  }
  friend bool operator<(const CoefficientFunction& a, const CoefficientFunction& b) {
    return a.values < b.values;
  }

private:
  mutable std::vector<TauOrbit> orbit_cache_;
};

using Cell = std::pair<int, int>; // (i, j) with i >= j

// Staircase tableau c_{i,j} with the symmetry c_{-j,-i} = c_{i,j}; doubled
// diagonals force even diagonal entries.
struct SymmetricTableau {
  GradingSpec spec;
  std::map<Cell, long long> entries; // all cells i >= j

  explicit SymmetricTableau(const GradingSpec& s);
  long long at(int i, int j) const; // 0 outside the diagram
  void validate() const;
  friend bool operator==(const SymmetricTableau& a, const SymmetricTableau& b) {
    return a.spec == b.spec && a.entries == b.entries;
  }
};

// Partial-sum tableau r_{i,j}; entrywise comparison gives the closure order.
struct RankTableau {
  GradingSpec spec;
  std::map<Cell, long long> entries;

  explicit RankTableau(const GradingSpec& s);
  long long at(int i, int j) const; // 0 outside the diagram
  void validate(const DimensionVector* delta = nullptr) const;
  bool leq(const RankTableau& other) const; // entrywise
  friend bool operator==(const RankTableau& a, const RankTableau& b) {
    return a.spec == b.spec && a.entries == b.entries;
  }
};

DimensionVector dimension_vector(const CoefficientFunction& c);

SymmetricTableau to_tableau(const CoefficientFunction& c);
CoefficientFunction from_tableau(const SymmetricTableau& t);

RankTableau theta(const SymmetricTableau& t);
SymmetricTableau theta_inv(const RankTableau& r);

// All coefficient functions with the given graded dimension, ascending
// lexicographic over the canonical orbit order.
std::vector<CoefficientFunction> enumerate_coefficients(const GradingSpec& spec,
                                                        const DimensionVector& delta);

// Interval [j, i] of each box of the orbit: the graded dimension vectors of
// the underlying ungraded indecomposable summands.
std::vector<std::pair<int, int>> quiver_decomposition(const TauOrbit& orbit);

} // namespace gorb

#endif
