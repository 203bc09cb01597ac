#ifndef GORB_JMREALIZE_HH
#define GORB_JMREALIZE_HH

#include "linalg.hh"
#include "orbits.hh"

#include <cstddef>
#include <utility>
#include <vector>

namespace gorb {

// One vector of the model space: the s-th copy of the degree-i line of the
// indecomposable labeled by the box b (1 <= s <= c(b), i in Supp(b)).
struct BasisLabel {
  IBox b;
  long long s;
  int i;
};

// Explicit matrix model of one orbit: a standard sl2 triple (E, H, F) inside
// the isometry Lie algebra of an exact bilinear form, with E in degree 2.
struct Realization {
  GradingSpec spec;
  CoefficientFunction c;
  bool swapped = false; // second half of a split orbit
  std::vector<BasisLabel> labels; // grouped by degree, descending
  RatMatrix gram, E, H, F;

  std::size_t dim() const { return labels.size(); }
  int degree_of(std::size_t idx) const { return labels[idx].i; }
};

Realization realize(const CoefficientFunction& c, SplitTag half = SplitTag::NotSplit);

// Structural checks on the matrices (bracket relations, degrees, invariance
// of the form, nondegeneracy); throws std::logic_error on failure.
void verify_triple(const Realization& r);

// Everything below recomputes an invariant from the matrices alone, as an
// independent cross-check of the closed-form combinatorics.

RankTableau rank_tableau_from_matrices(const Realization& r);
Partition jordan_from_matrices(const Realization& r);

// Basis of the degree-step component of the isometry algebra of gram
// (step 0: the degree-0 part, step 2: the degree-2 part).
std::vector<RatMatrix> isometry_component(const Realization& r, int step);

Int g0_dimension_from_matrices(const Realization& r);
Int g2_dimension_from_matrices(const Realization& r);

// Orbit dimension from the parabolic attached to the triple:
// dim g0 - dim p0 + dim p2, by counting ad(H) eigenvalues.
Int dimension_by_eigencount(const Realization& r);
// Orbit dimension as the rank of Z -> [Z, E] on the degree-0 part.
Int dimension_by_tangent_rank(const Realization& r);

// Maximal isotropic subspace attached to a totally even orbit, spanned by
// the labels whose degree lies in the top half of the support.
struct IsotropicData {
  std::vector<std::size_t> span;
  long long negative_count;   // spanning labels of negative degree
  long long zero_below_count; // degree-0 spanning labels below the diagonal
};
IsotropicData isotropic_subspace(const Realization& r);
Parity parity_from_isotropic(const Realization& r);

// Base change into the reference space with the standard form: the columns
// of T are the images of the model basis. Needs sqrt(2) and sqrt(-2) for
// the middle block in the odd orthogonal families.
struct Ambient {
  std::vector<std::pair<int, long long>> labels; // (degree, position)
  QuarticMatrix gram;
  QuarticMatrix T;
};
Ambient embed(const Realization& r);
// Checks that T is an isometry onto the standard form; throws on failure.
void verify_embedding(const Realization& r, const Ambient& a);

} // namespace gorb

#endif
