#ifndef GORB_ORBITS_HH
#define GORB_ORBITS_HH

#include "scalar.hh"
#include "tableaux.hh"

#include <string>
#include <vector>

namespace gorb {

struct Partition {
  std::vector<long long> parts; // descending

  static Partition from_multiset(std::vector<long long> parts);
  long long sum() const;
  bool totally_even() const; // all parts even and all multiplicities even
  std::string multiplicative() const; // e.g. "1^2 4^1", parts ascending
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

enum class SplitTag { NotSplit, Prime, DoublePrime };
std::string split_tag_name(SplitTag t);

enum class Parity { Even, Odd };

struct Orbit {
  CoefficientFunction c;
  SplitTag split = SplitTag::NotSplit;
  std::string name; // assigned by enumerate_orbits ("O_d^k", primed when split)
};

// dim of the degree-2 graded piece of the ambient Lie algebra.
Int dim_g2(const GradingSpec& spec, const DimensionVector& delta);
// dim of the degree-0 graded piece.
Int dim_g0(const GradingSpec& spec, const DimensionVector& delta);

// Closed-form orbit dimension.
Int orbit_dimension(const CoefficientFunction& c);

Partition jordan_type(const CoefficientFunction& c);

// Splitting criterion for the special-orthogonal odd family: the full
// orthogonal orbit splits in two iff no diagonal box carries a coefficient.
bool splits(const GradingSpec& spec, const CoefficientFunction& c);

// Full orbit list in report order: dimension descending, then ascending
// lexicographic coefficient vector; split halves adjacent (prime first).
std::vector<Orbit> enumerate_orbits(const GradingSpec& spec, const DimensionVector& delta);

// Zariski-closure comparison via entrywise partial-sum tableaux. For two
// halves of one split orbit the relation is unknown; closure_known reports
// whether the comparison is meaningful.
bool closure_known(const Orbit& a, const Orbit& b);
bool closure_leq(const Orbit& a, const Orbit& b);

struct HasseEdge {
  std::size_t lower, upper; // indices into the enumerate_orbits list
};
std::vector<HasseEdge> hasse_edges(const std::vector<Orbit>& orbits);

// Mod-2 conjugacy invariant for orthogonal orbits of totally even type.
Parity parity(const Orbit& o);
bool parity_defined(const Orbit& o);

// Conjugacy under the full (ungraded) isometry group.
bool g_conjugate(const Orbit& a, const Orbit& b);

} // namespace gorb

#endif
