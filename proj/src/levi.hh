#ifndef GORB_LEVI_HH
#define GORB_LEVI_HH

#include "orbits.hh"

#include <string>
#include <vector>

namespace gorb {

struct LeviFactor {
  std::string type; // "GL", "Sp" or "SO"
  long long n;
  Partition part; // Jordan type of the nilpotent inside this factor
};

// Levi factor of the stabilizer of the pair (E, iota): one general linear
// factor per negative shift value, plus a classical factor for shift zero
// when present.
struct LeviData {
  std::vector<long long> lambda;      // all shift values, ascending
  std::vector<long long> block_sizes; // n_1 .. n_{l'}
  std::vector<LeviFactor> factors;
  std::string display; // e.g. "GL(1) x Sp(4)"
};

LeviData levi_factorization(const CoefficientFunction& c);

// Number of irreducible equivariant local systems on the orbit.
Int local_system_count(const CoefficientFunction& c);

struct Symbol {
  std::vector<long long> top, bottom;
  long long defect;
  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.top == b.top && a.bottom == b.bottom && a.defect == b.defect;
  }
  friend bool operator<(const Symbol& a, const Symbol& b) {
    if (a.top != b.top)
      return a.top < b.top;
    if (a.bottom != b.bottom)
      return a.bottom < b.bottom;
    return a.defect < b.defect;
  }
};

// Two-row symbols enumerating the local systems through the classical
// factor; a single empty symbol stands for the trivial system when no
// classical factor is present. `verified` is false for partition shapes
// outside the coverage of the worked reference cases (mixed-parity
// classical factors, which do not arise from these gradings).
struct SymbolSet {
  std::vector<Symbol> symbols;
  bool verified = true;
};

SymbolSet symbols_for_orbit(const CoefficientFunction& c);

} // namespace gorb

#endif
