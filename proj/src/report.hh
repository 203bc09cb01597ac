#ifndef GORB_REPORT_HH
#define GORB_REPORT_HH

#include "jmrealize.hh"
#include "levi.hh"
#include "orbits.hh"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace gorb {

using Json = nlohmann::ordered_json;

// Enumeration context for one (family, m, delta) input.
struct Context {
  GradingSpec spec;
  DimensionVector delta;
  std::vector<Orbit> orbits;

  Context(const GradingSpec& s, const DimensionVector& d);
};

Json tableau_json(const SymmetricTableau& t);
Json rank_tableau_json(const RankTableau& r);
SymmetricTableau tableau_from_json(const GradingSpec& spec, const Json& j);

// One summary record per orbit (no matrices).
Json orbit_record(const Orbit& o);

std::string enumerate_json(const Context& ctx);
std::string enumerate_tsv(const Context& ctx);
std::string hasse_dot(const Context& ctx);

// Deep single-orbit report with oracle cross-checks and, on request, the
// realization matrices. Throws std::logic_error if an oracle disagrees.
Json orbit_deep_report(const Orbit& o, bool dump_matrices);

// Invariant sweep over all inputs with the given bounds. Returns true when
// everything passes; `summary` collects one line per configuration plus
// failure details.
bool verify_sweep(int max_m, long long max_total_dim, std::string& summary);

} // namespace gorb

#endif
