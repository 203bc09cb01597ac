#include "graded_orbits.h"

#include "report.hh"

#include <cstring>
#include <new>
#include <string>

struct go_context {
  gorb::Context impl;
};

namespace {

char* copy_out(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out)
    std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

go_status string_result(const std::string& s, char** out) {
  if (!out)
    return GO_ERR_USAGE;
  *out = copy_out(s);
  return *out ? GO_OK : GO_ERR_INTERNAL;
}

} // namespace

extern "C" {

const char* go_status_message(go_status status) {
  switch (status) {
  case GO_OK: return "ok";
  case GO_ERR_USAGE: return "invalid family, m or delta";
  case GO_ERR_BAD_INPUT: return "malformed or inconsistent input";
  case GO_ERR_VERIFY: return "internal cross-check failed";
  case GO_ERR_RANGE: return "orbit index out of range";
  case GO_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

go_status go_context_create(const char* family, int m, const long long* delta,
                            size_t delta_len, go_context** out) {
  if (!family || !delta || !out)
    return GO_ERR_USAGE;
  *out = nullptr;
  try {
    auto fam = gorb::family_from_name(family);
    if (!fam)
      return GO_ERR_USAGE;
    gorb::GradingSpec spec(*fam, m);
    std::vector<long long> positive(delta, delta + delta_len);
    gorb::DimensionVector d = gorb::DimensionVector::from_positive_list(spec, positive);
    *out = new go_context{gorb::Context(spec, d)};
    return GO_OK;
  } catch (const std::invalid_argument&) {
    return GO_ERR_USAGE;
  } catch (...) {
    return GO_ERR_INTERNAL;
  }
}

void go_context_free(go_context* ctx) { delete ctx; }

go_status go_orbit_count(const go_context* ctx, long long* out) {
  if (!ctx || !out)
    return GO_ERR_USAGE;
  *out = static_cast<long long>(ctx->impl.orbits.size());
  return GO_OK;
}

go_status go_enumerate_json(const go_context* ctx, char** out) {
  if (!ctx)
    return GO_ERR_USAGE;
  try {
    return string_result(gorb::enumerate_json(ctx->impl), out);
  } catch (...) {
    return GO_ERR_INTERNAL;
  }
}

go_status go_enumerate_tsv(const go_context* ctx, char** out) {
  if (!ctx)
    return GO_ERR_USAGE;
  try {
    return string_result(gorb::enumerate_tsv(ctx->impl), out);
  } catch (...) {
    return GO_ERR_INTERNAL;
  }
}

go_status go_hasse_dot(const go_context* ctx, char** out) {
  if (!ctx)
    return GO_ERR_USAGE;
  try {
    return string_result(gorb::hasse_dot(ctx->impl), out);
  } catch (...) {
    return GO_ERR_INTERNAL;
  }
}

go_status go_orbit_report_json(const go_context* ctx, long long index, int dump_matrices,
                               char** out) {
  if (!ctx)
    return GO_ERR_USAGE;
  if (index < 0 || index >= static_cast<long long>(ctx->impl.orbits.size()))
    return GO_ERR_RANGE;
  try {
    gorb::Json rec =
        gorb::orbit_deep_report(ctx->impl.orbits[static_cast<std::size_t>(index)],
                                dump_matrices != 0);
    return string_result(rec.dump(2) + "\n", out);
  } catch (const std::logic_error&) {
    return GO_ERR_VERIFY;
  } catch (...) {
    return GO_ERR_INTERNAL;
  }
}

go_status go_orbit_report_for_tableau(const go_context* ctx, const char* tableau_json,
                                      const char* half, int dump_matrices, char** out) {
  if (!ctx || !tableau_json)
    return GO_ERR_USAGE;
  std::string half_name = half ? half : "";
  if (!half_name.empty() && half_name != "prime" && half_name != "doubleprime")
    return GO_ERR_USAGE;
  try {
    gorb::Json parsed = gorb::Json::parse(tableau_json);
    gorb::SymmetricTableau t = gorb::tableau_from_json(ctx->impl.spec, parsed);
    gorb::CoefficientFunction c = gorb::from_tableau(t);
    if (!(gorb::dimension_vector(c) == ctx->impl.delta))
      return GO_ERR_BAD_INPUT;
    for (const gorb::Orbit& o : ctx->impl.orbits) {
      if (!(o.c == c))
        continue;
      if (o.split == gorb::SplitTag::Prime && half_name == "doubleprime")
        continue;
      if (o.split == gorb::SplitTag::DoublePrime && half_name != "doubleprime")
        continue;
      if (o.split == gorb::SplitTag::NotSplit && half_name == "doubleprime")
        return GO_ERR_BAD_INPUT;
      gorb::Json rec = gorb::orbit_deep_report(o, dump_matrices != 0);
      return string_result(rec.dump(2) + "\n", out);
    }
    return GO_ERR_BAD_INPUT;
  } catch (const gorb::Json::exception&) {
    return GO_ERR_BAD_INPUT;
  } catch (const std::invalid_argument&) {
    return GO_ERR_BAD_INPUT;
  } catch (const std::logic_error&) {
    return GO_ERR_VERIFY;
  } catch (...) {
    return GO_ERR_INTERNAL;
  }
}

go_status go_verify(int max_m, long long max_total_dim, char** summary) {
  if (max_m < 1 || max_total_dim < 1)
    return GO_ERR_USAGE;
  try {
    std::string log;
    bool ok = gorb::verify_sweep(max_m, max_total_dim, log);
    go_status rc = string_result(log, summary);
    if (rc != GO_OK)
      return rc;
    return ok ? GO_OK : GO_ERR_VERIFY;
  } catch (...) {
    return GO_ERR_INTERNAL;
  }
}

void go_string_free(char* s) { delete[] s; }

} // extern "C"
