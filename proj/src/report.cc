#include "report.hh"

#include <algorithm>
#include <sstream>

namespace gorb {

namespace {

std::vector<long long> positive_side(const DimensionVector& d) {
  std::vector<long long> out;
  for (int i : d.spec.interval())
    if (i >= 0)
      out.push_back(d.at(i));
  return out;
}

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

Json quartic_json(const Quartic& q) {
  return Json::array({q.a.str(), q.b.str(), q.c.str(), q.d.str()});
}

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(quartic_json(Quartic(m(r, c))));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_json(const QuarticMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(quartic_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json symbols_json(const SymbolSet& s) {
  Json arr = Json::array();
  for (const Symbol& sym : s.symbols) {
    Json rows = Json::array({Json(sym.top), Json(sym.bottom)});
    arr.push_back(Json{{"rows", std::move(rows)}, {"defect", sym.defect}});
  }
  return arr;
}

} // namespace

Context::Context(const GradingSpec& s, const DimensionVector& d) : spec(s), delta(d) {
  if (!delta.all_positive())
    throw std::invalid_argument("every graded piece must be nonzero: all delta entries >= 1");
  orbits = enumerate_orbits(spec, delta);
}

Json tableau_json(const SymmetricTableau& t) {
  Json entries = Json::array();
  for (int i : t.spec.interval())
    for (int j = -t.spec.max_index(); j <= i; j += 2)
      entries.push_back(Json::array({i, j, t.at(i, j)}));
  return Json{{"family", family_name(t.spec.family)}, {"m", t.spec.m}, {"entries", entries}};
}

Json rank_tableau_json(const RankTableau& r) {
  Json entries = Json::array();
  for (int i : r.spec.interval())
    for (int j = -r.spec.max_index(); j <= i; j += 2)
      entries.push_back(Json::array({i, j, r.at(i, j)}));
  return Json{{"family", family_name(r.spec.family)}, {"m", r.spec.m}, {"entries", entries}};
}

SymmetricTableau tableau_from_json(const GradingSpec& spec, const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("m") || !j.contains("entries"))
    throw std::invalid_argument("tableau json: need family, m and entries");
  if (j["family"].get<std::string>() != family_name(spec.family) || j["m"].get<int>() != spec.m)
    throw std::invalid_argument("tableau json: family or m does not match the request");
  SymmetricTableau t(spec);
  for (const Json& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("tableau json: each entry is [i, j, value]");
    int i = e[0].get<int>(), jj = e[1].get<int>();
    if (!spec.contains_index(i) || !spec.contains_index(jj) || i < jj)
      throw std::invalid_argument("tableau json: cell outside the diagram");
    t.entries[{i, jj}] = e[2].get<long long>();
  }
  t.validate();
  return t;
}

Json orbit_record(const Orbit& o) {
  SymmetricTableau t = to_tableau(o.c);
  Partition jt = jordan_type(o.c);
  LeviData levi = levi_factorization(o.c);
  SymbolSet syms = symbols_for_orbit(o.c);
  Json rec;
  rec["name"] = o.name;
  rec["dimension"] = to_ll(orbit_dimension(o.c));
  rec["jordan"] = jt.multiplicative();
  rec["split"] = split_tag_name(o.split);
  rec["parity"] =
      parity_defined(o) ? (parity(o) == Parity::Even ? "even" : "odd") : "undefined";
  rec["tableau"] = tableau_json(t);
  rec["rank_tableau"] = rank_tableau_json(theta(t));
  Json factors = Json::array();
  for (const LeviFactor& f : levi.factors)
    factors.push_back(Json{{"type", f.type}, {"n", f.n}, {"partition", f.part.parts}});
  rec["levi"] = Json{{"display", levi.display},
                     {"lambda", levi.lambda},
                     {"block_sizes", levi.block_sizes},
                     {"factors", std::move(factors)}};
  rec["local_systems"] = to_ll(local_system_count(o.c));
  rec["symbols"] = symbols_json(syms);
  rec["symbols_verified"] = syms.verified;
  return rec;
}

namespace {

Json context_header(const Context& ctx) {
  Json out;
  out["family"] = family_name(ctx.spec.family);
  out["m"] = ctx.spec.m;
  out["delta"] = positive_side(ctx.delta);
  out["dim_g0"] = to_ll(dim_g0(ctx.spec, ctx.delta));
  out["dim_g2"] = to_ll(dim_g2(ctx.spec, ctx.delta));
  out["orbit_count"] = ctx.orbits.size();
  return out;
}

} // namespace

std::string enumerate_json(const Context& ctx) {
  Json out = context_header(ctx);
  Json orbits = Json::array();
  for (const Orbit& o : ctx.orbits)
    orbits.push_back(orbit_record(o));
  out["orbits"] = std::move(orbits);
  return out.dump(2) + "\n";
}

std::string enumerate_tsv(const Context& ctx) {
  std::ostringstream os;
  os << "name\tdimension\tjordan\tsplit\tparity\tlevi\tlocal_systems\n";
  for (const Orbit& o : ctx.orbits) {
    LeviData levi = levi_factorization(o.c);
    os << o.name << '\t' << orbit_dimension(o.c) << '\t' << jordan_type(o.c).multiplicative()
       << '\t' << split_tag_name(o.split) << '\t'
       << (parity_defined(o) ? (parity(o) == Parity::Even ? "even" : "odd") : "undefined")
       << '\t' << levi.display << '\t' << local_system_count(o.c) << '\n';
  }
  return os.str();
}

std::string hasse_dot(const Context& ctx) {
  std::ostringstream os;
  os << "digraph closure_order {\n  rankdir=BT;\n";
  for (const Orbit& o : ctx.orbits)
    os << "  \"" << o.name << "\";\n";
  for (const HasseEdge& e : hasse_edges(ctx.orbits))
    os << "  \"" << ctx.orbits[e.lower].name << "\" -> \"" << ctx.orbits[e.upper].name
       << "\";\n";
  for (std::size_t k = 0; k + 1 < ctx.orbits.size(); ++k)
    if (ctx.orbits[k].split == SplitTag::Prime &&
        ctx.orbits[k + 1].split == SplitTag::DoublePrime &&
        ctx.orbits[k].c == ctx.orbits[k + 1].c)
      os << "  \"" << ctx.orbits[k].name << "\" -> \"" << ctx.orbits[k + 1].name
         << "\" [dir=none, style=dashed, label=\"unknown\"];\n";
  os << "}\n";
  return os.str();
}

Json orbit_deep_report(const Orbit& o, bool dump_matrices) {
  Json rec = orbit_record(o);
  Realization r = realize(o.c, o.split);
  verify_triple(r);
  Ambient amb = embed(r);
  verify_embedding(r, amb);

  Int dim_formula = orbit_dimension(o.c);
  Int dim_eigen = dimension_by_eigencount(r);
  Int dim_rank = dimension_by_tangent_rank(r);
  Partition jordan_m = jordan_from_matrices(r);
  RankTableau rt_m = rank_tableau_from_matrices(r);
  bool rt_match = rt_m == theta(to_tableau(o.c));
  if (dim_eigen != dim_formula || dim_rank != dim_formula)
    throw std::logic_error("oracle mismatch: dimension");
  if (!(jordan_m == jordan_type(o.c)))
    throw std::logic_error("oracle mismatch: Jordan type");
  if (!rt_match)
    throw std::logic_error("oracle mismatch: rank tableau");

  rec["verify"] = Json{{"triple", "ok"}, {"embedding", "ok"}};
  rec["oracles"] = Json{{"dimension_formula", to_ll(dim_formula)},
                        {"dimension_eigencount", to_ll(dim_eigen)},
                        {"dimension_tangent_rank", to_ll(dim_rank)},
                        {"jordan_matrices", jordan_m.multiplicative()},
                        {"rank_tableau_matches", rt_match}};
  if (dump_matrices) {
    Json legend = Json::array();
    for (const BasisLabel& l : r.labels)
      legend.push_back(Json{{"box", Json::array({l.b.i, l.b.j, l.b.k})},
                            {"copy", l.s},
                            {"degree", l.i}});
    Json amb_legend = Json::array();
    for (auto [deg, pos] : amb.labels)
      amb_legend.push_back(Json::array({deg, pos}));
    rec["matrices"] = Json{{"legend", std::move(legend)},
                           {"E", matrix_json(r.E)},
                           {"H", matrix_json(r.H)},
                           {"F", matrix_json(r.F)},
                           {"gram", matrix_json(r.gram)},
                           {"ambient_legend", std::move(amb_legend)},
                           {"ambient_gram", matrix_json(amb.gram)},
                           {"T", matrix_json(amb.T)}};
  }
  return rec;
}

namespace {

struct SweepState {
  std::ostringstream log;
  long long checks = 0;
  long long failures = 0;

  void check(bool ok, const std::string& where, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      log << "FAIL " << where << ": " << what << "\n";
    }
  }
};

std::string config_name(const GradingSpec& spec, const DimensionVector& delta) {
  std::ostringstream os;
  os << family_name(spec.family) << " m=" << spec.m << " delta=";
  bool first = true;
  for (long long v : positive_side(delta)) {
    if (!first)
      os << ',';
    first = false;
    os << v;
  }
  return os.str();
}

void sweep_config(SweepState& st, const GradingSpec& spec, const DimensionVector& delta) {
  std::string where = config_name(spec, delta);
  std::vector<Orbit> orbits = enumerate_orbits(spec, delta);

  Int g2 = dim_g2(spec, delta);
  Int g0 = dim_g0(spec, delta);

  for (const Orbit& o : orbits) {
    st.check(dimension_vector(o.c) == delta, where, "coefficient function has wrong delta");
    SymmetricTableau t = to_tableau(o.c);
    t.validate();
    st.check(from_tableau(t) == o.c, where, "tableau round trip");
    RankTableau rt = theta(t);
    rt.validate(&delta);
    st.check(theta_inv(rt) == t, where, "rank tableau round trip");

    Int dim = orbit_dimension(o.c);
    st.check(dim >= 0 && dim <= g2, where, "dimension out of range");

    Realization r = realize(o.c, o.split);
    try {
      verify_triple(r);
    } catch (const std::logic_error& e) {
      st.check(false, where, e.what());
    }
    Ambient amb = embed(r);
    try {
      verify_embedding(r, amb);
    } catch (const std::logic_error& e) {
      st.check(false, where, e.what());
    }
    st.check(g0_dimension_from_matrices(r) == g0, where, "dim g0 oracle");
    st.check(g2_dimension_from_matrices(r) == g2, where, "dim g2 oracle");
    st.check(dimension_by_eigencount(r) == dim, where, "dimension eigencount oracle");
    st.check(dimension_by_tangent_rank(r) == dim, where, "dimension tangent rank oracle");
    st.check(jordan_from_matrices(r) == jordan_type(o.c), where, "Jordan oracle");
    st.check(rank_tableau_from_matrices(r) == rt, where, "rank tableau oracle");

    LeviData levi = levi_factorization(o.c);
    long long tiles = 0;
    for (std::size_t k = 0; k < levi.block_sizes.size(); ++k) {
      bool classical = (k + 1 == levi.factors.size()) && levi.factors[k].type != "GL";
      tiles += classical ? levi.block_sizes[k] : 2 * levi.block_sizes[k];
    }
    st.check(tiles == delta.total(), where, "Levi blocks tile the space");
    if (!levi.factors.empty() && levi.factors.back().type == "Sp")
      st.check(levi.factors.back().n % 2 == 0, where, "symplectic factor size must be even");
    for (const LeviFactor& f : levi.factors)
      st.check(f.part.sum() == f.n, where, "factor partition sums to its size");

    SymbolSet syms = symbols_for_orbit(o.c);
    st.check(Int(syms.symbols.size()) == local_system_count(o.c), where,
             "symbol count vs local system count");
    st.check(syms.verified, where, "symbol shape outside verified coverage");

    if (o.split != SplitTag::NotSplit)
      st.check(delta.at(0) % 2 == 0, where, "split orbit needs an even middle dimension");

    if (parity_defined(o)) {
      st.check(parity(o) == parity_from_isotropic(r), where, "parity oracle");
      IsotropicData iso = isotropic_subspace(r);
      st.check(2 * static_cast<long long>(iso.span.size()) ==
                   static_cast<long long>(r.dim()),
               where, "isotropic subspace has half dimension");
      bool isotropic = true;
      for (std::size_t a : iso.span)
        for (std::size_t b : iso.span)
          if (!(r.gram(a, b) == 0))
            isotropic = false;
      st.check(isotropic, where, "isotropic subspace pairs to zero");
    }
  }

  // Closure order axioms over the comparable part.
  std::size_t n = orbits.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!closure_known(orbits[a], orbits[b]))
        continue;
      bool ab = closure_leq(orbits[a], orbits[b]);
      bool ba = closure_leq(orbits[b], orbits[a]);
      if (a != b && ab && ba)
        st.check(false, where, "closure order antisymmetry");
      if (!ab)
        continue;
      for (std::size_t c2 = 0; c2 < n; ++c2) {
        if (!closure_known(orbits[b], orbits[c2]) || !closure_known(orbits[a], orbits[c2]))
          continue;
        if (closure_leq(orbits[b], orbits[c2]))
          st.check(closure_leq(orbits[a], orbits[c2]), where, "closure order transitivity");
      }
    }

  st.log << "ok   " << where << ": " << orbits.size() << " orbits\n";
}

void sweep_deltas(SweepState& st, const GradingSpec& spec, long long max_total,
                  std::vector<long long>& positives, std::size_t idx) {
  if (idx == static_cast<std::size_t>(spec.m)) {
    long long total = 0;
    for (std::size_t k = 0; k < positives.size(); ++k)
      total += 2 * positives[k];
    if (spec.odd_case())
      total -= positives.back(); // the middle entry is not doubled
    if (total > max_total)
      return;
    if (spec.family == Family::OddSymplectic && positives.back() % 2 != 0)
      return;
    sweep_config(st, spec, DimensionVector::from_positive_list(spec, positives));
    return;
  }
  for (long long v = 1; v <= max_total; ++v) {
    positives[idx] = v;
    long long partial = 0;
    for (std::size_t k = 0; k <= idx; ++k)
      partial += positives[k];
    if (partial > max_total)
      break;
    sweep_deltas(st, spec, max_total, positives, idx + 1);
  }
}

} // namespace

bool verify_sweep(int max_m, long long max_total_dim, std::string& summary) {
  SweepState st;
  for (Family f : {Family::EvenSymplectic, Family::EvenOrthogonal, Family::OddSymplectic,
                   Family::OddOrthogonalFull, Family::OddOrthogonalSpecial})
    for (int m = 1; m <= max_m; ++m) {
      GradingSpec spec(f, m);
      long long expected = spec.odd_case() ? static_cast<long long>(m) * m
                                           : static_cast<long long>(m) * (m + 1);
      st.check(static_cast<long long>(tau_orbits(spec).size()) == expected,
               family_name(f) + " m=" + std::to_string(m), "duality orbit count");
      std::vector<long long> positives(m, 1);
      sweep_deltas(st, spec, max_total_dim, positives, 0);
    }
  std::ostringstream head;
  head << "checks: " << st.checks << ", failures: " << st.failures << "\n";
  summary = head.str() + st.log.str();
  return st.failures == 0;
}

} // namespace gorb
