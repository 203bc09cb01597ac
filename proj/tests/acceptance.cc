// Acceptance harness: one line per criterion, "PASS" or "FAIL", with
// details on stderr. Exit status 0 iff every criterion passes.

#include "golden.hh"
#include "jmrealize.hh"
#include "report.hh"

#include <graded_orbits.h>

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gorb;
using namespace gorb::testing;

namespace {

struct Harness {
  int failures = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      detail << "  - " << what << "\n";
    }
  }

  bool run(int number, const std::string& title, const std::function<void(Harness&)>& body) {
    failures = 0;
    detail.str("");
    try {
      body(*this);
    } catch (const std::exception& e) {
      expect(false, std::string("exception: ") + e.what());
    }
    bool ok = failures == 0;
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", number, title.c_str());
    if (!ok)
      std::cerr << detail.str();
    return ok;
  }
};

long long capi_orbit_count(const GradingSpec& spec, const std::vector<long long>& positive) {
  go_context* ctx = nullptr;
  go_status rc = go_context_create(family_name(spec.family).c_str(), spec.m, positive.data(),
                                   positive.size(), &ctx);
  if (rc != GO_OK)
    return -1;
  long long n = -1;
  go_orbit_count(ctx, &n);
  go_context_free(ctx);
  return n;
}

void check_example_full(Harness& h, const GoldenExample& ex) {
  DimensionVector delta = DimensionVector::from_positive_list(ex.spec, ex.delta);
  h.expect(dim_g2(ex.spec, delta) == Int(ex.dim_g2), "dim of the degree-2 piece");
  auto orbits = enumerate_orbits(ex.spec, delta);
  h.expect(orbits.size() == ex.orbit_count, "orbit count");
  h.expect(capi_orbit_count(ex.spec, ex.delta) == (long long)ex.orbit_count,
           "orbit count through the C interface");
  for (std::size_t g = 0; g < ex.orbits.size(); ++g) {
    const GoldenOrbit& go = ex.orbits[g];
    CoefficientFunction c = make_c(ex.spec, go.coeffs);
    h.expect(orbit_dimension(c) == Int(go.dimension),
             "dimension of reference orbit #" + std::to_string(g));
    h.expect(jordan_type(c).multiplicative() == go.jordan,
             "Jordan type of reference orbit #" + std::to_string(g));
    h.expect(find_orbit(orbits, c) != nullptr || find_orbit(orbits, c, SplitTag::Prime),
             "reference orbit #" + std::to_string(g) + " enumerated");
  }
  std::set<std::pair<std::size_t, std::size_t>> want(ex.edges.begin(), ex.edges.end());
  h.expect(edge_set_by_golden(ex, orbits) == want, "covering relations of the closure order");
}

struct LeviRef {
  std::vector<std::pair<IBox, long long>> coeffs;
  std::string display;
  long long count;
  std::vector<std::pair<std::vector<long long>, std::vector<long long>>> symbols; // may be empty
};

void check_levi_table(Harness& h, const GradingSpec& spec, const std::vector<LeviRef>& refs,
                      const std::string& tag) {
  for (std::size_t k = 0; k < refs.size(); ++k) {
    const LeviRef& g = refs[k];
    CoefficientFunction c = make_c(spec, g.coeffs);
    LeviData levi = levi_factorization(c);
    h.expect(levi.display == g.display, tag + " #" + std::to_string(k) + " stabilizer factors");
    h.expect(local_system_count(c) == Int(g.count),
             tag + " #" + std::to_string(k) + " local system count");
    SymbolSet syms = symbols_for_orbit(c);
    h.expect((long long)syms.symbols.size() == g.count,
             tag + " #" + std::to_string(k) + " symbol count");
    if (!g.symbols.empty()) {
      std::set<std::pair<std::vector<long long>, std::vector<long long>>> want(
          g.symbols.begin(), g.symbols.end());
      h.expect(symbol_row_set(syms) == want, tag + " #" + std::to_string(k) + " symbol rows");
    }
  }
}

} // namespace

int main() {
  Harness h;
  int failed = 0;

  failed += !h.run(1, "symplectic rank 3, two grading levels: full classification", [](Harness& h) {
    check_example_full(h, example_sp6());
  });

  failed += !h.run(2, "orthogonal rank 5, two grading levels: full classification", [](Harness& h) {
    check_example_full(h, example_so10());
  });

  failed += !h.run(3, "symplectic rank 6 with middle block: full classification", [](Harness& h) {
    check_example_full(h, example_sp12());
  });

  failed += !h.run(4, "full orthogonal group, 9-dim space: full classification", [](Harness& h) {
    check_example_full(h, example_o9(Family::OddOrthogonalFull));
    GoldenExample ex = example_o9(Family::OddOrthogonalSpecial);
    DimensionVector delta = DimensionVector::from_positive_list(ex.spec, ex.delta);
    auto orbits = enumerate_orbits(ex.spec, delta);
    h.expect(orbits.size() == 14, "special orthogonal group sees the same 14 orbits");
    for (const Orbit& o : orbits)
      h.expect(o.split == SplitTag::NotSplit, "no orbit splits for this input");
  });

  failed += !h.run(5, "special orthogonal group, 6-dim space: split pair", [](Harness& h) {
    GoldenExample ex = example_so6();
    check_example_full(h, ex);
    DimensionVector delta = DimensionVector::from_positive_list(ex.spec, ex.delta);
    auto orbits = enumerate_orbits(ex.spec, delta);
    CoefficientFunction c = make_c(ex.spec, ex.orbits[2].coeffs);
    const Orbit* prime = find_orbit(orbits, c, SplitTag::Prime);
    const Orbit* second = find_orbit(orbits, c, SplitTag::DoublePrime);
    h.expect(prime && second, "both halves of the split orbit enumerated");
    if (prime && second) {
      h.expect(orbit_dimension(prime->c) == Int(2), "split pair has dimension 2");
      h.expect(!closure_known(*prime, *second), "relation between the halves stays open");
      Realization rp = realize(c, SplitTag::Prime);
      Realization rs = realize(c, SplitTag::DoublePrime);
      verify_triple(rp);
      verify_triple(rs);
      h.expect(!(rp.E == rs.E), "the two halves get different representatives");
    }
  });

  failed += !h.run(6, "stabilizer factors, local systems and symbols on the references",
                   [](Harness& h) {
    check_levi_table(
        h, GradingSpec(Family::EvenSymplectic, 2),
        {
            {{{{3, -3, 0}, 1}, {{1, -1, 0}, 1}},
             "Sp(6)",
             4,
             {{{0, 4}, {2}}, {{0, 2}, {4}}, {{0}, {2, 4}}, {{0, 2, 4}, {}}}},
            {{{{3, -1, 0}, 1}}, "GL(3)", 1, {}},
            {{{{3, -3, 0}, 1}, {{1, 1, 0}, 1}}, "GL(1) x Sp(4)", 2, {{{}, {2}}, {{2}, {}}}},
            {{{{3, 1, 0}, 1}, {{1, -1, 0}, 1}}, "GL(2) x Sp(2)", 2, {{{}, {1}}, {{1}, {}}}},
            {{{{3, 3, 0}, 1}, {{1, -1, 0}, 2}},
             "GL(1) x Sp(4)",
             2,
             {{{0, 2}, {3}}, {{0, 3}, {2}}}},
            {{{{3, 1, 0}, 1}, {{1, 1, 0}, 1}}, "GL(2) x GL(1)", 1, {}},
            {{{{3, 3, 0}, 1}, {{1, 1, 0}, 1}, {{1, -1, 0}, 1}},
             "GL(1) x GL(1) x Sp(2)",
             2,
             {{{}, {1}}, {{1}, {}}}},
            {{{{3, 3, 0}, 1}, {{1, 1, 0}, 2}}, "GL(1) x GL(2)", 1, {}},
        },
        "sp6");
    check_levi_table(
        h, GradingSpec(Family::EvenOrthogonal, 2),
        {
            {{{{1, 1, 0}, 1}, {{3, -3, 0}, 1}}, "GL(1) x SO(8)", 1, {{{2}, {2}}}},
            {{{{3, 1, 0}, 1}, {{3, -1, 0}, 1}}, "GL(2) x GL(3)", 1, {}},
            {{{{3, 3, 0}, 1}, {{3, 1, 0}, 1}, {{1, -1, 0}, 1}},
             "GL(1) x GL(2) x SO(4)",
             1,
             {{{1}, {1}}}},
            {{{{3, 3, 0}, 2}, {{1, 1, 0}, 1}, {{1, -1, 0}, 1}},
             "GL(2) x GL(1) x SO(4)",
             1,
             {{{1}, {1}}}},
        },
        "so10");
    check_levi_table(
        h, GradingSpec(Family::OddOrthogonalFull, 3),
        {
            {{{{0, 0, 0}, 1}, {{2, -2, 0}, 1}, {{4, -4, 0}, 1}},
             "SO(9)",
             4,
             {{{0, 4}, {2}}, {{0, 2}, {4}}, {{2, 4}, {0}}, {{0, 2, 4}, {}}}},
            {{{{2, 2, 0}, 1}, {{0, 0, 0}, 2}, {{4, -4, 0}, 1}},
             "GL(1) x SO(7)",
             2,
             {{{0, 4}, {1}}, {{1, 4}, {0}}}},
            {{{{4, 4, 0}, 1}, {{0, 0, 0}, 1}, {{2, -2, 0}, 2}},
             "GL(1) x SO(7)",
             2,
             {{{0, 2}, {3}}, {{0, 3}, {2}}}},
            {{{{0, 0, 0}, 2}, {{4, 2, 0}, 1}, {{2, -2, 0}, 1}},
             "GL(2) x SO(5)",
             2,
             {{{0, 3}, {1}}, {{1, 3}, {0}}}},
            {{{{4, 4, 0}, 1}, {{2, 2, 0}, 1}, {{0, 0, 0}, 2}, {{2, -2, 0}, 1}},
             "GL(1) x GL(1) x SO(5)",
             2,
             {{{0, 3}, {1}}, {{1, 3}, {0}}}},
        },
        "o9");
    check_levi_table(
        h, GradingSpec(Family::OddOrthogonalSpecial, 2),
        {
            {{{{2, -2, 0}, 2}}, "SO(6)", 1, {}},
            {{{{2, 2, 0}, 1}, {{0, 0, 0}, 1}, {{2, -2, 0}, 1}},
             "GL(1) x SO(4)",
             2,
             {{{0}, {2}}, {{0, 2}, {}}}},
            {{{{2, 2, 0}, 1}, {{2, 0, 0}, 1}}, "GL(1) x GL(2)", 1, {}},
        },
        "so6");
    // Middle-block symplectic family: exactly one system per orbit.
    GoldenExample sp12 = example_sp12();
    DimensionVector delta = DimensionVector::from_positive_list(sp12.spec, sp12.delta);
    for (const Orbit& o : enumerate_orbits(sp12.spec, delta))
      h.expect(local_system_count(o.c) == Int(1), "sp12 orbit has one local system");
  });

  failed += !h.run(7, "closed-form rank-1 families", [](Harness& h) {
    GradingSpec sp(Family::EvenSymplectic, 1);
    for (long long alpha = 1; alpha <= 6; ++alpha)
      for (long long beta = 0; beta <= 2; ++beta) {
        CoefficientFunction c =
            make_c(sp, {{IBox{1, -1, 0}, alpha}, {IBox{1, 1, 0}, beta}});
        long long delta = alpha + beta;
        h.expect(orbit_dimension(c) == Int(alpha * (delta - alpha) + alpha * (alpha + 1) / 2),
                 "symplectic dimension at alpha=" + std::to_string(alpha));
        h.expect(local_system_count(c) == Int(2),
                 "symplectic local systems at alpha=" + std::to_string(alpha));
        SymbolSet syms = symbols_for_orbit(c);
        h.expect(syms.symbols.size() == 2 && syms.verified,
                 "symplectic symbols at alpha=" + std::to_string(alpha));
        Realization r = realize(c);
        verify_triple(r);
        h.expect(dimension_by_eigencount(r) == orbit_dimension(c),
                 "symplectic matrix oracle at alpha=" + std::to_string(alpha));
      }
    GradingSpec so(Family::EvenOrthogonal, 1);
    for (long long alpha = 1; alpha <= 4; ++alpha)
      for (long long beta = 0; beta <= 2; ++beta) {
        CoefficientFunction c =
            make_c(so, {{IBox{1, -1, 0}, alpha}, {IBox{1, 1, 0}, beta}});
        h.expect(orbit_dimension(c) == Int(alpha * (2 * alpha + 2 * beta - 1)),
                 "orthogonal dimension at alpha=" + std::to_string(alpha));
        h.expect(local_system_count(c) == Int(1),
                 "orthogonal local systems at alpha=" + std::to_string(alpha));
        SymbolSet syms = symbols_for_orbit(c);
        std::vector<long long> row;
        for (long long v = 1; v <= 2 * alpha - 1; v += 2)
          row.push_back(v);
        h.expect(syms.symbols.size() == 1 && syms.symbols[0].top == row &&
                     syms.symbols[0].bottom == row && syms.symbols[0].defect == 0,
                 "orthogonal symbol at alpha=" + std::to_string(alpha));
        Realization r = realize(c);
        verify_triple(r);
        h.expect(dimension_by_eigencount(r) == orbit_dimension(c),
                 "orthogonal matrix oracle at alpha=" + std::to_string(alpha));
      }
  });

  failed += !h.run(8, "oracle sweep over all inputs with m <= 3, total dim <= 12",
                   [](Harness& h) {
    char* summary = nullptr;
    go_status rc = go_verify(3, 12, &summary);
    h.expect(rc == GO_OK, "sweep reports failures");
    if (summary) {
      std::istringstream in(summary);
      std::string first;
      std::getline(in, first);
      std::cerr << "  sweep: " << first << "\n";
      go_string_free(summary);
    }
  });

  failed += !h.run(9, "counting invariants across families", [](Harness& h) {
    for (Family f : {Family::EvenSymplectic, Family::EvenOrthogonal, Family::OddSymplectic,
                     Family::OddOrthogonalFull, Family::OddOrthogonalSpecial})
      for (int m = 1; m <= 6; ++m) {
        GradingSpec spec(f, m);
        long long expected = spec.odd_case() ? (long long)m * m : (long long)m * (m + 1);
        h.expect((long long)tau_orbits(spec).size() == expected,
                 family_name(f) + " m=" + std::to_string(m) + ": duality orbit count");

        // One small input per (family, m): all graded pieces of dimension 1
        // (2 in the symplectic middle block).
        std::vector<long long> positive((std::size_t)m, 1);
        if (f == Family::OddSymplectic)
          positive.back() = 2;
        DimensionVector delta = DimensionVector::from_positive_list(spec, positive);
        for (const Orbit& o : enumerate_orbits(spec, delta)) {
          if (o.split != SplitTag::NotSplit)
            h.expect(delta.at(0) % 2 == 0, "split orbit forces an even middle block");
          LeviData levi = levi_factorization(o.c);
          if (!levi.factors.empty() && levi.factors.back().type == "Sp")
            h.expect(levi.factors.back().n % 2 == 0, "symplectic factor size is even");
          h.expect(Int(symbols_for_orbit(o.c).symbols.size()) == local_system_count(o.c),
                   "one symbol per local system");
        }
      }
  });

  return failed == 0 ? 0 : 1;
}
