#include "tableaux.hh"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gorb;

namespace {

const Family kFamilies[] = {Family::EvenSymplectic, Family::EvenOrthogonal,
                            Family::OddSymplectic, Family::OddOrthogonalFull,
                            Family::OddOrthogonalSpecial};

std::vector<std::vector<long long>> positive_lists(const GradingSpec& spec, long long max_total) {
  // Every admissible positive-side dimension list with total dimension at
  // most max_total, entries >= 1.
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur((std::size_t)spec.m, 1);
  auto total = [&]() {
    long long t = 0;
    for (std::size_t k = 0; k < cur.size(); ++k)
      t += 2 * cur[k];
    if (spec.odd_case())
      t -= cur.back(); // the middle block is not mirrored
    return t;
  };
  while (true) {
    if (total() <= max_total) {
      bool ok = true;
      if (spec.family == Family::OddSymplectic && cur.back() % 2 != 0)
        ok = false;
      if (ok)
        out.push_back(cur);
    }
    std::size_t k = cur.size();
    while (k > 0) {
      ++cur[k - 1];
      if (total() <= max_total)
        break;
      cur[k - 1] = 1;
      --k;
    }
    if (k == 0)
      break;
  }
  return out;
}

} // namespace

TEST_CASE("dimension vector mirrors the positive side") {
  GradingSpec spec(Family::EvenSymplectic, 2);
  DimensionVector d = DimensionVector::from_positive_list(spec, {1, 2});
  CHECK(d.at(3) == 1);
  CHECK(d.at(1) == 2);
  CHECK(d.at(-1) == 2);
  CHECK(d.at(-3) == 1);
  CHECK(d.total() == 6);
  CHECK(d.all_positive());

  GradingSpec ospec(Family::OddOrthogonalFull, 2);
  DimensionVector od = DimensionVector::from_positive_list(ospec, {2, 3});
  CHECK(od.at(2) == 2);
  CHECK(od.at(0) == 3);
  CHECK(od.at(-2) == 2);
  CHECK(od.total() == 7);

  CHECK_THROWS_AS(DimensionVector::from_positive_list(spec, {1}), std::invalid_argument);
  // The symplectic form forces an even middle block in the odd family.
  GradingSpec sp(Family::OddSymplectic, 2);
  CHECK_THROWS_AS(DimensionVector::from_positive_list(sp, {1, 3}), std::invalid_argument);
}

TEST_CASE("tableau round trips") {
  for (Family f : kFamilies) {
    for (int m = 1; m <= 2; ++m) {
      GradingSpec spec(f, m);
      for (const auto& pos : positive_lists(spec, 8)) {
        DimensionVector delta = DimensionVector::from_positive_list(spec, pos);
        for (const CoefficientFunction& c : enumerate_coefficients(spec, delta)) {
          CHECK(dimension_vector(c) == delta);
          SymmetricTableau t = to_tableau(c);
          t.validate();
          CHECK(from_tableau(t) == c);
          RankTableau r = theta(t);
          r.validate(&delta);
          CHECK(theta_inv(r) == t);
        }
      }
    }
  }
}

TEST_CASE("tableau symmetry and diagonal doubling") {
  GradingSpec spec(Family::EvenOrthogonal, 2);
  DimensionVector delta = DimensionVector::from_positive_list(spec, {2, 3});
  for (const CoefficientFunction& c : enumerate_coefficients(spec, delta)) {
    SymmetricTableau t = to_tableau(c);
    for (const auto& [cell, v] : t.entries) {
      CHECK(t.at(-cell.second, -cell.first) == v);
      // Doubled diagonals always carry both copies of an orbit.
      if (cell.first + cell.second == 0)
        CHECK(v % 2 == 0);
    }
  }
}

TEST_CASE("enumeration is complete, distinct and ordered") {
  GradingSpec spec(Family::EvenSymplectic, 2);
  DimensionVector delta = DimensionVector::from_positive_list(spec, {1, 2});
  auto all = enumerate_coefficients(spec, delta);
  CHECK(all.size() == 8);
  CHECK(std::is_sorted(all.begin(), all.end()));
  std::set<std::vector<long long>> seen;
  for (const auto& c : all)
    CHECK(seen.insert(c.values).second);
}

TEST_CASE("quiver decomposition lists graded intervals") {
  GradingSpec spec(Family::EvenSymplectic, 2);
  for (const TauOrbit& o : tau_orbits(spec)) {
    auto segs = quiver_decomposition(o);
    CHECK(segs.size() == o.boxes.size());
    std::vector<std::pair<int, int>> want;
    for (const IBox& b : o.boxes)
      want.push_back({b.j, b.i});
    std::sort(want.begin(), want.end());
    CHECK(segs == want);
  }
}
