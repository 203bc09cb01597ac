#include "grading.hh"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gorb;

namespace {

const Family kFamilies[] = {Family::EvenSymplectic, Family::EvenOrthogonal,
                            Family::OddSymplectic, Family::OddOrthogonalFull,
                            Family::OddOrthogonalSpecial};

} // namespace

TEST_CASE("family names round trip") {
  for (Family f : kFamilies) {
    auto back = family_from_name(family_name(f));
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
  CHECK(!family_from_name("nonsense").has_value());
}

TEST_CASE("index interval and box count") {
  for (Family f : kFamilies) {
    for (int m = 1; m <= 6; ++m) {
      GradingSpec spec(f, m);
      auto iv = spec.interval();
      CHECK((int)iv.size() == spec.size_I());
      CHECK(std::is_sorted(iv.rbegin(), iv.rend()));
      for (int i : iv)
        CHECK(spec.contains_index(i));
      CHECK(!spec.contains_index(spec.max_index() + 1));

      // Orbits of the duality: m(m+1) in the even families, m^2 in the odd
      // ones, independent of epsilon.
      long long expected = spec.odd_case() ? (long long)m * m : (long long)m * (m + 1);
      CHECK((long long)tau_orbits(spec).size() == expected);
    }
  }
}

TEST_CASE("tau is an involution matching diagonal copies") {
  for (Family f : kFamilies) {
    for (int m = 1; m <= 4; ++m) {
      GradingSpec spec(f, m);
      for (const IBox& b : enumerate_boxes(spec)) {
        IBox t = tau(spec, b);
        CHECK(valid_box(spec, t));
        CHECK(tau(spec, t) == b);
        if (!on_diagonal(b)) {
          CHECK(t.i == -b.j);
          CHECK(t.j == -b.i);
        } else if (spec.mu_max() == 1) {
          CHECK(t.k == 1 - b.k);
        } else {
          CHECK(t == b);
        }
      }
    }
  }
}

TEST_CASE("support and top half") {
  GradingSpec spec(Family::EvenSymplectic, 2);
  IBox b{3, -1, 0};
  CHECK(supp(spec, b) == std::vector<int>{3, 1, -1});
  CHECK(lambda_of(b) == 1);
  // The top half is only defined for even-size supports.
  CHECK_THROWS_AS(supp_top(spec, b), std::invalid_argument);
  IBox a{3, 1, 0};
  CHECK(supp_top(spec, a) == std::vector<int>{3});
  CHECK(supp_top_contains(spec, a, 3));
  CHECK(!supp_top_contains(spec, a, 1));

  GradingSpec ospec(Family::OddOrthogonalFull, 3);
  IBox d{4, -4, 0};
  CHECK(supp(ospec, d) == std::vector<int>{4, 2, 0, -2, -4});
  CHECK_THROWS_AS(supp_top(ospec, d), std::invalid_argument);
  IBox e{4, -2, 0};
  CHECK(supp_top(ospec, e) == std::vector<int>{4, 2});
}

TEST_CASE("triple coefficient identities across the support") {
  for (Family f : kFamilies) {
    for (int m = 1; m <= 4; ++m) {
      GradingSpec spec(f, m);
      for (const IBox& b : enumerate_boxes(spec)) {
        auto sp = supp(spec, b);
        IBox tb = tau(spec, b);
        int lo = b.j, hi = b.i;

        CHECK(f_coeff(spec, b, lo) == 0);
        if (hi > lo) {
          CHECK(f_coeff(spec, b, lo + 2) == -h_coeff(spec, b, lo));
          CHECK(f_coeff(spec, b, hi) == h_coeff(spec, b, hi));
        }
        for (int ip : sp) {
          // Mirror symmetry through the duality.
          CHECK(h_coeff(spec, tb, -ip) == -h_coeff(spec, b, ip));
          if (ip >= lo + 2)
            CHECK(f_coeff(spec, tb, -ip + 2) == f_coeff(spec, b, ip));
          // Eigenvalues step by two along the support.
          if (ip + 2 <= hi) {
            CHECK(h_coeff(spec, b, ip + 2) == h_coeff(spec, b, ip) + 2);
            // Telescoping relation tying raising to lowering coefficients.
            CHECK(f_coeff(spec, b, ip) - f_coeff(spec, b, ip + 2) == h_coeff(spec, b, ip));
          }
          CHECK(h_coeff(spec, b, ip) == ip - lambda_of(b));
          CHECK(f_coeff(spec, b, ip) >= 0);
        }
      }
    }
  }
}

TEST_CASE("canonical box order and orbit representatives") {
  for (Family f : kFamilies) {
    GradingSpec spec(f, 3);
    auto boxes = enumerate_boxes(spec);
    CHECK(std::is_sorted(boxes.begin(), boxes.end(), BoxLess{}));
    std::set<IBox, BoxLess> seen;
    for (const TauOrbit& o : tau_orbits(spec)) {
      CHECK((o.boxes.size() == 1 || o.boxes.size() == 2));
      if (o.boxes.size() == 2)
        CHECK(o.boxes[0] < o.boxes[1]);
      for (const IBox& b : o.boxes)
        CHECK(seen.insert(b).second);
    }
    CHECK(seen.size() == boxes.size());
  }
}
