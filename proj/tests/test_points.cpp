#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "points.hpp"

using namespace sc;

TEST_CASE("two-point Gauss rule on [-1,1] is +-1/sqrt(3)") {
  Vec r = legendre_roots(2);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(-0.5773502691896257).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(0.5773502691896257).epsilon(1e-12));
}

TEST_CASE("one-point rule is the origin, exactly") {
  Vec r = legendre_roots(1);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == 0.0);
}

TEST_CASE("odd rules place the middle root exactly at zero") {
  for (int r : {3, 5, 7, 11}) {
    Vec x = legendre_roots(r);
    CHECK(x[r / 2] == 0.0);
  }
}

TEST_CASE("roots match an independent bisection oracle up to r = 12") {
  for (int r = 1; r <= 12; ++r) {
    Vec fast = legendre_roots(r);
    Vec slow = oracles::legendre_roots_bisection(r);
    REQUIRE(fast.size() == slow.size());
    for (int i = 0; i < r; ++i) CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-10));
  }
}

TEST_CASE("roots are symmetric about the origin to machine precision") {
  for (int r : {2, 4, 6, 9, 16, 24}) {
    Vec x = legendre_roots(r);
    for (int i = 0; i < r; ++i) CHECK(x[i] == -x[r - 1 - i]);
    for (int i = 1; i < r; ++i) CHECK(x[i] > x[i - 1]);
  }
}

TEST_CASE("orthogonality: Gauss-2 integrates odd cubics to zero exactly") {
  // Two-point rule is exact for cubics; integral of x and x^3 over [-1,1] is 0.
  Vec x = legendre_roots(2);
  CHECK(x[0] + x[1] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(x[0] * x[0] * x[0] + x[1] * x[1] * x[1] == doctest::Approx(0.0).epsilon(1e-15));
  // and x^2 integrates to 2/3 with unit weights
  CHECK(x[0] * x[0] + x[1] * x[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("point counts outside the supported range are rejected") {
  CHECK_THROWS_AS(legendre_roots(0), std::invalid_argument);
  CHECK_THROWS_AS(legendre_roots(-3), std::invalid_argument);
  CHECK_THROWS_AS(legendre_roots(25), std::invalid_argument);
}

TEST_CASE("equispaced template for r = 2 is +-1/3") {
  Vec x = equispaced_template(2);
  REQUIRE(x.size() == 2);
  CHECK(x[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(x[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("equispaced template for r = 6 spans -5/7 .. 5/7 in steps of 2/7") {
  Vec x = equispaced_template(6);
  REQUIRE(x.size() == 6);
  for (int j = 0; j < 6; ++j)
    CHECK(x[j] == doctest::Approx((2.0 * (j + 1) - 7.0) / 7.0).epsilon(1e-14));
}

TEST_CASE("equispaced template for r = 1 is the midpoint") {
  Vec x = equispaced_template(1);
  REQUIRE(x.size() == 1);
  CHECK(x[0] == 0.0);
}

TEST_CASE("Gaussian sites on [0, 0.1] match the published decimals") {
  Breakpoints breaks({0.0, 0.1});
  Vec sites = map_to_subintervals(legendre_roots(2), breaks);
  REQUIRE(sites.size() == 2);
  CHECK(sites[0] == doctest::Approx(0.02113248654).epsilon(1e-9));
  CHECK(sites[1] == doctest::Approx(0.07886751345).epsilon(1e-9));
}

TEST_CASE("mapping is affine-invariant: shifting the mesh shifts the sites") {
  Vec rho = legendre_roots(3);
  Vec base = map_to_subintervals(rho, Breakpoints({0.0, 1.0, 2.5}));
  Vec shifted = map_to_subintervals(rho, Breakpoints({10.0, 11.0, 12.5}));
  REQUIRE(base.size() == shifted.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    CHECK(shifted[i] == doctest::Approx(base[i] + 10.0).epsilon(1e-13));
}

TEST_CASE("mapped sites stay strictly inside each subinterval, l*r of them") {
  Breakpoints breaks({0.0, 0.3, 0.8, 1.0, 4.0});
  Vec rho = legendre_roots(4);
  Vec sites = map_to_subintervals(rho, breaks);
  REQUIRE((int)sites.size() == 4 * 4);
  int idx = 0;
  for (int i = 0; i < breaks.pieces(); ++i)
    for (int j = 0; j < 4; ++j, ++idx) {
      CHECK(sites[idx] > breaks.xi[i]);
      CHECK(sites[idx] < breaks.xi[i + 1]);
      if (idx) CHECK(sites[idx] > sites[idx - 1]);
    }
}

TEST_CASE("template values at or beyond the endpoints are rejected") {
  Breakpoints breaks({0.0, 1.0});
  CHECK_THROWS_AS(map_to_subintervals({-1.0}, breaks), std::invalid_argument);
  CHECK_THROWS_AS(map_to_subintervals({1.0}, breaks), std::invalid_argument);
}

TEST_CASE("pattern templates: redistributed reuses the Gaussian interior layout") {
  PointPattern g{PatternKind::gaussian, 3};
  PointPattern n{PatternKind::redistributed, 3};
  PointPattern e{PatternKind::equispaced, 3};
  CHECK(g.interior_template() == n.interior_template());
  CHECK(g.interior_template() != e.interior_template());
}
