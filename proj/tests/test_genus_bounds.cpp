#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qcv/genus_bounds.hpp"
#include "qcv/rational.hpp"

using namespace qcv;

TEST_CASE("containment bounds at pinned values") {
  CHECK(contained_bound(44, 3) == make_rational(484, 3));
  CHECK(contained_bound(44, 6) == make_rational(440, 3));
  CHECK(contained_bound(20, 10) == 80);
  CHECK(notcontained_bound(98, 11) == make_rational(8575, 11));
  CHECK(notcontained_bound(20, 11) == make_rational(970, 11));
  CHECK_THROWS_AS(contained_bound(44, 0), std::invalid_argument);
  CHECK_THROWS_AS(notcontained_bound(44, -2), std::invalid_argument);
}

TEST_CASE("both bounds are convex in d for fixed k") {
  for (long k = 1; k <= 12; ++k) {
    for (long d = 2; d <= 120; ++d) {
      const Rational c2 = contained_bound(d + 2, k) - 2 * contained_bound(d + 1, k) +
                          contained_bound(d, k);
      const Rational n2 = notcontained_bound(d + 2, k) - 2 * notcontained_bound(d + 1, k) +
                          notcontained_bound(d, k);
      CHECK(c2 >= 0);
      CHECK(n2 >= 0);
      // The second differences are the constant curvatures 1/(2k) and 1/k.
      CHECK(c2 == make_rational(1, 2 * k));
      CHECK(n2 == make_rational(1, k));
    }
  }
}

TEST_CASE("mu is linear in g with slope -2l") {
  std::mt19937_64 rng(0x90b5);
  std::uniform_int_distribution<long> dd(2, 300), gg(0, 2000), ll(1, 12);
  for (int i = 0; i < 300; ++i) {
    const long d = dd(rng), g = gg(rng), l = ll(rng);
    CHECK(Rational(mu(d, g + 1, l) - mu(d, g, l)) == -2 * l);
    CHECK(Rational(mu(d, g + 7, l) - mu(d, g, l)) == -14 * l);
  }
}

TEST_CASE("postulation increments telescope") {
  // mu_{l+1} - mu_l = 2((l-1)d - (g-1)), so mu_s can be rebuilt from mu_1.
  std::mt19937_64 rng(0xe9a5);
  std::uniform_int_distribution<long> dd(2, 200), gg(0, 800), ss(1, 9);
  for (int i = 0; i < 300; ++i) {
    const long d = dd(rng), g = gg(rng), s = ss(rng);
    Rational acc = mu(d, g, 1);
    for (long l = 1; l < s; ++l) acc += Rational(2 * ((l - 1) * d - (g - 1)));
    CHECK(acc == mu(d, g, s));
    CHECK(epas_check(d, g, s).mu_s == acc);
  }
}

TEST_CASE("epas window at pinned values") {
  const EpasResult boundary = epas_check(8, 5, 2);
  CHECK(boundary.pass);
  CHECK(boundary.mu_s == 0);
  CHECK(boundary.upper == 32);

  // At s = 2 the window mu_2 <= 4d turns into the genus floor
  // g - 1 >= d^2/8 - 3d/2; d = 44 puts that floor at 176.
  CHECK_FALSE(epas_check(44, 150, 2).pass);  // mu_2 = 284 > 176
  CHECK(epas_check(44, 177, 2).pass);        // mu_2 = 176, boundary
  CHECK_THROWS_AS(epas_check(8, 5, 0), std::invalid_argument);
}

TEST_CASE("curve record validation") {
  CHECK_THROWS_AS(CurveOnQuadric(0, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(CurveOnQuadric(10, 1, 0), std::invalid_argument);
  const CurveOnQuadric c(44, 158, 6);
  CHECK(c.d == 44);
  CHECK(c.g == 158);
}

TEST_CASE("castelnuovo bound in P4") {
  CHECK(castelnuovo_p4(12) == 13);  // the single normative value
  CHECK(castelnuovo_p4(5) == 1);
  CHECK(castelnuovo_p4(8) == 5);
  CHECK_THROWS_AS(castelnuovo_p4(0), std::invalid_argument);
}
