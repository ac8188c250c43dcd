#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qcv/conic_bundle.hpp"
#include "qcv/errors.hpp"
#include "qcv/rational.hpp"

using namespace qcv;

namespace {

// Deterministic small-rational generator for the algebraic-law checks.
struct RationalGen {
  std::mt19937_64 rng{0x5eed};
  std::uniform_int_distribution<long> num{-50, 50};
  std::uniform_int_distribution<long> den{1, 20};

  Rational operator()() { return make_rational(num(rng), den(rng)); }
};

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) entries.push_back(make_rational(num(rng), den(rng)));
  return RationalMatrix(n, n, std::move(entries));
}

}  // namespace

TEST_CASE("construction stays canonical") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(-2, -4) == make_rational(1, 2));
  CHECK(make_rational(3, -6) == make_rational(-1, 2));
  CHECK(make_rational(0, 7) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("string round trips") {
  CHECK(rational_to_string(make_rational(7)) == "7");
  CHECK(rational_to_string(make_rational(-3, 4)) == "-3/4");
  CHECK(parse_rational("22/7") == make_rational(22, 7));
  CHECK(parse_rational("-5") == make_rational(-5));
  CHECK(parse_rational("4/6") == make_rational(2, 3));
  for (const char* bad : {"", "1.5", "1/0", "x", "3/", "/4", "1e3"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("integrality and rounding") {
  CHECK(is_integer(make_rational(8, 4)));
  CHECK_FALSE(is_integer(make_rational(7, 4)));
  CHECK(to_integer(make_rational(8, 4)) == 2);
  CHECK_THROWS_AS(to_integer(make_rational(1, 2)), InconsistentData);

  CHECK(rational_floor(make_rational(7, 2)) == 3);
  CHECK(rational_floor(make_rational(-7, 2)) == -4);
  CHECK(rational_ceil(make_rational(7, 2)) == 4);
  CHECK(rational_ceil(make_rational(-7, 2)) == -3);
  CHECK(rational_floor(make_rational(6)) == 6);
  CHECK(rational_ceil(make_rational(6)) == 6);

  CHECK(floor_div(Integer(7), Integer(2)) == 3);
  CHECK(floor_div(Integer(-7), Integer(2)) == -4);
  CHECK(floor_div(Integer(7), Integer(-2)) == -4);
  CHECK(ceil_div(Integer(7), Integer(2)) == 4);
  CHECK(ceil_div(Integer(-7), Integer(2)) == -3);
}

TEST_CASE("field laws on random triples") {
  RationalGen gen;
  for (int i = 0; i < 200; ++i) {
    const Rational a = gen(), b = gen(), c = gen();
    CHECK(Rational((a + b) + c) == Rational(a + (b + c)));
    CHECK(Rational((a * b) * c) == Rational(a * (b * c)));
    CHECK(Rational(a + b) == Rational(b + a));
    CHECK(Rational(a * b) == Rational(b * a));
    CHECK(Rational(a * (b + c)) == Rational(a * b + a * c));
  }
}

TEST_CASE("solve_linear on the identity") {
  RationalMatrix id(5, 5);
  for (std::size_t i = 0; i < 5; ++i) id.set(i, i, 1);
  const std::vector<Rational> rhs = {1, 2, 3, 4, 5};
  CHECK(solve_linear(id, rhs) == rhs);
}

TEST_CASE("solve_linear residual is exactly zero") {
  // The d = 20 conic-bundle matrix is the intended production workload.
  const LinearSystem sys = build_system(20, 3, 7);
  const auto v = solve_linear(sys.M, sys.c);
  const auto back = sys.M.apply(v);
  for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == sys.c[i]);

  // Random solvable systems: re-multiplication must return the rhs verbatim.
  std::mt19937_64 rng(0xabcd);
  for (int trial = 0; trial < 40; ++trial) {
    RationalMatrix m = random_matrix(rng, 4);
    if (determinant(m) == 0) continue;
    std::vector<Rational> rhs;
    std::uniform_int_distribution<long> num(-9, 9);
    for (int i = 0; i < 4; ++i) rhs.push_back(make_rational(num(rng)));
    const auto solved = solve_linear(m, rhs);
    CHECK(m.apply(solved) == rhs);
  }
}

TEST_CASE("solve_linear rejects singular input") {
  RationalMatrix zero(1, 1);
  CHECK_THROWS_AS(solve_linear(zero, {make_rational(1)}), SingularMatrix);

  RationalMatrix rank1(2, 2, {make_rational(1), make_rational(2), make_rational(2),
                              make_rational(4)});
  CHECK_THROWS_AS(solve_linear(rank1, {make_rational(1), make_rational(1)}), SingularMatrix);
}

TEST_CASE("determinant basics") {
  RationalMatrix id(5, 5);
  for (std::size_t i = 0; i < 5; ++i) id.set(i, i, 1);
  CHECK(determinant(id) == 1);

  RationalMatrix diag(2, 2);
  diag.set(0, 0, 2);
  diag.set(1, 1, 3);
  CHECK(determinant(diag) == 6);

  CHECK(Rational(-determinant(build_system(20, 0, 0).M) / 2) == 1776);
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(0x7777);
  for (int trial = 0; trial < 30; ++trial) {
    const RationalMatrix a = random_matrix(rng, 3);
    const RationalMatrix b = random_matrix(rng, 3);
    CHECK(determinant(a.multiply(b)) == Rational(determinant(a) * determinant(b)));
  }
}

TEST_CASE("matrix shape errors") {
  CHECK_THROWS_AS(RationalMatrix(2, 2, {make_rational(1)}), std::invalid_argument);
  RationalMatrix m(2, 3);
  RationalMatrix n(2, 3);
  CHECK_THROWS_AS(m.multiply(n), std::invalid_argument);
  CHECK_THROWS_AS(m.apply({make_rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(solve_linear(m, {make_rational(1), make_rational(1)}), std::invalid_argument);
}

TEST_CASE("polynomial evaluation") {
  CHECK(eval_poly(RationalPoly(), make_rational(7)) == 0);
  const RationalPoly p = RationalPoly::from_ints({18976, -1520, -27, 3});
  CHECK(eval_poly(p, make_rational(20)) == 1776);
  CHECK(eval_poly(p, make_rational(0)) == 18976);
  CHECK(p.degree() == 3);
  CHECK(p.leading() == 3);
  CHECK(p.coefficient(1) == -1520);
  CHECK(p.coefficient(9) == 0);
}

TEST_CASE("polynomial ring operations") {
  const RationalPoly a = RationalPoly::from_ints({1, 2});      // 1 + 2t
  const RationalPoly b = RationalPoly::from_ints({-1, 0, 3});  // -1 + 3t^2
  CHECK((a + b) == RationalPoly::from_ints({0, 2, 3}));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK((a * b) == RationalPoly::from_ints({-1, -2, 3, 6}));
  CHECK(a.scaled(make_rational(1, 2)) ==
        RationalPoly({make_rational(1, 2), make_rational(1)}));
  // Cancellation must trim the leading entry.
  const RationalPoly c = RationalPoly::from_ints({0, 0, 3});
  CHECK((c - RationalPoly::from_ints({0, 0, 3})).is_zero());
}

TEST_CASE("cauchy root bound dominates the real roots") {
  // (t-5)(t+3)(t-2) = t^3 - 4t^2 - 11t + 30: roots 5, 2, -3.
  const RationalPoly p = RationalPoly::from_ints({30, -11, -4, 1});
  const Integer bound = cauchy_root_bound(p);
  CHECK(bound > 5);
  CHECK(eval_poly(p, Rational(bound)) > 0);    // past the largest root
  CHECK(eval_poly(p, Rational(-bound)) < 0);   // past the smallest root
  // P(d) stays positive for d > 0 but its Cauchy bound is still finite.
  const RationalPoly P_poly = RationalPoly::from_ints({18976, -1520, -27, 3});
  CHECK(eval_poly(P_poly, Rational(cauchy_root_bound(P_poly))) > 0);
  CHECK_THROWS_AS(cauchy_root_bound(RationalPoly::from_ints({5})), std::invalid_argument);
}
