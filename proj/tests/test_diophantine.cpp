#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "qcv/diophantine_screens.hpp"
#include "qcv/errors.hpp"
#include "qcv/invariants.hpp"

using namespace qcv;

TEST_CASE("even positive quadratic roots") {
  CHECK(even_positive_roots_of_quadratic(-10, 24) == std::vector<long>({4, 6}));
  CHECK(even_positive_roots_of_quadratic(-14, 48) == std::vector<long>({6, 8}));
  CHECK(even_positive_roots_of_quadratic(0, 4).empty());    // no real roots
  CHECK(even_positive_roots_of_quadratic(2, -8) == std::vector<long>({2}));  // -4 and 2
  CHECK(even_positive_roots_of_quadratic(-4, 3).empty());   // odd roots 1 and 3
}

TEST_CASE("del pezzo and mukai degree menus") {
  CHECK(del_pezzo_variety_degrees() == std::vector<long>({4, 6}));
  CHECK(mukai_degrees() == std::vector<std::pair<long, long>>({{6, 4}, {8, 5}}));
}

TEST_CASE("screen degrees all appear in the reference table") {
  std::set<long> table_degrees;
  for (const auto& r : known_pairs()) table_degrees.insert(r.d);
  for (long d : del_pezzo_variety_degrees()) CHECK(table_degrees.count(d) == 1);
  for (auto [d, g] : mukai_degrees()) {
    CHECK(table_degrees.count(d) == 1);
    CHECK(g == d / 2 + 1);
  }
}

TEST_CASE("fano threefold screen is empty from degree 22 up") {
  for (long d = 22; d <= 200; d += 2) {
    const FanoFeasibilityReport r = fano_threefold_feasible(d);
    INFO("d = ", d);
    CHECK(r.proven_infeasible);
    CHECK(r.witnesses.empty());
    CHECK_FALSE(r.trail.empty());
  }
}

TEST_CASE("fano threefold screen keeps witnesses below 22") {
  const FanoFeasibilityReport r = fano_threefold_feasible(20);
  CHECK_FALSE(r.proven_infeasible);
  CHECK_FALSE(r.witnesses.empty());
  for (const FanoWitness& w : r.witnesses) {
    // Witnesses satisfy the coupled relation and the Hodge-type inequality.
    const long minus_k3 = (20 - 22) * w.mu + 5 * w.lambda + 24;
    CHECK(minus_k3 == w.minus_k3);
    CHECK(1 <= w.minus_k3);
    CHECK(w.minus_k3 <= 64);
    CHECK(2 * w.mu * w.minus_k3 <= w.lambda * w.lambda);
  }
  const bool has_paper_point =
      std::any_of(r.witnesses.begin(), r.witnesses.end(), [](const FanoWitness& w) {
        return w.lambda == 9 && w.mu == 34 && w.minus_k3 == 1;
      });
  CHECK(has_paper_point);
}

TEST_CASE("fibration ceiling over curves") {
  CHECK(fano_fibration_max_degree(5) == 20);
  CHECK(fano_fibration_max_degree(6) == 30);
  CHECK_THROWS_AS(fano_fibration_max_degree(7), std::invalid_argument);
}

TEST_CASE("degree-12 fibration invariants resolve uniquely") {
  const DelPezzoFibrationSolution sol = resolve_delpezzo_fibration_invariants(12);
  CHECK(sol.g == 10);
  CHECK(sol.chi_OS == 3);
  CHECK(sol.p_g == 2);
  CHECK(sol.q == 0);
  CHECK(sol.base_genus == 0);
  CHECK(sol.candidates == std::vector<std::pair<long, long>>({{7, 1}, {10, 3}, {13, 5}}));
  CHECK_FALSE(sol.trail.empty());

  // Determinism: a second resolution is identical.
  const DelPezzoFibrationSolution again = resolve_delpezzo_fibration_invariants(12);
  CHECK(again.trail == sol.trail);
  CHECK(again.candidates == sol.candidates);
}

TEST_CASE("degree-12 fibration cap sensitivity") {
  // Cutting the genus cap below the survivor leaves no candidate.
  CHECK_THROWS_AS(resolve_delpezzo_fibration_invariants(12, 9), NoSolution);
}

TEST_CASE("no embedding in four-dimensional projective space") {
  const NotInP4Report r8 = notinp4_check(8);
  CHECK_FALSE(r8.consistent);
  CHECK(r8.chi_value == make_rational(14, 3));

  const NotInP4Report r10 = notinp4_check(10);
  CHECK_FALSE(r10.consistent);
  CHECK(r10.chi_value == make_rational(25, 3));

  const NotInP4Report r12 = notinp4_check(12);
  CHECK_FALSE(r12.consistent);
  CHECK(r12.g_value == 25);
  CHECK(r12.chi_value == 13);
  CHECK_FALSE(r12.trail.empty());
}
