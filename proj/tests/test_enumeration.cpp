#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "qcv/enumeration.hpp"
#include "qcv/errors.hpp"

using namespace qcv;

namespace {

// The default full-range sweep is reused by several cases; run it once.
const SurvivorReport& full_report() {
  static const SurvivorReport rep = enumerate(FilterConfig{});
  return rep;
}

std::string plugin_path() {
  return std::string(QCV_SOURCE_DIR) + "/tests/data/gross_test_plugin.json";
}

void check_same_stats(const SurvivorReport& a, const SurvivorReport& b) {
  CHECK(a.trail == b.trail);
  CHECK(a.survivor_degrees() == b.survivor_degrees());
  REQUIRE(a.per_degree.size() == b.per_degree.size());
  for (const auto& [d, stats] : a.per_degree) {
    REQUIRE(b.per_degree.count(d) == 1);
    const DegreeStats& other = b.per_degree.at(d);
    CHECK(stats.in_triangle == other.in_triangle);
    CHECK(stats.first_fail == other.first_fail);
    CHECK(stats.survivors == other.survivors);
  }
  REQUIRE(a.survivors.size() == b.survivors.size());
  for (std::size_t i = 0; i < a.survivors.size(); ++i) {
    CHECK(a.survivors[i].d == b.survivors[i].d);
    REQUIRE(a.survivors[i].witnesses.size() == b.survivors[i].witnesses.size());
    for (std::size_t j = 0; j < a.survivors[i].witnesses.size(); ++j) {
      CHECK(a.survivors[i].witnesses[j].x == b.survivors[i].witnesses[j].x);
      CHECK(a.survivors[i].witnesses[j].y == b.survivors[i].witnesses[j].y);
    }
  }
}

}  // namespace

TEST_CASE("filter names round-trip") {
  for (Filter f : all_filters()) {
    auto back = parse_filter_name(filter_name(f));
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
  CHECK_FALSE(parse_filter_name("no-such-screen").has_value());
  CHECK(filter_name(Filter::s3_chi) == "s3-chi");
  CHECK(filter_name(Filter::hodge_Y) == "hodge-Y");
  CHECK(filter_name(Filter::k3_tail) == "k3-tail");
}

TEST_CASE("config validation") {
  FilterConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.d_min = 21;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.d_min = 18;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.d_min = 60;
  cfg.d_max = 40;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.d_max = 61;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = FilterConfig{};
  cfg.budget = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = FilterConfig{};
  cfg.enable_gross_bound = true;  // no bound supplied
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("full sweep totals and survivors") {
  const SurvivorReport& rep = full_report();
  CHECK(rep.total_in_triangle() == 868448129LL);
  CHECK(rep.total_first_fail("integrality") == 868448081LL);
  CHECK(rep.total_first_fail("hodge-Y") == 31);
  CHECK(rep.total_first_fail("k3-tail") == 15);
  CHECK(rep.total_first_fail("superbound") == 0);
  CHECK(rep.total_first_fail("s3-chi") == 0);
  CHECK(rep.survivor_degrees() == std::vector<long>({44, 66}));

  REQUIRE(rep.survivors.size() == 2);
  const SurvivorRecord& r44 = rep.survivors[0];
  REQUIRE(r44.witnesses.size() == 1);
  CHECK(r44.witnesses[0].x == 330);
  CHECK(r44.witnesses[0].y == 54);
  CHECK(r44.witnesses[0].chi_Y == 79);
  CHECK(r44.witnesses[0].chi_S == 227);
  CHECK(r44.witnesses[0].g_minus_1 == 157);

  const SurvivorRecord& r66 = rep.survivors[1];
  REQUIRE(r66.witnesses.size() == 1);
  CHECK(r66.witnesses[0].x == 1558);
  CHECK(r66.witnesses[0].y == 8);
  CHECK(r66.witnesses[0].chi_Y == 317);
  CHECK(r66.witnesses[0].chi_S == 807);
  CHECK(r66.witnesses[0].g_minus_1 == 347);

  CHECK_FALSE(rep.trail.empty());
}

TEST_CASE("witnesses re-validate against the linear system") {
  for (const SurvivorRecord& rec : full_report().survivors) {
    for (const Witness& w : rec.witnesses) {
      INFO("d = ", w.d, ", (x, y) = (", w.x, ", ", w.y, ")");
      const LinearSystem sys = build_system(w.d, w.x, w.y);
      CHECK(sys.M.apply({w.v.b1R, w.v.R2, w.v.Db1, w.v.D2, w.v.b2}) == sys.c);
      CHECK(w.v.e2() >= 0);
      CHECK(w.v.e1_dot_D() >= 0);
      for (const Rational& q : {w.v.b1R, w.v.R2, w.v.Db1, w.v.D2, w.v.b2,
                                w.g_minus_1, w.chi_Y, w.chi_S})
        CHECK(is_integer(q));
      CHECK(w.g_minus_1 == w.v.genus_minus_1());
      CHECK(w.chi_Y == chi_OY(Rational(w.x), w.v.b2));
      CHECK(w.chi_S == chi_OS_from_cover(w.chi_Y, w.v.R2, w.v.b1R));
      CHECK(hodge_Y_checks(w.v, w.x, w.y));
      const auto [lo, hi] = superbound(w.d);
      CHECK(w.g_minus_1 >= lo);
      CHECK(w.g_minus_1 <= hi);
      // Scaled closed forms agree with the solved vector at the witness.
      CHECK(e2_scaled(w.d, w.x, w.y) == Rational(w.v.e2() * P(w.d)));
      CHECK(genus_scaled(w.d, w.x, w.y) == Rational(w.g_minus_1 * P(w.d)));
    }
  }
}

TEST_CASE("sweep is deterministic") {
  const SurvivorReport again = enumerate(FilterConfig{});
  check_same_stats(full_report(), again);
}

TEST_CASE("adjacent partition merges to the single-range report") {
  FilterConfig left;
  left.d_max = 148;
  FilterConfig right;
  right.d_min = 150;
  const SurvivorReport merged = merge_reports({enumerate(left), enumerate(right)});
  check_same_stats(full_report(), merged);
}

TEST_CASE("merge rejects gaps and mismatched screens") {
  FilterConfig a;
  a.d_max = 40;
  FilterConfig gap;
  gap.d_min = 44;  // skips 42
  CHECK_THROWS_AS(merge_reports({enumerate(a), enumerate(gap)}), std::invalid_argument);

  FilterConfig b;
  b.d_min = 42;
  b.d_max = 46;
  b.filters.erase(Filter::hodge_Y);
  CHECK_THROWS_AS(merge_reports({enumerate(a), enumerate(b)}), std::invalid_argument);
}

TEST_CASE("disabling screens only grows the survivor set") {
  FilterConfig strict;
  strict.d_min = 40;
  strict.d_max = 70;
  FilterConfig loose = strict;
  loose.filters.erase(Filter::hodge_Y);
  loose.filters.erase(Filter::k3_tail);
  const auto strict_d = enumerate(strict).survivor_degrees();
  const auto loose_d = enumerate(loose).survivor_degrees();
  for (long d : strict_d)
    CHECK(std::find(loose_d.begin(), loose_d.end(), d) != loose_d.end());
  CHECK(std::find(strict_d.begin(), strict_d.end(), 44L) != strict_d.end());
}

TEST_CASE("degree 98 probe: every lattice point fails integrality") {
  FilterConfig cfg;
  cfg.d_min = 98;
  cfg.d_max = 98;
  const SurvivorReport rep = enumerate(cfg);
  REQUIRE(rep.per_degree.count(98) == 1);
  const DegreeStats& stats = rep.per_degree.at(98);
  CHECK(stats.in_triangle == 483381);
  CHECK(stats.first_fail.at("integrality") == 483381);
  CHECK(stats.survivors == 0);
  CHECK(rep.survivor_degrees().empty());
}

TEST_CASE("budget overflow aborts before any oversized triangle is scanned") {
  FilterConfig cfg;
  cfg.budget = 1000;
  CHECK_THROWS_AS(enumerate(cfg), RegionOverflow);
}

TEST_CASE("external bound plugin") {
  const GrossBound bound = load_gross_bound(plugin_path());
  CHECK(bound.name == "synthetic-quadratic-probe");
  CHECK_FALSE(bound.certified_matches_cited_theorem);
  CHECK(bound.eval(44) == 170);
  CHECK(bound.eval(66) == make_rational(1373, 4));

  FilterConfig cfg;
  cfg.enable_gross_bound = true;
  cfg.gross_bound = bound;
  const SurvivorReport rep = enumerate(cfg);
  CHECK(rep.survivor_degrees() == std::vector<long>({44}));
  CHECK(rep.total_first_fail("integrality") == 868448081LL);
  CHECK(rep.total_first_fail("gross-bound") == 47);
}

TEST_CASE("plugin error handling") {
  CHECK_THROWS_AS(load_gross_bound("/nonexistent/plugin.json"), std::invalid_argument);
  CHECK_THROWS_AS(
      parse_gross_bound(R"({"name":"bad","certified_matches_cited_theorem":false,)"
                        R"("g_minus_1_upper":{"num_coeffs":[1],"den_coeffs":[0]}})"),
      InconsistentData);
  const GrossBound pole = parse_gross_bound(
      R"({"name":"pole","certified_matches_cited_theorem":false,)"
      R"("g_minus_1_upper":{"num_coeffs":[100],"den_coeffs":[-44,1]}})");
  CHECK(pole.eval(46) == 50);
  CHECK_THROWS_AS(pole.eval(44), NoSolution);
}

TEST_CASE("cover invariants and reference degrees") {
  CHECK(chi_OY(Rational(330), Rational(618)) == 79);
  CHECK(chi_OS_from_cover(Rational(79), Rational(30), Rational(-108)) == 227);
  CHECK(known_small_conic_bundles() == std::set<long>({6, 12, 14, 18}));
}
