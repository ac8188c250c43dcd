#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qcv/dpf_restriction.hpp"
#include "qcv/errors.hpp"

using namespace qcv;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("every preset solves to its recorded degree list") {
  const auto& catalog = preset_catalog();
  REQUIRE(catalog.size() == 14);
  for (const FiberPreset& p : catalog) {
    INFO("preset ", p.name);
    const auto sols = solve_degree(dpf2_equation(p.data), p.constraints);
    CHECK(sols == p.expected_degrees);
  }
}

TEST_CASE("find_preset resolves names") {
  CHECK(find_preset("numericaldpf_main").name == "numericaldpf_main");
  CHECK_THROWS_AS(find_preset("no_such_preset"), UnknownCaseId);
}

TEST_CASE("adjunction-forced parameters were recomputed") {
  // Presets carrying an adjoint-triviality constraint record the parameter
  // the catalog builder rederived; spot values per the derivation notes.
  CHECK(find_preset("numericaldpf_main").forced_a == 1);
  CHECK(find_preset("numericaldpf_1").forced_a == 1);
  CHECK(find_preset("numericaldpf_2").forced_a == 2);
  CHECK_FALSE(find_preset("blowup_plane_in_fourfold").forced_a.has_value());
}

TEST_CASE("explicit zero c2N is a structural no-op for rank-one normals") {
  const SurfaceRestrictionData& base = find_preset("numericaldpf_main").data;
  REQUIRE(base.rank1_normal);
  SurfaceRestrictionData with_zero = base;
  with_zero.c2N = RationalPoly::constant(0);
  const DegreeEquation lhs = dpf2_equation(base);
  const DegreeEquation rhs = dpf2_equation(with_zero);
  CHECK(lhs.A == rhs.A);
  CHECK(lhs.B == rhs.B);
}

TEST_CASE("rank-one normal with nonzero c2N is rejected") {
  SurfaceRestrictionData data = find_preset("numericaldpf_main").data;
  data.c2N = RationalPoly::constant(1);
  CHECK_THROWS_AS(dpf2_equation(data), InconsistentData);
}

TEST_CASE("ambient constants for the unit surface") {
  SurfaceRestrictionData unit;
  unit.n = 5;
  unit.L2 = RationalPoly::from_ints({1});
  unit.rank1_normal = true;
  const DegreeEquation eq5 = dpf2_equation(unit);
  CHECK(eq5.A == RationalPoly({make_rational(1, 2)}));
  CHECK(eq5.B == RationalPoly::from_ints({11}));  // (n^2 - n + 2)/2 = 11
  unit.n = 6;
  CHECK(dpf2_equation(unit).B == RationalPoly::from_ints({16}));
}

TEST_CASE("solver constraints prune the solution list") {
  const FiberPreset& blowup = find_preset("blowup_plane_in_fourfold");
  const DegreeEquation eq = dpf2_equation(blowup.data);

  SolveConstraints tight = blowup.constraints;
  tight.d_max = 20;
  CHECK(solve_degree(eq, tight) == std::vector<DegreeSolution>({{16, 1}}));

  SolveConstraints shifted = blowup.constraints;
  shifted.a_min = 2;
  CHECK(solve_degree(eq, shifted) == std::vector<DegreeSolution>({{22, 2}}));

  SolveConstraints odd_allowed = blowup.constraints;
  odd_allowed.d_even = false;
  const auto sols = solve_degree(eq, odd_allowed);
  CHECK(sols.size() >= 2);  // the even pair survives relaxation
}

TEST_CASE("unbounded families are refused, not truncated") {
  // d * 1 = a: the degree grows with the parameter.
  DegreeEquation dominating{RationalPoly::from_ints({1}), RationalPoly::from_ints({0, 1})};
  CHECK_THROWS_AS(solve_degree(dominating, SolveConstraints{}), UnboundedFamily);

  // d * a = 4a: d = 4 for every parameter value.
  DegreeEquation constant_ratio{RationalPoly::from_ints({0, 1}),
                                RationalPoly::from_ints({0, 4})};
  CHECK_THROWS_AS(solve_degree(constant_ratio, SolveConstraints{}), UnboundedFamily);

  // 0 = 0 degenerations.
  DegreeEquation zero_zero{RationalPoly(), RationalPoly()};
  CHECK_THROWS_AS(solve_degree(zero_zero, SolveConstraints{}), UnboundedFamily);

  // A parameter cap restores finiteness for the dominating family.
  SolveConstraints capped;
  capped.a_max = 6;
  const auto sols = solve_degree(dominating, capped);
  CHECK(sols == std::vector<DegreeSolution>({{2, 2}, {4, 4}, {6, 6}}));
}

TEST_CASE("degree-three restriction forces the top Chern number") {
  const ThreefoldFiberChernData product(6, 12, 24, 48, 12, 24, 8);
  const ThreefoldFiberChernData tangent(6, 12, 24, 48, 12, 24, 6);
  CHECK(dpf3_x3_forced(product, 12) == 24);
  CHECK(dpf3_x3_forced(tangent, 12) == 24);
  CHECK(dpf3_x3_forced(product, 12) != product.x3_expected);
  CHECK(dpf3_x3_forced(tangent, 12) != tangent.x3_expected);
  CHECK_THROWS_AS(dpf3_x3_forced(product, 11), std::invalid_argument);
  // chi(O_F) = 1 on the candidate fibers, so c1.c2 must be 24.
  CHECK_THROWS_AS(ThreefoldFiberChernData(6, 12, 24, 48, 12, 23, 8), InconsistentData);
}

TEST_CASE("veronese divisibility screen") {
  CHECK(veronese_mod4_check(8));
  CHECK_FALSE(veronese_mod4_check(10));
  CHECK_THROWS_AS(veronese_mod4_check(7), std::invalid_argument);
}

TEST_CASE("catalog fixture matches the golden file") {
  CHECK(preset_catalog_fixture_text() ==
        read_file(std::string(QCV_SOURCE_DIR) + "/tests/data/preset_catalog.txt"));
}
