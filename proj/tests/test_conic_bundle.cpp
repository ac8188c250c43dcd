#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qcv/conic_bundle.hpp"
#include "qcv/errors.hpp"
#include "qcv/genus_bounds.hpp"

using namespace qcv;

namespace {

// Fixed probe points reused across the grid sweeps: 129 even degrees times
// 8 points = 1032 solved systems.
const std::vector<std::pair<long, long>>& probe_points() {
  static const std::vector<std::pair<long, long>> pts = {
      {0, 0}, {1, 0}, {0, 1}, {7, 3}, {12, 0}, {-5, 2}, {100, 20}, {330, 54}};
  return pts;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("point admissibility") {
  CHECK_NOTHROW(ConicBundlePoint(20, -5, 0));
  CHECK_THROWS_AS(ConicBundlePoint(18, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(ConicBundlePoint(21, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(ConicBundlePoint(20, 0, -1), std::invalid_argument);
}

TEST_CASE("P values") {
  CHECK(P(20) == 1776);
  CHECK(P(0) == 18976);
  CHECK(P(44) == 155376);
  CHECK(P(276) == 60616432);
}

TEST_CASE("determinant identity on the full even grid") {
  for (long d = 20; d <= 276; d += 2) {
    INFO("d = ", d);
    CHECK(Rational(-determinant(build_system(d, 0, 0).M) / 2) == P(d));
  }
}

TEST_CASE("solve residual is zero at 1032 sampled systems") {
  for (long d = 20; d <= 276; d += 2) {
    for (auto [x, y] : probe_points()) {
      const LinearSystem sys = build_system(d, x, y);
      const SolutionVector v = solve_point(d, x, y);
      const auto back = sys.M.apply({v.b1R, v.R2, v.Db1, v.D2, v.b2});
      INFO("d = ", d, ", x = ", x, ", y = ", y);
      CHECK(back == sys.c);
    }
  }
}

TEST_CASE("known solution values") {
  const SolutionVector a = solve_point(44, 330, 54);
  CHECK(a.b1R == -108);
  CHECK(a.R2 == 30);
  CHECK(a.Db1 == -228);
  CHECK(a.D2 == 78);
  CHECK(a.b2 == 618);
  CHECK(a.e2() == 8);
  CHECK(a.e1_dot_D() == 84);
  CHECK(a.genus_minus_1() == 157);

  const SolutionVector b = solve_point(66, 1558, 8);
  CHECK(b.genus_minus_1() == 347);
  CHECK(b.b1R == -318);
  CHECK(b.b2 == 2246);
}

TEST_CASE("printed right-hand side differs only in the fourth-entry sign") {
  for (long d : {20L, 44L, 276L}) {
    const LinearSystem normative = build_system(d, 3, 5);
    const LinearSystem printed = build_system_printed(d, 3, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) CHECK(normative.M.at(i, j) == printed.M.at(i, j));
    for (std::size_t i = 0; i < 5; ++i) {
      if (i == 3)
        CHECK(Rational(printed.c[i] - normative.c[i]) == 4 * 3);  // (+2x) - (-2x)
      else
        CHECK(printed.c[i] == normative.c[i]);
    }
  }
}

TEST_CASE("scaled forms agree with the solve on the grid") {
  for (long d = 20; d <= 276; d += 2) {
    const ScaledForms f = scaled_forms(d);
    CHECK(f.Pd == P(d));
    for (auto [x, y] : probe_points()) {
      const SolutionVector v = solve_point(d, x, y);
      CHECK(e2_scaled(d, x, y) == Rational(v.e2() * f.Pd));
      CHECK(e1D_scaled(d, x, y) == Rational(v.e1_dot_D() * f.Pd));
      CHECK(genus_scaled(d, x, y) == Rational(v.genus_minus_1() * f.Pd));
      CHECK(genus_of_point(d, x, y) == v.genus_minus_1());
      CHECK(f.b1R.eval(x, y) == Rational(v.b1R * f.Pd));
      CHECK(f.b2.eval(x, y) == Rational(v.b2 * f.Pd));
    }
  }
}

TEST_CASE("printed closed forms match the solve everywhere they are consistent") {
  // The five solution rows and the three scaled inequalities, evaluated as
  // printed, against the normative solve. The diff scan promises exactly
  // the two documented findings and nothing numeric.
  const char* names[] = {"b1R", "R2", "Db1", "D2", "b2", "e2P", "e1DP", "gm1P"};
  for (long d : {20L, 44L, 98L, 276L}) {
    const ScaledForms f = scaled_forms(d);
    for (auto [x, y] : probe_points()) {
      const SolutionVector v = solve_point(d, x, y);
      const Rational by_name[] = {v.b1R,
                                  v.R2,
                                  v.Db1,
                                  v.D2,
                                  v.b2,
                                  e2_scaled(d, x, y),
                                  e1D_scaled(d, x, y),
                                  genus_scaled(d, x, y)};
      for (int i = 0; i < 8; ++i) {
        INFO("form ", names[i], " at d = ", d, ", (x, y) = (", x, ", ", y, ")");
        CHECK(printed_value(names[i], d, x, y) == by_name[i]);
      }
    }
    (void)f;
  }
  CHECK_THROWS_AS(printed_value("nonsense", 20, 0, 0), std::invalid_argument);
}

TEST_CASE("discrepancy scan is stable and minimal") {
  const auto first = printed_formula_discrepancies();
  const auto second = printed_formula_discrepancies();
  REQUIRE(first.size() == 2);
  CHECK(first[0].subject == "c[4] x-coefficient");
  CHECK(first[0].printed == "2x");
  CHECK(first[0].normative == "-2x");
  CHECK(first[1].subject == "x1 display");
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].subject == second[i].subject);
    CHECK(first[i].printed == second[i].printed);
    CHECK(first[i].normative == second[i].normative);
    CHECK(first[i].note == second[i].note);
  }
}

TEST_CASE("triangle shape on the full even grid") {
  for (long d = 20; d <= 276; d += 2) {
    const FeasibleTriangle t = triangle(d);
    const ScaledForms f = scaled_forms(d);
    INFO("d = ", d);
    CHECK(t.v1.second == 0);
    CHECK(t.v2.second == 0);
    CHECK(t.v1.first < t.v2.first);
    CHECK(t.v3.second > 0);
    // Left edge rises, right edge falls.
    CHECK(Rational(-f.e2.cx / f.e2.cy) > 0);
    CHECK(Rational(-f.e1D.cx / f.e1D.cy) < 0);
    // Vertices solve their defining lines.
    CHECK(Rational(f.e2.cx * t.v1.first + f.e2.c0) == 0);
    CHECK(Rational(f.e1D.cx * t.v2.first + f.e1D.c0) == 0);
    CHECK(Rational(f.e2.cx * t.v3.first + f.e2.cy * t.v3.second + f.e2.c0) == 0);
    CHECK(Rational(f.e1D.cx * t.v3.first + f.e1D.cy * t.v3.second + f.e1D.c0) == 0);
    // Printed vertex abscissas (with the x1 token repaired) agree.
    CHECK(printed_vertex_x1(d) == t.v1.first);
    CHECK(printed_vertex_x2(d) == t.v2.first);
  }
  CHECK_THROWS_AS(triangle(18), std::invalid_argument);
}

TEST_CASE("superbound endpoints are the base-vertex genus values") {
  for (long d = 20; d <= 276; d += 2) {
    const auto [lo, hi] = superbound(d);
    const FeasibleTriangle t = triangle(d);
    const ScaledForms f = scaled_forms(d);
    const auto genus_at = [&](const std::pair<Rational, Rational>& v) -> Rational {
      return Rational(f.gm1.cx * v.first + f.gm1.cy * v.second + f.gm1.c0) / f.Pd;
    };
    INFO("d = ", d);
    CHECK(lo == genus_at(t.v1));
    CHECK(hi == genus_at(t.v2));
    CHECK(lo <= hi);
    CHECK(printed_superbound(d) == std::make_pair(lo, hi));
  }
}

TEST_CASE("apex genus exceeds the upper endpoint exactly for d in [20, 30]") {
  std::vector<long> exceeds;
  for (long d = 20; d <= 276; d += 2) {
    const FeasibleTriangle t = triangle(d);
    const ScaledForms f = scaled_forms(d);
    const Rational apex =
        Rational(f.gm1.cx * t.v3.first + f.gm1.cy * t.v3.second + f.gm1.c0) / f.Pd;
    if (apex > superbound(d).second) exceeds.push_back(d);
  }
  CHECK(exceeds == std::vector<long>({20, 22, 24, 26, 28, 30}));
}

TEST_CASE("beyond 276 the k=3 containment bound drops below the window") {
  // The cascade's final containment row ends at 276: from the next even
  // degree on, the whole genus window sits above d^2/12.
  CHECK(superbound(276).first <= contained_bound(276, 3));
  for (long d = 278; d <= 600; d += 2) {
    INFO("d = ", d);
    CHECK(superbound(d).first > contained_bound(d, 3));
  }
}

TEST_CASE("degree bound cascade reproduces the printed table") {
  const CascadeReport report = degree_bound_cascade();
  REQUIRE(report.rows.size() == 11);

  const struct {
    const char* route;
    long k;
    std::optional<long> max_d;
    std::optional<long> printed;
  } expected[] = {
      {"notcontained", 11, 98, 98}, {"contained", 10, 64, 64}, {"contained", 9, 58, 58},
      {"contained", 8, 54, 54},     {"contained", 7, 48, 48},  {"contained", 6, 44, 44},
      {"contained", 5, 40, 40},     {"contained", 4, 40, 40},  {"contained", 3, 276, 276},
      {"epas", 2, 42, 42},          {"epas", 1, std::nullopt, 16},
  };
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const CascadeRow& row = report.rows[i];
    INFO("row ", i, " route ", row.route, " k = ", row.k);
    CHECK(row.route == expected[i].route);
    CHECK(row.k == expected[i].k);
    CHECK(row.max_even_d == expected[i].max_d);
    CHECK(row.printed_d == expected[i].printed);
  }
  CHECK_FALSE(report.trail.empty());
}

TEST_CASE("printed displays match the golden fixture") {
  std::ostringstream rendered;
  for (const PrintedForm& f : printed_forms()) rendered << f.name << '\t' << f.display << '\n';
  CHECK(rendered.str() ==
        read_file(std::string(QCV_SOURCE_DIR) + "/tests/data/printed_forms.txt"));
}
