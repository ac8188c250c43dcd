#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcv/conic_bundle.hpp"
#include "qcv/rational.hpp"

// Lattice sweep over the conic-bundle feasibility triangles: for every even
// degree d in a range, iterate the integer points (x, y) of the triangle
// (y >= 0, e2 >= 0, e1.D >= 0) and keep those passing every enabled screen.
// The screens, in reporting order:
//
//   triangle     membership in the closed feasibility triangle
//   integrality  b1R, R^2, Db1, D^2, b2, g-1, chi(O_Y), chi(O_S) all integers
//   superbound   lo(d) <= g-1 <= hi(d), plus an optional external upper
//                bound supplied as a plugin (see GrossBound)
//   s3_chi       the two chi(O_S) inequalities (s3 >= 0 and the index bound)
//   hodge_Y      (b1R)^2 >= x * R^2 on the base surface
//   k3_tail      d > 98 forces g-1 <= d^2/12
//
// Points are iterated row by row (y ascending, x ascending); within a row
// the eight integrality conditions collapse to one congruence class for x,
// so rows are scanned in arithmetic progressions rather than point by point.
// The outcome is identical to the naive scan and is what makes the full
// range [20, 276] finish in seconds.

namespace qcv {

enum class Filter { triangle, integrality, superbound, s3_chi, hodge_Y, k3_tail };

const std::vector<Filter>& all_filters();
std::string filter_name(Filter f);
// Accepts the canonical names above; returns nullopt for anything else.
std::optional<Filter> parse_filter_name(const std::string& name);

// External upper bound on g-1 as a rational function of d, loaded from a
// small JSON description:
//   { "name": ..., "certified_matches_cited_theorem": bool,
//     "g_minus_1_upper": { "num_coeffs": [...], "den_coeffs": [...] } }
// Coefficients are listed by ascending power. The certification flag is the
// user's assertion that the bound really is the published one; the shipped
// test plugin is synthetic and says false.
struct GrossBound {
  std::string name;
  bool certified_matches_cited_theorem = false;
  RationalPoly num;
  RationalPoly den;

  Rational eval(long d) const;  // throws NoSolution if den(d) = 0
};

GrossBound parse_gross_bound(const std::string& json_text);
GrossBound load_gross_bound(const std::string& path);

struct FilterConfig {
  long d_min = 20;
  long d_max = 276;
  std::set<Filter> filters = {Filter::triangle,   Filter::integrality,
                              Filter::superbound, Filter::s3_chi,
                              Filter::hodge_Y,    Filter::k3_tail};
  bool enable_gross_bound = false;
  std::optional<GrossBound> gross_bound;
  // Cap on the lattice-point count of any single degree's triangle; the
  // sweep throws RegionOverflow before enumerating an oversized triangle.
  long long budget = 1'000'000'000;

  void validate() const;  // d_min/d_max even, 20 <= d_min <= d_max, budget > 0
};

struct Witness {
  long d = 0;
  long x = 0;
  long y = 0;
  SolutionVector v;
  Rational chi_Y;
  Rational chi_S;
  Rational g_minus_1;
};

struct SurvivorRecord {
  long d = 0;
  std::vector<Witness> witnesses;
};

struct DegreeStats {
  long long in_triangle = 0;                    // raw lattice-point count
  std::map<std::string, long long> first_fail;  // screen name -> points
  long long survivors = 0;
};

struct SurvivorReport {
  FilterConfig config;
  std::vector<SurvivorRecord> survivors;  // ascending d, ascending (y, x)
  std::map<long, DegreeStats> per_degree;
  std::vector<std::string> trail;

  std::vector<long> survivor_degrees() const;
  long long total_in_triangle() const;
  long long total_first_fail(const std::string& screen) const;
};

// chi(O_Y) by Noether from K_Y^2 = x and c_2 = b2; chi(O_S) for the double
// cover of Y with branch class 2R, where K_Y.R = -b1R.
Rational chi_OY(const Rational& x, const Rational& b2);
Rational chi_OS_from_cover(const Rational& chi_Y, const Rational& R2, const Rational& b1R);

// The one documented index-type check on the base surface.
bool hodge_Y_checks(const SolutionVector& v, long x, long y);

// Degrees of the known flat conic bundles over surfaces (reference data;
// their existence is by double covers of the four scrolls).
const std::set<long>& known_small_conic_bundles();

SurvivorReport enumerate(const FilterConfig& config);

// Merge reports from a partition of the degree range into disjoint,
// adjacent sub-ranges (ascending). Configs must agree except for the range.
SurvivorReport merge_reports(const std::vector<SurvivorReport>& parts);

}  // namespace qcv
