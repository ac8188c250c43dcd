#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcv/rational.hpp"

namespace qcv {

// ---------------------------------------------------------------------------
// Degree-two double point restriction engine.
//
// Setting: X is a nonsingular codimension-two subvariety of an n-dimensional
// quadric, polarized by L, and D is a test surface inside X (a divisor of a
// threefold, or a fiber / special surface of a fourfold) with known tangent
// and normal Chern numbers. Sign convention throughout: x1 = c1(tangent)
// = -K. Restricting the degree-two double point identity to D gives a linear
// relation between the degree d of X and the Chern numbers of D:
//
//   (d/2) * L2  =  C(n) * L2 - n (c1T.L + c1N.L)
//                + (c1T^2 + 2 c1N.c1T + c1N^2) - (c2T + c1N.c1T + c2N)
//
// with C(n) = (n^2 - n + 2)/2. Entries may depend polynomially on one free
// parameter a (typically L|D = O(a)); the equation is then d * A(a) = B(a).
// ---------------------------------------------------------------------------

struct SurfaceRestrictionData {
  int n;                 // ambient quadric dimension (5 or 6)
  RationalPoly L2;       // (L|D)^2
  RationalPoly c1T_L;    // c1(T_D) . L
  RationalPoly c1T_sq;   // c1(T_D)^2
  RationalPoly c2T;      // c2(T_D), the topological Euler number of D
  RationalPoly c1N_L;    // c1(N) . L
  RationalPoly c1N_sq;   // c1(N)^2
  RationalPoly c1N_c1T;  // c1(N) . c1(T_D)
  RationalPoly c2N;      // c2(N); identically zero when N has rank one
  bool rank1_normal = false;
};

// d * A(a) = B(a), with A = L2 / 2.
struct DegreeEquation {
  RationalPoly A;
  RationalPoly B;
};

struct SolveConstraints {
  bool d_even = true;
  long d_min = 2;
  std::optional<long> d_max;
  long a_min = 1;
  std::optional<long> a_max;
};

struct DegreeSolution {
  long d;
  std::optional<long> a;  // empty for parameter-free equations

  bool operator==(const DegreeSolution& rhs) const { return d == rhs.d && a == rhs.a; }
  bool operator<(const DegreeSolution& rhs) const {
    if (d != rhs.d) return d < rhs.d;
    return a.value_or(0) < rhs.a.value_or(0);
  }
};

// Adjoint-triviality constraint: (K_X + c L)|D is trivial. Together with
// the normal data this pins the polarization degree on D; the catalog
// builder recomputes it and refuses presets whose stored Chern numbers
// disagree (adjunction: K_D = (K_X + D)|D, i.e. c1T.L = c*L2 - c1N.L).
struct AdjunctionSpec {
  long c;
};

struct FiberPreset {
  std::string name;
  std::string description;
  SurfaceRestrictionData data;  // specialized (parameter-free) if adjunction applied
  std::optional<AdjunctionSpec> adjunction;
  std::optional<long> forced_a;  // parameter value recomputed from adjunction
  SolveConstraints constraints;
  std::vector<DegreeSolution> expected_degrees;
};

// Builds the degree equation; throws InconsistentData if a rank-one normal
// bundle carries a nonzero c2N.
DegreeEquation dpf2_equation(const SurfaceRestrictionData& data);

// Exhaustive integer solutions (d, a) of d*A(a) = B(a) under the
// constraints. When no parameter cap is given the solver derives one from
// the asymptotics of B/A; if no finite cap exists it throws UnboundedFamily.
std::vector<DegreeSolution> solve_degree(const DegreeEquation& eq,
                                         const SolveConstraints& constraints);

// The fixed menu of test surfaces. Construction re-derives every
// adjunction-forced parameter and throws InconsistentData on mismatch.
const std::vector<FiberPreset>& preset_catalog();
const FiberPreset& find_preset(const std::string& name);

// One preset per line: name, n, forced parameter, expected (d,a) list.
std::string preset_catalog_fixture_text();

// ---------------------------------------------------------------------------
// Degree-three restriction for a threefold fiber F of a fourfold on a
// 6-dimensional quadric (trivial normal direction along the fibration):
//
//   x3(F) = 24 L3 - 16 c1.L2 + 6 (c1^2.L - c2.L) + 2 c1.c2 - c1^3
//
// i.e. the cubic double point identity solved for the top Chern number.
// ---------------------------------------------------------------------------

struct ThreefoldFiberChernData {
  Rational L3;
  Rational c1_L2;
  Rational c1sq_L;
  Rational c1cube;
  Rational c2_L;
  Rational c1c2;        // = 24 chi(O_F); candidate fibers have chi = 1
  Rational x3_expected;  // actual top Chern number of the candidate fiber

  ThreefoldFiberChernData(Rational L3, Rational c1_L2, Rational c1sq_L, Rational c1cube,
                          Rational c2_L, Rational c1c2, Rational x3_expected);
};

Rational dpf3_x3_forced(const ThreefoldFiberChernData& data, long d);

// Divisibility screen used against the Veronese-bundle scenario: passes
// exactly when d is divisible by 4.
bool veronese_mod4_check(long d);

}  // namespace qcv
