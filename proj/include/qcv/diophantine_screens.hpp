#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcv/rational.hpp"

namespace qcv {

// Closed-form Diophantine screens and small finite searches that cut down
// the degree of a codimension-two threefold X in a 5-dimensional quadric
// (surface section S, sectional genus g) in a handful of special scenarios.

// Integer roots of t^2 + b t + c restricted to positive even values.
std::vector<long> even_positive_roots_of_quadratic(long b, long c);

// Degrees of Del Pezzo candidates: even positive roots of d^2 - 10d + 24.
std::vector<long> del_pezzo_variety_degrees();

// Mukai-type candidates: K_S^2 = 0, chi(O_S) = 2 and 2(g-1) = d collapse the
// surface-section relation for K^2 to d^2 - 14d + 48 = 0; each degree is
// returned with its genus g = d/2 + 1.
std::vector<std::pair<long, long>> mukai_degrees();

// One solution of the Fano threefold screen. With lambda = L.K^2 and
// 2 mu = -L^2.K, the screen couples
//   (d - 22) mu + 5 lambda + 24 = -K^3,      1 <= -K^3 <= 64,
// with the Hodge-type inequality 2 mu (-K^3) <= lambda^2.
struct FanoWitness {
  long lambda;
  long mu;
  long minus_k3;
};

struct FanoFeasibilityReport {
  long d = 0;
  // True when the search space is provably empty (holds for every d >= 22);
  // for smaller d the screen is one-directional and only samples witnesses.
  bool proven_infeasible = false;
  std::vector<FanoWitness> witnesses;
  std::vector<std::string> trail;
};

FanoFeasibilityReport fano_threefold_feasible(long d);

// Largest even degree admitting a Del Pezzo fibration over a curve. For
// n = 5 this is exhausted from the fiber relation
//   (d/2 - 11) L^2 = 2 K_F^2 + 5 K_F.L - 12
// with K_F^2 in [1,9], K_F.L <= -1, L^2 >= 1 and the Hodge-index inequality;
// for n = 6 the recorded bound is returned as a constant.
long fano_fibration_max_degree(int n);

struct DelPezzoFibrationSolution {
  long d = 0;
  long g = 0;
  long chi_OS = 0;
  long p_g = 0;
  long q = 0;
  long base_genus = 0;  // rational base: equals q
  std::vector<std::pair<long, long>> candidates;  // (g, chi) pairs before filtering
  std::vector<std::string> trail;
};

// Resolves the full invariant set of a degree-12 Del Pezzo fibration:
// candidates from 2(g-1) - 3 chi = 9 under the genus cap, filtered by
// integrality of q in g - 7 = 3 (p_g + q - 1). Throws NoSolution /
// MultipleSolutions (message carries the candidate trail) and
// InconsistentData if the surviving invariants violate 2g-2-d = (p_g+q-1)*6.
// The cap defaults to castelnuovo_p4(d); tests may lower it.
DelPezzoFibrationSolution resolve_delpezzo_fibration_invariants(
    long d, std::optional<long> genus_cap = std::nullopt);

struct NotInP4Report {
  long d = 0;
  bool consistent = false;  // whether a valid invariant set exists
  Rational g_value;
  Rational chi_value;
  std::vector<std::string> trail;
};

// Plays the classical double point formula for a surface in P^4,
//   d^2 - 10d - 5 H.K - 2 K^2 + 12 chi(O_S) = 0  with  H.K = 2g - 2 - d,
// against the quadric-section relation for K^2, under K^2 = 0. Degrees 8 and
// 10 produce non-integral invariants; degree 12 produces (g, chi) = (25, 13),
// which then contradicts 2g - 2 - d = (p_g + q - 1) * 6.
NotInP4Report notinp4_check(long d);

}  // namespace qcv
