#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcv/rational.hpp"

namespace qcv {

// Numerical invariants of a nonsingular threefold X of even degree d on a
// 5-dimensional quadric: sectional genus g, chi(O_S) of its general surface
// section S, and chi(O_X). These four numbers drive every closed-form
// intersection number used downstream.
struct Threefold5Invariants {
  long d;
  long g;
  long chi_OS;
  long chi_OX;

  Threefold5Invariants(long d, long g, long chi_OS, long chi_OX);
};

// Same idea one dimension down: surfaces of even degree d on a
// 4-dimensional quadric with balanced cohomology class.
struct Surface4Invariants {
  long d;
  long g;
  long chi;

  Surface4Invariants(long d, long g, long chi);
};

// One row of the reference table of low-degree pairs (X, L). q and p_g are
// the irregularity and geometric genus of the general surface section.
struct KnownPairRecord {
  std::string type_label;  // "A" .. "O"
  int n;                   // ambient quadric dimension
  long d;
  long g;
  long q;
  long p_g;
  std::string description;

  long chi_section() const { return 1 - q + p_g; }
};

struct ScreenResult {
  bool pass;
  Rational residual;  // >= 0 exactly when the inequality holds
};

// K_X L^2 = 2(g-1) - 2d
Rational kl2(const Threefold5Invariants& inv);
// K_X^2 L = d^2/4 + (3/2) d - 8(g-1) + 6 chi(O_S)
Rational k2l(const Threefold5Invariants& inv);
// K_X^3 = -(9/4) d^2 + (27/2) d + g d + 18(g-1) - 30 chi(O_S) - 24 chi(O_X)
Rational k3(const Threefold5Invariants& inv);
// From 2 K^2 = d^2/2 - 3d - 8(g-1) + 12 chi.
Rational surface_k2(const Surface4Invariants& inv);

// 60 chi(O_S) >= (3/2) d^2 - 12 d + (d-48)(g-1) + 24 chi(O_X)
ScreenResult check_s3_nonneg(const Threefold5Invariants& inv);
// chi(O_S) <= (2/3) (g-1)^2 / d - d^2/24 + (5/12) d  (index-theorem screen)
ScreenResult check_ghit(const Threefold5Invariants& inv);

// The 13 reference pairs of degree <= 12 (labels A..N skipping J, K, plus O).
const std::vector<KnownPairRecord>& known_pairs();

// All records of degree d, optionally restricted to ambient dimension n.
std::vector<KnownPairRecord> lookup_known_pairs(long d, std::optional<int> n = std::nullopt);

// Machine-readable export: one tab-separated record per line, stable order.
std::string known_pairs_fixture_text();

}  // namespace qcv
