#pragma once

#include "qcv/rational.hpp"

namespace qcv {

// A curve of degree d and genus g on a 3-dimensional quadric, lying on a
// surface of degree 2k cut out by a half-degree-k hypersurface section.
struct CurveOnQuadric {
  long d;
  long g;
  long k;

  CurveOnQuadric(long d, long g, long k);
};

// Genus caps for curves on a 3-dimensional quadric. Both return the bound
// on g-1; predicate use is `g - 1 <= bound`.
//
// Curve contained in a surface of degree 2k:   g-1 <= d^2/(4k) + (k-3) d/2
Rational contained_bound(long d, long k);
// Curve not contained in smaller half-degree:  g-1 <= d^2/(2k) + (k-4) d/2
Rational notcontained_bound(long d, long k);

// mu_l = c_2(N(-l)) = d^2/2 + l(l-3) d - 2 l (g-1) for the twisted normal
// bundle of the curve.
Rational mu(long d, long g, long l);

struct EpasResult {
  bool pass;
  Rational mu_s;
  Rational upper;  // s^2 d
};

// Positivity window 0 <= mu_s <= s^2 d at postulation s.
EpasResult epas_check(long d, long g, long s);

// Genus cap for degree-d curves cut on a 3-dimensional quadric inside P^4:
// g <= floor(d(d-4)/8) + 1. (This is the k=2 containment bound; see
// docs/derivations.md for the derivation and the d=12 -> 13 pin.)
long castelnuovo_p4(long d);

}  // namespace qcv
