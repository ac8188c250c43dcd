#include "qcv/genus_bounds.hpp"

#include <stdexcept>

namespace qcv {

CurveOnQuadric::CurveOnQuadric(long d, long g, long k) : d(d), g(g), k(k) {
  if (d < 1) throw std::invalid_argument("CurveOnQuadric: degree must be >= 1");
  if (k < 1) throw std::invalid_argument("CurveOnQuadric: half-degree k must be >= 1");
}

Rational contained_bound(long d, long k) {
  if (k < 1) throw std::invalid_argument("contained_bound: k must be >= 1");
  const Rational dd(d);
  return dd * dd / (4 * k) + Rational(k - 3) * dd / 2;
}

Rational notcontained_bound(long d, long k) {
  if (k < 1) throw std::invalid_argument("notcontained_bound: k must be >= 1");
  const Rational dd(d);
  return dd * dd / (2 * k) + Rational(k - 4) * dd / 2;
}

Rational mu(long d, long g, long l) {
  const Rational dd(d);
  return dd * dd / 2 + Rational(l * (l - 3)) * dd - Rational(2 * l * (g - 1));
}

EpasResult epas_check(long d, long g, long s) {
  if (s < 1) throw std::invalid_argument("epas_check: s must be >= 1");
  const Rational mu_s = mu(d, g, s);
  const Rational upper(s * s * d);
  return {mu_s >= 0 && mu_s <= upper, mu_s, upper};
}

long castelnuovo_p4(long d) {
  if (d < 1) throw std::invalid_argument("castelnuovo_p4: degree must be >= 1");
  const Integer bound = floor_div(Integer(d) * Integer(d - 4), Integer(8)) + 1;
  return static_cast<long>(bound.get_si());
}

}  // namespace qcv
