#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qcv/errors.hpp"

namespace qcv {

// The one scalar type of the math core: arbitrary-precision rationals,
// always canonical (lowest terms, positive denominator). mpq_class keeps
// results canonical through arithmetic; the helpers below keep explicit
// construction and I/O canonical as well.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Renders "p" when the value is integral, "p/q" otherwise. Never a float.
std::string rational_to_string(const Rational& value);

bool is_integer(const Rational& value);
Integer to_integer(const Rational& value);  // throws InconsistentData unless integral

// Floor/ceil of a rational as exact integers.
Integer rational_floor(const Rational& value);
Integer rational_ceil(const Rational& value);

// Floor/ceil division on integers, exact for negative operands too.
Integer floor_div(const Integer& num, const Integer& den);
Integer ceil_div(const Integer& num, const Integer& den);

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, const Rational& value);

  RationalMatrix multiply(const RationalMatrix& other) const;
  std::vector<Rational> apply(const std::vector<Rational>& vec) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;  // row-major
};

// Exact Gaussian elimination with partial pivoting (first nonzero pivot —
// over exact rationals any nonzero pivot is equally valid).
std::vector<Rational> solve_linear(const RationalMatrix& m, const std::vector<Rational>& rhs);
Rational determinant(const RationalMatrix& m);

class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coefficients);
  static RationalPoly constant(const Rational& c);
  static RationalPoly from_ints(const std::vector<long>& coefficients);

  bool is_zero() const { return coefficients_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  Rational coefficient(std::size_t power) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Rational eval(const Rational& at) const;

  RationalPoly operator+(const RationalPoly& rhs) const;
  RationalPoly operator-(const RationalPoly& rhs) const;
  RationalPoly operator*(const RationalPoly& rhs) const;
  RationalPoly scaled(const Rational& factor) const;
  bool operator==(const RationalPoly& rhs) const { return coefficients_ == rhs.coefficients_; }

 private:
  void trim();
  std::vector<Rational> coefficients_;  // index == power; leading entry nonzero
};

Rational eval_poly(const RationalPoly& p, const Rational& at);

// Cauchy bound: every real root r of p satisfies |r| < 1 + max_i |c_i|/|lead|
// (max over non-leading coefficients). Requires degree >= 1.
Integer cauchy_root_bound(const RationalPoly& p);

}  // namespace qcv
