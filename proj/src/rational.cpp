#include "qcv/rational.hpp"

#include <stdexcept>
#include <utility>

namespace qcv {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return make_rational(Integer(text), Integer(1));
    }
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unparsable rational: '" + text + "'");
  }
}

std::string rational_to_string(const Rational& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer to_integer(const Rational& value) {
  if (!is_integer(value)) {
    throw InconsistentData("expected integer, got " + rational_to_string(value));
  }
  return value.get_num();
}

Integer floor_div(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::invalid_argument("floor_div by zero");
  }
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::invalid_argument("ceil_div by zero");
  }
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer rational_floor(const Rational& value) {
  return floor_div(value.get_num(), value.get_den());
}

Integer rational_ceil(const Rational& value) {
  return ceil_div(value.get_num(), value.get_den());
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("matrix entry count does not match dimensions");
  }
}

const Rational& RationalMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  return entries_[row * cols_ + col];
}

void RationalMatrix::set(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  entries_[row * cols_ + col] = value;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out.set(i, j, out.at(i, j) + a * other.at(k, j));
      }
    }
  }
  return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& vec) const {
  if (vec.size() != cols_) {
    throw std::invalid_argument("matrix-vector dimension mismatch");
  }
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out[i] += at(i, j) * vec[j];
    }
  }
  return out;
}

namespace {

// Shared elimination core: reduces `work` in place, returns the permutation
// sign, and throws on a zero pivot column only if `require_regular`.
int eliminate(std::vector<std::vector<Rational>>& work, bool require_regular) {
  const std::size_t n = work.size();
  int sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot][col] == 0) ++pivot;
    if (pivot == n) {
      if (require_regular) {
        throw SingularMatrix("zero pivot column " + std::to_string(col));
      }
      sign = 0;
      continue;
    }
    if (pivot != col) {
      std::swap(work[pivot], work[col]);
      sign = -sign;
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      if (work[row][col] == 0) continue;
      const Rational factor = work[row][col] / work[col][col];
      for (std::size_t j = col; j < work[row].size(); ++j) {
        work[row][j] -= factor * work[col][j];
      }
    }
  }
  return sign;
}

}  // namespace

std::vector<Rational> solve_linear(const RationalMatrix& m, const std::vector<Rational>& rhs) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("solve_linear requires a square matrix");
  }
  if (rhs.size() != m.rows()) {
    throw std::invalid_argument("rhs length does not match matrix");
  }
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> work(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work[i][j] = m.at(i, j);
    work[i][n] = rhs[i];
  }
  eliminate(work, /*require_regular=*/true);
  std::vector<Rational> solution(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = work[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= work[i][j] * solution[j];
    solution[i] = acc / work[i][i];
  }
  return solution;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant requires a square matrix");
  }
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> work(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work[i][j] = m.at(i, j);
  }
  const int sign = eliminate(work, /*require_regular=*/false);
  if (sign == 0) return Rational(0);
  Rational det(sign);
  for (std::size_t i = 0; i < n; ++i) det *= work[i][i];
  return det;
}

RationalPoly::RationalPoly(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

RationalPoly RationalPoly::constant(const Rational& c) {
  return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::from_ints(const std::vector<long>& coefficients) {
  std::vector<Rational> c;
  c.reserve(coefficients.size());
  for (long v : coefficients) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

void RationalPoly::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

Rational RationalPoly::coefficient(std::size_t power) const {
  if (power >= coefficients_.size()) return Rational(0);
  return coefficients_[power];
}

const Rational& RationalPoly::leading() const {
  if (coefficients_.empty()) {
    throw std::logic_error("zero polynomial has no leading coefficient");
  }
  return coefficients_.back();
}

Rational RationalPoly::eval(const Rational& at) const {
  Rational acc(0);
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    acc = acc * at + coefficients_[i];
  }
  return acc;
}

RationalPoly RationalPoly::operator+(const RationalPoly& rhs) const {
  std::vector<Rational> out(std::max(coefficients_.size(), rhs.coefficients_.size()), Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) out[i] += coefficients_[i];
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) out[i] += rhs.coefficients_[i];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator-(const RationalPoly& rhs) const {
  return *this + rhs.scaled(Rational(-1));
}

RationalPoly RationalPoly::operator*(const RationalPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return RationalPoly();
  std::vector<Rational> out(coefficients_.size() + rhs.coefficients_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * rhs.coefficients_[j];
    }
  }
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::scaled(const Rational& factor) const {
  std::vector<Rational> out = coefficients_;
  for (auto& c : out) c *= factor;
  return RationalPoly(std::move(out));
}

Rational eval_poly(const RationalPoly& p, const Rational& at) { return p.eval(at); }

Integer cauchy_root_bound(const RationalPoly& p) {
  if (p.degree() < 1)
    throw std::invalid_argument("cauchy_root_bound: polynomial must have degree >= 1");
  Rational lead = p.leading();
  if (lead < 0) lead = -lead;
  Rational worst = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational c = p.coefficient(i);
    if (c < 0) c = -c;
    c /= lead;
    if (c > worst) worst = c;
  }
  return rational_ceil(worst) + 1;
}

}  // namespace qcv
