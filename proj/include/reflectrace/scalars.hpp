#pragma once

// Exact arithmetic in the real field Q(sqrt2, sqrt3, sqrt5) and exact linear
// algebra over it.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace reflectrace {

// mpq_class keeps numerator/denominator in lowest terms with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);
std::size_t hash_value(Rational const& q);

class division_by_zero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

// An element of Q(sqrt2, sqrt3, sqrt5), stored as 8 rational coordinates.
//
// Internally coordinate `m` (a 3-bit mask) multiplies sqrt(2^b0 * 3^b1 *
// 5^b2); the public basis order is {1, √2, √3, √5, √6, √10, √15, √30}.
class QScalar {
 public:
  static constexpr std::size_t kDegree = 8;

  QScalar();
  QScalar(long integer);  // NOLINT(google-explicit-constructor)
  explicit QScalar(Rational const& q);

  // sqrt(n) for n in {1,2,3,5,6,10,15,30}.
  static QScalar sqrt_of(unsigned n);
  // Coordinates in the public basis order.
  static QScalar from_basis(std::array<Rational, kDegree> const& coords);

  // Coefficient of the i-th public basis element.
  Rational const& coefficient(std::size_t basis_index) const;
  std::array<Rational, kDegree> basis_coordinates() const;

  bool is_zero() const;
  bool is_rational() const;

  QScalar& operator+=(QScalar const& b);
  QScalar& operator-=(QScalar const& b);
  QScalar& operator*=(QScalar const& b);
  QScalar& operator/=(QScalar const& b);

  friend QScalar operator+(QScalar a, QScalar const& b) { return a += b; }
  friend QScalar operator-(QScalar a, QScalar const& b) { return a -= b; }
  friend QScalar operator*(QScalar const& a, QScalar const& b);
  friend QScalar operator/(QScalar a, QScalar const& b) { return a /= b; }
  QScalar operator-() const;

  QScalar inverse() const;

  friend bool operator==(QScalar const& a, QScalar const& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(QScalar const& a, QScalar const& b) {
    return !(a == b);
  }

  Sign sign() const;
  double to_double() const;
  std::size_t hash() const;
  std::string to_string() const;

  // Image under the field automorphism negating the square roots selected
  // by `flips` (bit0: √2, bit1: √3, bit2: √5).
  QScalar conjugate(unsigned flips) const;

 private:
  std::array<Rational, kDegree> c_;
};

Sign sign(QScalar const& a);
int compare(QScalar const& a, QScalar const& b);  // -1, 0, 1
std::ostream& operator<<(std::ostream& os, QScalar const& a);

using QVector = std::vector<QScalar>;

class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t dim);  // zero matrix
  static QMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  QScalar& operator()(std::size_t r, std::size_t c) {
    return entries_[r * dim_ + c];
  }
  QScalar const& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }
  std::vector<QScalar> const& entries() const { return entries_; }

  QMatrix transpose() const;
  QVector column(std::size_t c) const;
  QVector row(std::size_t r) const;
  bool is_identity() const;
  bool is_zero() const;

  friend QMatrix operator*(QMatrix const& a, QMatrix const& b);
  friend QMatrix operator+(QMatrix const& a, QMatrix const& b);
  friend QMatrix operator-(QMatrix const& a, QMatrix const& b);
  friend QVector operator*(QMatrix const& a, QVector const& v);
  friend bool operator==(QMatrix const& a, QMatrix const& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(QMatrix const& a, QMatrix const& b) {
    return !(a == b);
  }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<QScalar> entries_;
};

QVector operator*(QVector const& row, QMatrix const& m);  // row vector times m
int compare(QMatrix const& a, QMatrix const& b);           // entrywise lexical

struct QMatrixHash {
  std::size_t operator()(QMatrix const& m) const { return m.hash(); }
};

// Row echelon form by fraction-free (Bareiss) elimination on a rectangular
// matrix given as rows. Returns the pivot columns in order.
struct EchelonForm {
  std::vector<QVector> rows;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};
EchelonForm bareiss_echelon(std::vector<QVector> rows, std::size_t columns);

QScalar determinant(QMatrix const& m);
std::size_t rank(QMatrix const& m);
// Exact basis of ker(m).
std::vector<QVector> kernel(QMatrix const& m);
// Exact basis of {v : m v = v}.
std::vector<QVector> fixed_space(QMatrix const& m);
// Coefficients c_0..c_n of det(x I - m), c_n = 1.
std::vector<QScalar> characteristic_polynomial(QMatrix const& m);
// Leading principal minors of orders 1..dim.
std::vector<QScalar> leading_principal_minors(QMatrix const& m);
QMatrix principal_submatrix(QMatrix const& m, std::vector<std::size_t> const& idx);

}  // namespace reflectrace
