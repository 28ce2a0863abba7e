#include "reflectrace/scalars.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <utility>

namespace reflectrace {

namespace {

// Public basis index -> internal mask.
constexpr std::array<unsigned, QScalar::kDegree> kBasisMask = {0, 1, 2, 4,
                                                               3, 5, 6, 7};
// Internal mask -> radicand.
constexpr std::array<unsigned, QScalar::kDegree> kRadicand = {1,  2,  3,  6,
                                                              5, 10, 15, 30};

constexpr unsigned common_square(unsigned a, unsigned b) {
  unsigned const c = a & b;
  return ((c & 1U) ? 2U : 1U) * ((c & 2U) ? 3U : 1U) * ((c & 4U) ? 5U : 1U);
}

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_mpz(mpz_class const& z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  std::size_t const n = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < n; ++i) {
    hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)));
  }
  return h;
}

}  // namespace

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw division_by_zero("rational with zero denominator");
  }
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::size_t hash_value(Rational const& q) {
  std::size_t h = hash_mpz(q.get_num());
  hash_combine(h, hash_mpz(q.get_den()));
  return h;
}

QScalar::QScalar() = default;

QScalar::QScalar(long integer) { c_[0] = integer; }

QScalar::QScalar(Rational const& q) { c_[0] = q; }

QScalar QScalar::sqrt_of(unsigned n) {
  for (unsigned m = 0; m < kDegree; ++m) {
    if (kRadicand[m] == n) {
      QScalar r;
      r.c_[m] = 1;
      return r;
    }
  }
  throw std::invalid_argument("sqrt_of: " + std::to_string(n) +
                              " is not a basis radicand");
}

QScalar QScalar::from_basis(std::array<Rational, kDegree> const& coords) {
  QScalar r;
  for (std::size_t i = 0; i < kDegree; ++i) {
    r.c_[kBasisMask[i]] = coords[i];
  }
  return r;
}

Rational const& QScalar::coefficient(std::size_t basis_index) const {
  return c_.at(kBasisMask.at(basis_index));
}

std::array<Rational, QScalar::kDegree> QScalar::basis_coordinates() const {
  std::array<Rational, kDegree> out;
  for (std::size_t i = 0; i < kDegree; ++i) {
    out[i] = c_[kBasisMask[i]];
  }
  return out;
}

bool QScalar::is_zero() const {
  for (auto const& q : c_) {
    if (sgn(q) != 0) {
      return false;
    }
  }
  return true;
}

bool QScalar::is_rational() const {
  for (std::size_t m = 1; m < kDegree; ++m) {
    if (sgn(c_[m]) != 0) {
      return false;
    }
  }
  return true;
}

QScalar& QScalar::operator+=(QScalar const& b) {
  for (std::size_t m = 0; m < kDegree; ++m) {
    if (sgn(b.c_[m]) != 0) {
      c_[m] += b.c_[m];
    }
  }
  return *this;
}

QScalar& QScalar::operator-=(QScalar const& b) {
  for (std::size_t m = 0; m < kDegree; ++m) {
    if (sgn(b.c_[m]) != 0) {
      c_[m] -= b.c_[m];
    }
  }
  return *this;
}

QScalar operator*(QScalar const& a, QScalar const& b) {
  QScalar r;
  Rational t;
  for (unsigned i = 0; i < QScalar::kDegree; ++i) {
    if (sgn(a.c_[i]) == 0) {
      continue;
    }
    for (unsigned j = 0; j < QScalar::kDegree; ++j) {
      if (sgn(b.c_[j]) == 0) {
        continue;
      }
      t = a.c_[i] * b.c_[j];
      unsigned const f = common_square(i, j);
      if (f != 1) {
        t *= f;
      }
      r.c_[i ^ j] += t;
    }
  }
  return r;
}

QScalar& QScalar::operator*=(QScalar const& b) {
  *this = *this * b;
  return *this;
}

QScalar& QScalar::operator/=(QScalar const& b) {
  *this = *this * b.inverse();
  return *this;
}

QScalar QScalar::operator-() const {
  QScalar r;
  for (std::size_t m = 0; m < kDegree; ++m) {
    r.c_[m] = -c_[m];
  }
  return r;
}

QScalar QScalar::conjugate(unsigned flips) const {
  QScalar r = *this;
  for (unsigned m = 0; m < kDegree; ++m) {
    if (__builtin_popcount(m & flips) % 2 == 1) {
      r.c_[m] = -r.c_[m];
    }
  }
  return r;
}

QScalar QScalar::inverse() const {
  if (is_zero()) {
    throw division_by_zero("QScalar division by zero");
  }
  if (is_rational()) {
    QScalar r;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // x^{-1} = (product of the 7 nontrivial conjugates) / norm(x).
  QScalar numerator(1);
  for (unsigned flips = 1; flips < kDegree; ++flips) {
    numerator *= conjugate(flips);
  }
  QScalar const norm = numerator * *this;
  // The norm is fixed by every automorphism, hence rational.
  Rational const inv = 1 / norm.c_[0];
  for (auto& q : numerator.c_) {
    q *= inv;
  }
  return numerator;
}

Sign QScalar::sign() const {
  if (is_zero()) {
    return Sign::zero;
  }
  if (is_rational()) {
    return sgn(c_[0]) > 0 ? Sign::positive : Sign::negative;
  }
  // Dyadic enclosures floor(sqrt(r 4^p)) <= 2^p sqrt(r) < floor(..) + 1,
  // refined until the enclosure of the value excludes zero.
  for (unsigned long bits = 32;; bits *= 2) {
    Rational lower = 0;
    Rational upper = 0;
    mpz_class scaled;
    for (unsigned m = 0; m < kDegree; ++m) {
      int const s = sgn(c_[m]);
      if (s == 0) {
        continue;
      }
      if (m == 0) {
        mpz_class one;
        mpz_ui_pow_ui(one.get_mpz_t(), 2, bits);
        Rational v = c_[m] * Rational(one);
        lower += v;
        upper += v;
        continue;
      }
      mpz_ui_pow_ui(scaled.get_mpz_t(), 4, bits);
      scaled *= kRadicand[m];
      mpz_class lo;
      mpz_sqrt(lo.get_mpz_t(), scaled.get_mpz_t());
      mpz_class hi = lo + 1;
      if (s > 0) {
        lower += c_[m] * Rational(lo);
        upper += c_[m] * Rational(hi);
      } else {
        lower += c_[m] * Rational(hi);
        upper += c_[m] * Rational(lo);
      }
    }
    if (sgn(lower) > 0) {
      return Sign::positive;
    }
    if (sgn(upper) < 0) {
      return Sign::negative;
    }
  }
}

double QScalar::to_double() const {
  double v = 0.0;
  for (unsigned m = 0; m < kDegree; ++m) {
    if (sgn(c_[m]) != 0) {
      v += c_[m].get_d() * std::sqrt(static_cast<double>(kRadicand[m]));
    }
  }
  return v;
}

std::size_t QScalar::hash() const {
  std::size_t h = 0;
  for (auto const& q : c_) {
    hash_combine(h, sgn(q) == 0 ? 0 : hash_value(q));
  }
  return h;
}

std::string QScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < kDegree; ++i) {
    Rational const& q = c_[kBasisMask[i]];
    if (sgn(q) == 0) {
      continue;
    }
    unsigned const r = kRadicand[kBasisMask[i]];
    Rational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) {
        os << "-";
      }
    } else {
      os << (sgn(q) < 0 ? "-" : "+");
    }
    if (r == 1) {
      os << mag.get_str();
    } else {
      if (mag != 1) {
        os << mag.get_str() << "*";
      }
      os << "sqrt" << r;
    }
    first = false;
  }
  if (first) {
    os << "0";
  }
  return os.str();
}

Sign sign(QScalar const& a) { return a.sign(); }

int compare(QScalar const& a, QScalar const& b) {
  return static_cast<int>((a - b).sign());
}

std::ostream& operator<<(std::ostream& os, QScalar const& a) {
  return os << a.to_string();
}

// ---------------------------------------------------------------- QMatrix

QMatrix::QMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

QMatrix QMatrix::identity(std::size_t dim) {
  QMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = 1;
  }
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    v[r] = (*this)(r, c);
  }
  return v;
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * dim_),
                 entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * dim_));
}

bool QMatrix::is_identity() const { return *this == identity(dim_); }

bool QMatrix::is_zero() const {
  for (auto const& e : entries_) {
    if (!e.is_zero()) {
      return false;
    }
  }
  return true;
}

QMatrix operator*(QMatrix const& a, QMatrix const& b) {
  if (a.dim_ != b.dim_) {
    throw std::invalid_argument("QMatrix dimension mismatch");
  }
  std::size_t const n = a.dim_;
  QMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      QScalar const& aik = a(i, k);
      if (aik.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        QScalar const& bkj = b(k, j);
        if (!bkj.is_zero()) {
          r(i, j) += aik * bkj;
        }
      }
    }
  }
  return r;
}

QMatrix operator+(QMatrix const& a, QMatrix const& b) {
  QMatrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) {
    r.entries_[i] += b.entries_[i];
  }
  return r;
}

QMatrix operator-(QMatrix const& a, QMatrix const& b) {
  QMatrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) {
    r.entries_[i] -= b.entries_[i];
  }
  return r;
}

QVector operator*(QMatrix const& a, QVector const& v) {
  QVector r(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) {
        r[i] += a(i, k) * v[k];
      }
    }
  }
  return r;
}

QVector operator*(QVector const& row, QMatrix const& m) {
  QVector r(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) {
    if (row[k].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (!m(k, j).is_zero()) {
        r[j] += row[k] * m(k, j);
      }
    }
  }
  return r;
}

int compare(QMatrix const& a, QMatrix const& b) {
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (a.entries()[i] != b.entries()[i]) {
      return compare(a.entries()[i], b.entries()[i]);
    }
  }
  return 0;
}

std::size_t QMatrix::hash() const {
  std::size_t h = dim_;
  for (auto const& e : entries_) {
    hash_combine(h, e.hash());
  }
  return h;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < dim_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < dim_; ++c) {
      os << (c ? ", " : "") << (*this)(r, c);
    }
  }
  os << "]";
  return os.str();
}

// ------------------------------------------------------------ elimination

EchelonForm bareiss_echelon(std::vector<QVector> rows, std::size_t columns) {
  EchelonForm out;
  std::size_t const m = rows.size();
  QScalar previous(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < m; ++c) {
    std::size_t pivot = r;
    while (pivot < m && rows[pivot][c].is_zero()) {
      ++pivot;
    }
    if (pivot == m) {
      continue;
    }
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < columns; ++j) {
        rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) /
                     previous;
      }
      rows[i][c] = QScalar();
    }
    previous = rows[r][c];
    out.pivot_columns.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

QScalar determinant(QMatrix const& m) {
  std::size_t const n = m.dim();
  if (n == 0) {
    return QScalar(1);
  }
  std::vector<QVector> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = m.row(i);
  }
  QScalar previous(1);
  int swaps = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) {
        ++p;
      }
      if (p == n) {
        return QScalar();
      }
      std::swap(a[k], a[p]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / previous;
      }
      a[i][k] = QScalar();
    }
    previous = a[k][k];
  }
  QScalar d = a[n - 1][n - 1];
  return swaps % 2 == 0 ? d : -d;
}

std::size_t rank(QMatrix const& m) {
  std::vector<QVector> rows(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    rows[i] = m.row(i);
  }
  return bareiss_echelon(std::move(rows), m.dim()).rank();
}

std::vector<QVector> kernel(QMatrix const& m) {
  std::size_t const n = m.dim();
  std::vector<QVector> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = m.row(i);
  }
  EchelonForm const e = bareiss_echelon(std::move(rows), n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_columns) {
    is_pivot[c] = true;
  }
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    QVector x(n);
    x[free] = 1;
    for (std::size_t k = e.rank(); k-- > 0;) {
      std::size_t const pc = e.pivot_columns[k];
      QScalar acc;
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (!x[j].is_zero() && !e.rows[k][j].is_zero()) {
          acc += e.rows[k][j] * x[j];
        }
      }
      x[pc] = acc.is_zero() ? QScalar() : -acc / e.rows[k][pc];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<QVector> fixed_space(QMatrix const& m) {
  return kernel(m - QMatrix::identity(m.dim()));
}

std::vector<QScalar> characteristic_polynomial(QMatrix const& m) {
  // Faddeev-LeVerrier.
  std::size_t const n = m.dim();
  std::vector<QScalar> c(n + 1);
  c[n] = 1;
  QMatrix mk(n);
  QMatrix const id = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix scaled = id;
    for (std::size_t i = 0; i < n; ++i) {
      scaled(i, i) = c[n - k + 1];
    }
    mk = m * mk + scaled;
    QMatrix const amk = m * mk;
    QScalar trace;
    for (std::size_t i = 0; i < n; ++i) {
      trace += amk(i, i);
    }
    c[n - k] = -trace / QScalar(static_cast<long>(k));
  }
  return c;
}

QMatrix principal_submatrix(QMatrix const& m,
                            std::vector<std::size_t> const& idx) {
  QMatrix s(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      s(i, j) = m(idx[i], idx[j]);
    }
  }
  return s;
}

std::vector<QScalar> leading_principal_minors(QMatrix const& m) {
  std::vector<QScalar> minors;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < m.dim(); ++k) {
    idx.push_back(k);
    minors.push_back(determinant(principal_submatrix(m, idx)));
  }
  return minors;
}

}  // namespace reflectrace
