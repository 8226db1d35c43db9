#include "arrangeo/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "arrangeo/errors.hpp"

namespace arrangeo {

// ---------------------------------------------------------------- QVector

QVector QVector::unit(std::size_t dim, std::size_t axis) {
  QVector v(dim);
  v[axis] = 1;
  return v;
}

bool QVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

Rational QVector::dot(const QVector& other) const {
  if (other.dim() != dim()) throw DimensionError("dot product of vectors with different dimensions");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < dim(); ++i) acc += entries_[i].raw() * other.entries_[i].raw();
  return Rational(std::move(acc));
}

QVector QVector::primitive() const {
  if (is_zero()) throw GeometryError("cannot normalize the zero vector");
  mpz_class lcm = 1;
  for (const auto& e : entries_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.raw().get_den_mpz_t());
  mpz_class content = 0;
  std::vector<mpz_class> ints;
  ints.reserve(dim());
  for (const auto& e : entries_) {
    mpz_class v = e.raw().get_num() * (lcm / e.raw().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  QVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = Rational(ints[i] / content, 1);
  return out;
}

QVector QVector::normalized() const {
  QVector out = primitive();
  for (const auto& e : out.entries_) {
    if (e.is_zero()) continue;
    if (e.sign() < 0) out = -out;
    break;
  }
  return out;
}

QVector& QVector::operator+=(const QVector& rhs) {
  if (rhs.dim() != dim()) throw DimensionError("vector sum with different dimensions");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& rhs) {
  if (rhs.dim() != dim()) throw DimensionError("vector difference with different dimensions");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

QVector& QVector::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

QVector QVector::operator-() const {
  QVector out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

std::string QVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) s += ", ";
    s += entries_[i].to_string();
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const QVector& v) { return os << v.to_string(); }

// ---------------------------------------------------------------- QMatrix

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(std::span<const QVector> rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != cols) throw DimensionError("row has wrong dimension");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::from_columns(std::span<const QVector> cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

QVector QMatrix::row(std::size_t r) const {
  QVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

QVector QMatrix::col(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      mpq_class acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k).raw() * b(k, j).raw();
      out(i, j) = Rational(std::move(acc));
    }
  }
  return out;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols() != v.dim()) throw DimensionError("matrix-vector product shape mismatch");
  QVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpq_class acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k).raw() * v[k].raw();
    out[i] = Rational(std::move(acc));
  }
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum shape mismatch");
  QMatrix out(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference shape mismatch");
  QMatrix out(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << row(r);
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) { return os << m.to_string(); }

// ---------------------------------------------------------------- kernels

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Scales each row to integers; returns the product of the row scale factors.
mpz_class to_integer_rows(const QMatrix& m, IntMatrix& out) {
  out.assign(m.rows(), std::vector<mpz_class>(m.cols()));
  mpz_class scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r][c] = m(r, c).raw().get_num() * (lcm / m(r, c).raw().get_den());
    scale *= lcm;
  }
  return scale;
}

struct EchelonInfo {
  std::size_t rank = 0;
  int swaps_sign = 1;
  std::vector<std::size_t> pivot_cols;
};

/// In-place fraction-free row echelon form over the first `limit` columns.
/// Every intermediate entry is a minor of the input, so each division is exact.
EchelonInfo bareiss(IntMatrix& a, std::size_t cols, std::size_t limit) {
  EchelonInfo info;
  const std::size_t rows = a.size();
  mpz_class prev = 1;
  for (std::size_t c = 0; c < limit && info.rank < rows; ++c) {
    const std::size_t r = info.rank;
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      info.swaps_sign = -info.swaps_sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    info.pivot_cols.push_back(c);
    ++info.rank;
  }
  return info;
}

struct Rref {
  QMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan reduced row echelon form over the first `limit` columns.
Rref rref(QMatrix m, std::size_t limit) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational pivot = m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) /= pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

}  // namespace

Rational det(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a;
  const mpz_class scale = to_integer_rows(m, a);
  const EchelonInfo info = bareiss(a, n, n);
  if (info.rank < n) return 0;
  return Rational(info.swaps_sign * a[n - 1][n - 1], scale);
}

std::size_t rank(const QMatrix& m) {
  IntMatrix a;
  to_integer_rows(m, a);
  return bareiss(a, m.cols(), m.cols()).rank;
}

QVector solve_unique(const QMatrix& a, const QVector& b) {
  if (!a.is_square()) throw DimensionError("solve_unique needs a square matrix");
  if (b.dim() != a.rows()) throw DimensionError("right-hand side has wrong dimension");
  const std::size_t n = a.rows();
  QMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  IntMatrix m;
  to_integer_rows(aug, m);
  const EchelonInfo info = bareiss(m, n + 1, n);
  if (info.rank < n) throw SingularError("singular system");
  std::vector<mpq_class> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    mpq_class acc = m[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= m[ii][j] * x[j];
    x[ii] = acc / m[ii][ii];
    x[ii].canonicalize();
  }
  QVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = Rational(std::move(x[i]));
  return out;
}

QMatrix inverse(const QMatrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const Rref r = rref(std::move(aug), n);
  if (r.pivot_cols.size() < n) throw SingularError("matrix is not invertible");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  const Rref r = rref(m, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -r.reduced(i, f);
    basis.push_back(v.normalized());
  }
  return basis;
}

std::optional<QVector> particular_solution(const QMatrix& a, const QVector& b) {
  if (b.dim() != a.rows()) throw DimensionError("right-hand side has wrong dimension");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Rref r = rref(std::move(aug), a.cols());
  for (std::size_t i = r.pivot_cols.size(); i < a.rows(); ++i) {
    if (!r.reduced(i, a.cols()).is_zero()) return std::nullopt;
  }
  QVector x(a.cols());
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) x[r.pivot_cols[i]] = r.reduced(i, a.cols());
  return x;
}

Projectors projector_pair(std::span<const QVector> basis) {
  if (basis.empty()) throw DimensionError("projector_pair needs a nonempty basis");
  const std::size_t n = basis.front().dim();
  const QMatrix t = QMatrix::from_rows(basis, n);
  if (rank(t) != basis.size()) throw RankError("projector basis is linearly dependent");
  const QMatrix tt = t.transpose();
  QMatrix p = tt * inverse(t * tt) * t;
  QMatrix q = QMatrix::identity(n) - p;
  return {std::move(p), std::move(q)};
}

}  // namespace arrangeo
