#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrangeo/rational.hpp"

namespace arrangeo {

class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t dim) : entries_(dim) {}
  QVector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit QVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  static QVector unit(std::size_t dim, std::size_t axis);

  [[nodiscard]] std::size_t dim() const { return entries_.size(); }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  [[nodiscard]] auto begin() const { return entries_.begin(); }
  [[nodiscard]] auto end() const { return entries_.end(); }
  [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Rational dot(const QVector& other) const;

  /// Positive multiple with coprime integer entries. Throws on the zero vector.
  [[nodiscard]] QVector primitive() const;
  /// Integer, content 1, first nonzero entry positive. Throws on the zero vector.
  [[nodiscard]] QVector normalized() const;

  QVector& operator+=(const QVector& rhs);
  QVector& operator-=(const QVector& rhs);
  QVector& operator*=(const Rational& s);
  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator*(QVector a, const Rational& s) { return a *= s; }
  friend QVector operator*(const Rational& s, QVector a) { return a *= s; }
  QVector operator-() const;

  friend bool operator==(const QVector&, const QVector&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const QVector& v);

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(std::span<const QVector> rows, std::size_t cols);
  static QMatrix from_columns(std::span<const QVector> cols, std::size_t rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  [[nodiscard]] QVector row(std::size_t r) const;
  [[nodiscard]] QVector col(std::size_t c) const;
  [[nodiscard]] QMatrix transpose() const;
  [[nodiscard]] bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& a, const QVector& v);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination.
Rational det(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Unique solution of A x = b; SingularError when A is singular.
QVector solve_unique(const QMatrix& a, const QVector& b);

QMatrix inverse(const QMatrix& a);

/// Null-space basis. Each generator has coprime integer entries and a
/// positive first nonzero entry; generators follow the free columns in order.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Some solution of A x = b, supported on the pivot columns of A's reduced
/// row echelon form (free variables set to zero); nullopt when inconsistent.
std::optional<QVector> particular_solution(const QMatrix& a, const QVector& b);

/// Orthogonal projections for the standard bilinear form: `onto` projects onto
/// span(basis), `complement` onto its orthogonal complement.
struct Projectors {
  QMatrix onto;
  QMatrix complement;
};

/// Basis vectors must be linearly independent (RankError otherwise). The
/// projector is T^t (T T^t)^{-1} T with T the basis stacked as rows; no
/// square roots are involved.
Projectors projector_pair(std::span<const QVector> basis);

}  // namespace arrangeo
