#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrangeo/combinatorics.hpp"
#include "arrangeo/linalg.hpp"

namespace arrangeo {

/// {x : a·x = b}; the normal `a` is never zero.
struct Hyperplane {
  QVector a;
  Rational b;

  Hyperplane(QVector normal, Rational offset);

  /// a·x - b.
  [[nodiscard]] Rational evaluate(const QVector& x) const { return a.dot(x) - b; }
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Ordered hyperplanes in Q^m. Construction checks shapes only; general
/// position is a separate verdict (see validate_general_position).
class Arrangement {
 public:
  Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t size() const { return hyperplanes_.size(); }
  [[nodiscard]] const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }
  [[nodiscard]] const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

  /// n x m matrix of normals, in order.
  [[nodiscard]] QMatrix coefficients() const;
  [[nodiscard]] QVector offsets() const;

  [[nodiscard]] Arrangement with_offsets(const QVector& b) const;
  [[nodiscard]] Arrangement appended(const Hyperplane& h) const;
  [[nodiscard]] Arrangement restricted(const Subset& keep) const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::size_t dim_;
  std::vector<Hyperplane> hyperplanes_;
};

struct GeneralPositionVerdict {
  bool valid = true;
  std::optional<Subset> witness;  ///< smallest violating subset, lexicographically first
  std::string reason;
};

/// Condition 1: every r <= m normals are independent. Condition 2: every m+1
/// hyperplanes have empty common intersection.
GeneralPositionVerdict validate_general_position(const Arrangement& arr);

/// Throws ValidationError carrying the witness when `arr` is not in general position.
void require_general_position(const Arrangement& arr);

/// Intersection of the hyperplanes in `subscripts`: a point and a basis of
/// the direction space (dim - |S| vectors).
struct Flat {
  Subset subscripts;
  QVector point;
  std::vector<QVector> directions;
};

std::vector<Flat> skeleton(const Arrangement& arr, std::size_t k);

Flat flat_of(const Arrangement& arr, const Subset& s);

/// Unique common point of m hyperplanes.
QVector vertex_point(const Arrangement& arr, const Subset& s);

/// Index (0, 1 or 2) of the point lying between the other two. Throws
/// GeometryError when the points coincide or are not collinear.
std::size_t central_of_three(const QVector& p, const QVector& q, const QVector& r);

struct LineVertex {
  Subset vertex;   ///< m-subset: the line's subscripts plus one more
  QVector point;
  Rational parameter;  ///< direction·point, increasing along the list
};

/// Vertices on the line cut out by an (m-1)-subset, sorted along the
/// normalized line direction (integer, content 1, first nonzero positive).
std::vector<LineVertex> order_on_line(const Arrangement& arr, const Subset& line);

/// Normalized direction of the line cut out by an (m-1)-subset.
QVector line_direction(const Arrangement& arr, const Subset& line);

}  // namespace arrangeo
