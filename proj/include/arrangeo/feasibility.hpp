#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "arrangeo/combinatorics.hpp"
#include "arrangeo/linalg.hpp"

namespace arrangeo {

/// a·x <= b, or a·x < b when `strict`.
struct Inequality {
  QVector a;
  Rational b;
  bool strict = false;
};

/// Exact Fourier-Motzkin feasibility over Q. Returns a point satisfying every
/// row (strict rows strictly), or nullopt when the system has no solution.
std::optional<QVector> solve_inequalities(std::span<const Inequality> rows, std::size_t dim);

namespace detail {
/// Same elimination without redundancy pruning. Exponential; for tests only.
std::optional<QVector> solve_inequalities_unpruned(std::span<const Inequality> rows, std::size_t dim);
}  // namespace detail

/// sign·(a·x - b) > 0.
struct StrictRow {
  QVector a;
  Rational b;
  Sign sign = Sign::Plus;
};

/// Interior witness of an open polyhedron, or nullopt when it is empty.
std::optional<QVector> feasible_strict(std::span<const StrictRow> rows, std::size_t dim);
/// Same; the dimension is read off the rows, which must be nonempty.
std::optional<QVector> feasible_strict(std::span<const StrictRow> rows);

}  // namespace arrangeo
