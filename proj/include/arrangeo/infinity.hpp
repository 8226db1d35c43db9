#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arrangeo/arrangement.hpp"

namespace arrangeo {

/// direction·x = b with every vertex strictly on the side direction·v < b:
/// b is the largest vertex value plus one (1 when there are no vertices).
/// Throws ValidationError naming a dependent subset when the direction is
/// not generic with respect to the normals.
Hyperplane add_at_infinity(const Arrangement& arr, const QVector& direction);

/// All vertices of `arr` lie (weakly) on one side of `h`.
bool is_at_infinity(const Arrangement& arr, const Hyperplane& h);

/// Affine parametrization x = base + sum w_j directions_j of a hyperplane.
struct Chart {
  QVector base;
  std::vector<QVector> directions;
};

/// Base point supported on pivot columns, direction basis from the kernel.
Chart default_chart(const Hyperplane& h);

/// The traces H ∩ H_i written in chart coordinates, as an arrangement in
/// dimension m-1. Throws ValidationError when the traces are not in general position.
Arrangement induced_arrangement(const Arrangement& arr, const Hyperplane& h, const Chart& chart);
Arrangement induced_arrangement(const Arrangement& arr, const Hyperplane& h);

/// Does the order (hyperplane order[l] added l-th) add each hyperplane at
/// infinity with respect to those before it?
bool is_infinity_order(const Arrangement& arr, const std::vector<std::size_t>& order);

/// A valid build order, searched from the last hyperplane backwards, or nullopt.
std::optional<std::vector<std::size_t>> is_infinity_arrangement(const Arrangement& arr);

}  // namespace arrangeo
