#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrangeo/normal_system.hpp"

namespace arrangeo {

/// Unordered pair {x, y} of non-antipodal vectors, stored with x.line < y.line.
struct CompatVertex {
  SignedLine x;
  SignedLine y;

  static CompatVertex make(SignedLine a, SignedLine b);
  /// "{-1,+2}".
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const CompatVertex&, const CompatVertex&) = default;
};

/// a·x1 + b·y1 = c·x2 + d·y2 for some a, b, c, d > 0. Vectors must lie in Q^3.
bool are_compatible(const QVector& x1, const QVector& y1, const QVector& x2, const QVector& y2);

/// Positive (a, b, c, d) realizing compatibility, scaled to coprime integers,
/// when the kernel is one-dimensional and positive.
std::optional<QVector> compatibility_coefficients(const QVector& x1, const QVector& y1, const QVector& x2,
                                                  const QVector& y2);

class CompatGraph {
 public:
  CompatGraph(std::size_t lines, std::vector<std::vector<std::size_t>> adjacency);

  [[nodiscard]] std::size_t lines() const { return lines_; }
  [[nodiscard]] std::size_t vertex_count() const { return adjacency_.size(); }
  [[nodiscard]] CompatVertex vertex(std::size_t index) const;
  [[nodiscard]] std::size_t index_of(const CompatVertex& v) const;
  [[nodiscard]] const std::vector<std::size_t>& neighbors(std::size_t index) const { return adjacency_[index]; }
  [[nodiscard]] std::size_t degree(std::size_t index) const { return adjacency_[index].size(); }
  [[nodiscard]] bool adjacent(std::size_t a, std::size_t b) const;
  [[nodiscard]] std::size_t edge_count() const;
  /// Edges (a, b) with a < b, in lexicographic order.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  [[nodiscard]] std::string to_dot() const;

 private:
  std::size_t lines_;
  std::vector<std::vector<std::size_t>> adjacency_;  // sorted
};

CompatGraph build_graph(const NormalSystem& ns);

/// Degrees sorted ascending.
std::vector<std::size_t> degree_profile(const CompatGraph& g);

/// Per line, the sorted degrees of the vertices that involve it.
std::vector<std::vector<std::size_t>> line_degree_profiles(const CompatGraph& g);

/// Does the vertex map induced by δ carry edges onto edges and non-edges onto non-edges?
bool induces_isomorphism(const CompatGraph& g1, const CompatGraph& g2, const AntipodalMap& delta);

/// An antipodal map inducing a graph isomorphism, if one exists.
std::optional<AntipodalMap> find_graph_isomorphism(const CompatGraph& g1, const CompatGraph& g2);

bool graphs_compatible(const CompatGraph& g1, const CompatGraph& g2);

}  // namespace arrangeo
