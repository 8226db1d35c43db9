#include "arrangeo/infinity.hpp"

#include <unordered_set>

#include "arrangeo/errors.hpp"
#include "arrangeo/normal_system.hpp"

namespace arrangeo {

Hyperplane add_at_infinity(const Arrangement& arr, const QVector& direction) {
  if (direction.dim() != arr.dim()) throw DimensionError("direction has the wrong dimension");
  if (direction.is_zero()) throw GeometryError("direction must be nonzero");
  std::vector<QVector> normals;
  for (const auto& h : arr.hyperplanes()) normals.push_back(h.a);
  normals.push_back(direction);
  const auto verdict = is_maximally_independent(normals, arr.dim());
  if (!verdict.independent) {
    throw ValidationError("direction is not generic: normals " + verdict.witness->to_string() +
                          " would be linearly dependent");
  }
  std::optional<Rational> top;
  if (arr.size() >= arr.dim()) {
    for (const auto& s : subsets_of_size(arr.size(), arr.dim())) {
      const Rational v = direction.dot(vertex_point(arr, s));
      if (!top || v > *top) top = v;
    }
  }
  return Hyperplane(direction, top ? *top + Rational(1) : Rational(1));
}

bool is_at_infinity(const Arrangement& arr, const Hyperplane& h) {
  if (h.a.dim() != arr.dim()) throw DimensionError("hyperplane has the wrong dimension");
  bool below = false, above = false;
  if (arr.size() < arr.dim()) return true;
  for (const auto& s : subsets_of_size(arr.size(), arr.dim())) {
    const int side = h.evaluate(vertex_point(arr, s)).sign();
    below = below || side < 0;
    above = above || side > 0;
    if (below && above) return false;
  }
  return true;
}

Chart default_chart(const Hyperplane& h) {
  const QMatrix row = QMatrix::from_rows(std::vector<QVector>{h.a}, h.a.dim());
  auto base = particular_solution(row, QVector{h.b});
  return {std::move(*base), kernel_basis(row)};
}

Arrangement induced_arrangement(const Arrangement& arr, const Hyperplane& h, const Chart& chart) {
  const std::size_t m = arr.dim();
  if (m < 2) throw DimensionError("induced arrangements need m >= 2");
  if (chart.directions.size() != m - 1 || h.evaluate(chart.base).sign() != 0) {
    throw GeometryError("chart does not parametrize the hyperplane");
  }
  std::vector<Hyperplane> traces;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    QVector a(m - 1);
    for (std::size_t j = 0; j + 1 < m; ++j) a[j] = arr[i].a.dot(chart.directions[j]);
    if (a.is_zero()) throw ValidationError("hyperplane " + std::to_string(i + 1) + " is parallel to the chart hyperplane");
    traces.emplace_back(std::move(a), arr[i].b - arr[i].a.dot(chart.base));
  }
  Arrangement out(m - 1, std::move(traces));
  const auto verdict = validate_general_position(out);
  if (!verdict.valid) throw ValidationError("induced arrangement is not generic: " + verdict.reason);
  return out;
}

Arrangement induced_arrangement(const Arrangement& arr, const Hyperplane& h) {
  return induced_arrangement(arr, h, default_chart(h));
}

namespace {

// side[h][v]: side of hyperplane h at vertex v (an m-subset not containing h).
struct SideTable {
  std::vector<Subset> vertices;
  std::vector<std::vector<int>> side;
};

SideTable side_table(const Arrangement& arr) {
  SideTable t;
  if (arr.size() >= arr.dim()) t.vertices = subsets_of_size(arr.size(), arr.dim());
  std::vector<QVector> points;
  for (const auto& v : t.vertices) points.push_back(vertex_point(arr, v));
  t.side.assign(arr.size(), std::vector<int>(t.vertices.size(), 0));
  for (std::size_t h = 0; h < arr.size(); ++h)
    for (std::size_t v = 0; v < t.vertices.size(); ++v)
      if (!t.vertices[v].contains(h)) t.side[h][v] = arr[h].evaluate(points[v]).sign();
  return t;
}

bool one_sided(const SideTable& t, std::size_t h, std::uint64_t others) {
  bool below = false, above = false;
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    if ((t.vertices[v].mask() & ~others) != 0) continue;
    below = below || t.side[h][v] < 0;
    above = above || t.side[h][v] > 0;
  }
  return !(below && above);
}

}  // namespace

bool is_infinity_order(const Arrangement& arr, const std::vector<std::size_t>& order) {
  if (order.size() != arr.size()) throw DimensionError("order has the wrong length");
  (void)Permutation(order);  // validates that it is a bijection
  const SideTable t = side_table(arr);
  std::uint64_t before = 0;
  for (auto h : order) {
    if (!one_sided(t, h, before)) return false;
    before |= std::uint64_t{1} << h;
  }
  return true;
}

std::optional<std::vector<std::size_t>> is_infinity_arrangement(const Arrangement& arr) {
  const std::size_t n = arr.size();
  if (n > 24) throw CapacityError("infinity-order search is limited to 24 hyperplanes");
  const SideTable t = side_table(arr);
  std::unordered_set<std::uint64_t> failed;
  std::vector<std::size_t> order(n);

  // Fill positions n-1, n-2, ... : the last hyperplane of `set` must be at
  // infinity with respect to the rest of `set`.
  auto search = [&](auto&& self, std::uint64_t set, std::size_t count) -> bool {
    if (count == 0) return true;
    if (failed.count(set)) return false;
    for (std::size_t h = 0; h < n; ++h) {
      const std::uint64_t bit = std::uint64_t{1} << h;
      if (!(set & bit)) continue;
      if (!one_sided(t, h, set & ~bit)) continue;
      order[count - 1] = h;
      if (self(self, set & ~bit, count - 1)) return true;
    }
    failed.insert(set);
    return false;
  };
  const std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  if (!search(search, all, n)) return std::nullopt;
  return order;
}

}  // namespace arrangeo
