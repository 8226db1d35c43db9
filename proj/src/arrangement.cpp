#include "arrangeo/arrangement.hpp"

#include <algorithm>

#include "arrangeo/errors.hpp"

namespace arrangeo {

Hyperplane::Hyperplane(QVector normal, Rational offset) : a(std::move(normal)), b(std::move(offset)) {
  if (a.dim() == 0 || a.is_zero()) throw GeometryError("hyperplane normal must be nonzero");
}

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)) {
  if (dim_ == 0) throw DimensionError("arrangement dimension must be positive");
  for (const auto& h : hyperplanes_) {
    if (h.a.dim() != dim_) throw DimensionError("hyperplane normal has wrong dimension");
  }
}

QMatrix Arrangement::coefficients() const {
  QMatrix m(size(), dim_);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = hyperplanes_[i].a[j];
  return m;
}

QVector Arrangement::offsets() const {
  QVector b(size());
  for (std::size_t i = 0; i < size(); ++i) b[i] = hyperplanes_[i].b;
  return b;
}

Arrangement Arrangement::with_offsets(const QVector& b) const {
  if (b.dim() != size()) throw DimensionError("offset vector has wrong length");
  std::vector<Hyperplane> hs;
  hs.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) hs.emplace_back(hyperplanes_[i].a, b[i]);
  return Arrangement(dim_, std::move(hs));
}

Arrangement Arrangement::appended(const Hyperplane& h) const {
  auto hs = hyperplanes_;
  hs.push_back(h);
  return Arrangement(dim_, std::move(hs));
}

Arrangement Arrangement::restricted(const Subset& keep) const {
  std::vector<Hyperplane> hs;
  for (auto i : keep) hs.push_back(hyperplanes_.at(i));
  return Arrangement(dim_, std::move(hs));
}

namespace {

QMatrix normals_of(const Arrangement& arr, const Subset& s) {
  QMatrix m(s.size(), arr.dim());
  for (std::size_t r = 0; r < s.size(); ++r)
    for (std::size_t c = 0; c < arr.dim(); ++c) m(r, c) = arr[s[r]].a[c];
  return m;
}

QMatrix augmented_of(const Arrangement& arr, const Subset& s) {
  QMatrix m(s.size(), arr.dim() + 1);
  for (std::size_t r = 0; r < s.size(); ++r) {
    for (std::size_t c = 0; c < arr.dim(); ++c) m(r, c) = arr[s[r]].a[c];
    m(r, arr.dim()) = arr[s[r]].b;
  }
  return m;
}

}  // namespace

GeneralPositionVerdict validate_general_position(const Arrangement& arr) {
  const std::size_t m = arr.dim();
  const std::size_t n = arr.size();
  for (std::size_t r = 1; r <= std::min(m, n); ++r) {
    for (const auto& s : subsets_of_size(n, r)) {
      if (rank(normals_of(arr, s)) < r) {
        return {false, s, "normals of " + s.to_string() + " are linearly dependent"};
      }
    }
  }
  // With Condition 1 in place, m+1 hyperplanes meet iff det [A_S | b_S] = 0;
  // larger subsets then follow.
  if (n > m) {
    for (const auto& s : subsets_of_size(n, m + 1)) {
      if (det(augmented_of(arr, s)).is_zero()) {
        return {false, s, "hyperplanes " + s.to_string() + " share a common point"};
      }
    }
  }
  return {};
}

void require_general_position(const Arrangement& arr) {
  const auto verdict = validate_general_position(arr);
  if (!verdict.valid) throw ValidationError("not in general position: " + verdict.reason);
}

Flat flat_of(const Arrangement& arr, const Subset& s) {
  if (s.size() > arr.dim()) throw DimensionError("flat needs at most m subscripts");
  const QMatrix a = normals_of(arr, s);
  QVector rhs(s.size());
  for (std::size_t r = 0; r < s.size(); ++r) rhs[r] = arr[s[r]].b;
  auto point = particular_solution(a, rhs);
  if (!point) throw ValidationError("hyperplanes " + s.to_string() + " do not intersect");
  auto dirs = kernel_basis(a);
  if (dirs.size() != arr.dim() - s.size()) {
    throw ValidationError("hyperplanes " + s.to_string() + " are not independent");
  }
  return {s, std::move(*point), std::move(dirs)};
}

std::vector<Flat> skeleton(const Arrangement& arr, std::size_t k) {
  if (k == 0 || k > arr.dim()) throw DimensionError("skeleton order must lie in 1..m");
  require_general_position(arr);
  std::vector<Flat> out;
  for (const auto& s : subsets_of_size(arr.size(), k)) out.push_back(flat_of(arr, s));
  return out;
}

QVector vertex_point(const Arrangement& arr, const Subset& s) {
  if (s.size() != arr.dim()) throw DimensionError("a vertex needs exactly m subscripts");
  const QMatrix a = normals_of(arr, s);
  QVector rhs(s.size());
  for (std::size_t r = 0; r < s.size(); ++r) rhs[r] = arr[s[r]].b;
  try {
    return solve_unique(a, rhs);
  } catch (const SingularError&) {
    throw ValidationError("hyperplanes " + s.to_string() + " do not meet in a single point");
  }
}

std::size_t central_of_three(const QVector& p, const QVector& q, const QVector& r) {
  if (p == q || q == r || p == r) throw GeometryError("central_of_three needs distinct points");
  const QVector d = q - p;
  const QVector e = r - p;
  // e = t d for a unique t when collinear.
  std::size_t k = 0;
  while (d[k].is_zero()) ++k;
  const Rational t = e[k] / d[k];
  if (e != d * t) throw GeometryError("central_of_three needs collinear points");
  // Parameters along d: p -> 0, q -> 1, r -> t.
  const Rational zero = 0;
  const Rational one = 1;
  if (t > zero && t < one) return 2;
  if (t > one) return 1;
  return 0;  // t < 0
}

QVector line_direction(const Arrangement& arr, const Subset& line) {
  if (line.size() + 1 != arr.dim()) throw DimensionError("a line needs exactly m-1 subscripts");
  const auto dirs = kernel_basis(normals_of(arr, line));
  if (dirs.size() != 1) throw ValidationError("subscripts " + line.to_string() + " do not cut out a line");
  return dirs.front();
}

std::vector<LineVertex> order_on_line(const Arrangement& arr, const Subset& line) {
  const QVector d = line_direction(arr, line);
  std::vector<LineVertex> out;
  for (std::size_t j = 0; j < arr.size(); ++j) {
    if (line.contains(j)) continue;
    Subset v = line.with(j);
    QVector x = vertex_point(arr, v);
    Rational t = d.dot(x);
    out.push_back({std::move(v), std::move(x), std::move(t)});
  }
  std::sort(out.begin(), out.end(), [](const LineVertex& a, const LineVertex& b) { return a.parameter < b.parameter; });
  return out;
}

}  // namespace arrangeo
