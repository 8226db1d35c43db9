#include "arrangeo/compat_graph.hpp"

#include <algorithm>
#include <sstream>

#include "arrangeo/errors.hpp"
#include "arrangeo/feasibility.hpp"
#include "arrangeo/parallel.hpp"

namespace arrangeo {

CompatVertex CompatVertex::make(SignedLine a, SignedLine b) {
  if (a.line == b.line) throw GeometryError("a compatible-pair vertex needs two different lines");
  if (b.line < a.line) std::swap(a, b);
  return {a, b};
}

std::string CompatVertex::to_string() const { return "{" + x.to_string() + "," + y.to_string() + "}"; }

namespace {

std::vector<QVector> pair_kernel(const QVector& x1, const QVector& y1, const QVector& x2, const QVector& y2) {
  for (const auto* v : {&x1, &y1, &x2, &y2}) {
    if (v->dim() != 3) throw DimensionError("compatible pairs are defined in dimension three");
  }
  const std::vector<QVector> cols{x1, y1, -x2, -y2};
  return kernel_basis(QMatrix::from_columns(cols, 3));
}

bool strictly_one_signed(const QVector& v) {
  const int s = v[0].sign();
  if (s == 0) return false;
  return std::all_of(v.begin(), v.end(), [s](const Rational& e) { return e.sign() == s; });
}

}  // namespace

bool are_compatible(const QVector& x1, const QVector& y1, const QVector& x2, const QVector& y2) {
  const auto ker = pair_kernel(x1, y1, x2, y2);
  if (ker.empty()) return false;
  if (ker.size() == 1) return strictly_one_signed(ker.front());
  // Higher-dimensional kernel (the pairs share a line): look for a strictly
  // positive kernel element z = K w.
  std::vector<StrictRow> rows;
  for (std::size_t r = 0; r < 4; ++r) {
    QVector coeffs(ker.size());
    for (std::size_t c = 0; c < ker.size(); ++c) coeffs[c] = ker[c][r];
    rows.push_back({coeffs, 0, Sign::Plus});
  }
  return feasible_strict(rows, ker.size()).has_value();
}

std::optional<QVector> compatibility_coefficients(const QVector& x1, const QVector& y1, const QVector& x2,
                                                  const QVector& y2) {
  const auto ker = pair_kernel(x1, y1, x2, y2);
  if (ker.size() != 1 || !strictly_one_signed(ker.front())) return std::nullopt;
  return ker.front().normalized();
}

namespace {

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) { return i * (2 * n - i - 1) / 2 + (j - i - 1); }

}  // namespace

CompatGraph::CompatGraph(std::size_t lines, std::vector<std::vector<std::size_t>> adjacency)
    : lines_(lines), adjacency_(std::move(adjacency)) {
  if (adjacency_.size() != 2 * lines_ * (lines_ > 0 ? lines_ - 1 : 0)) {
    throw DimensionError("adjacency list has the wrong number of vertices");
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

CompatVertex CompatGraph::vertex(std::size_t index) const {
  std::size_t p = index / 4;
  std::size_t i = 0;
  while (p >= lines_ - i - 1) {
    p -= lines_ - i - 1;
    ++i;
  }
  const std::size_t j = i + 1 + p;
  const Sign s = (index & 2U) ? Sign::Minus : Sign::Plus;
  const Sign t = (index & 1U) ? Sign::Minus : Sign::Plus;
  return {{i, s}, {j, t}};
}

std::size_t CompatGraph::index_of(const CompatVertex& v) const {
  return pair_index(lines_, v.x.line, v.y.line) * 4 + (v.x.sign == Sign::Minus ? 2 : 0) +
         (v.y.sign == Sign::Minus ? 1 : 0);
}

bool CompatGraph::adjacent(std::size_t a, std::size_t b) const {
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::size_t CompatGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& nb : adjacency_) total += nb.size();
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> CompatGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < adjacency_.size(); ++a)
    for (auto b : adjacency_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

std::string CompatGraph::to_dot() const {
  std::ostringstream os;
  os << "graph compat {\n";
  for (std::size_t v = 0; v < vertex_count(); ++v) os << "  v" << v << " [label=\"" << vertex(v).to_string() << "\"];\n";
  for (const auto& [a, b] : edges()) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

CompatGraph build_graph(const NormalSystem& ns) {
  if (ns.dim() != 3) throw DimensionError("the compatible-pairs graph is defined for m = 3");
  const std::size_t n = ns.size();
  const std::size_t count = 2 * n * (n > 0 ? n - 1 : 0);
  CompatGraph shell(n, std::vector<std::vector<std::size_t>>(count));
  std::vector<QVector> first(count), second(count);
  for (std::size_t v = 0; v < count; ++v) {
    const auto cv = shell.vertex(v);
    first[v] = ns.vector(cv.x);
    second[v] = ns.vector(cv.y);
  }
  std::vector<std::vector<std::size_t>> adjacency(count);
  // Row a collects neighbours b > a; the lower half is mirrored afterwards.
  parallel_for(count, [&](std::size_t a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      if (are_compatible(first[a], second[a], first[b], second[b])) adjacency[a].push_back(b);
    }
  });
  for (std::size_t a = 0; a < count; ++a) {
    for (auto b : adjacency[a])
      if (b > a) adjacency[b].push_back(a);
  }
  return CompatGraph(n, std::move(adjacency));
}

std::vector<std::size_t> degree_profile(const CompatGraph& g) {
  std::vector<std::size_t> out;
  out.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> line_degree_profiles(const CompatGraph& g) {
  std::vector<std::vector<std::size_t>> out(g.lines());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto cv = g.vertex(v);
    out[cv.x.line].push_back(g.degree(v));
    out[cv.y.line].push_back(g.degree(v));
  }
  for (auto& p : out) std::sort(p.begin(), p.end());
  return out;
}

namespace {

std::size_t image_of(const CompatGraph& g2, std::size_t v, const CompatGraph& g1, const AntipodalMap& delta) {
  const auto cv = g1.vertex(v);
  return g2.index_of(CompatVertex::make(delta.apply(cv.x), delta.apply(cv.y)));
}

}  // namespace

bool induces_isomorphism(const CompatGraph& g1, const CompatGraph& g2, const AntipodalMap& delta) {
  if (g1.lines() != g2.lines() || delta.size() != g1.lines()) return false;
  std::vector<std::size_t> img(g1.vertex_count());
  for (std::size_t v = 0; v < g1.vertex_count(); ++v) img[v] = image_of(g2, v, g1, delta);
  for (std::size_t a = 0; a < g1.vertex_count(); ++a) {
    if (g1.degree(a) != g2.degree(img[a])) return false;
    for (auto b : g1.neighbors(a))
      if (!g2.adjacent(img[a], img[b])) return false;
  }
  return true;
}

std::optional<AntipodalMap> find_graph_isomorphism(const CompatGraph& g1, const CompatGraph& g2) {
  const std::size_t n = g1.lines();
  if (g2.lines() != n) return std::nullopt;
  if (degree_profile(g1) != degree_profile(g2)) return std::nullopt;
  if (n < 2) return AntipodalMap::identity(n);
  const auto fp1 = line_degree_profiles(g1);
  const auto fp2 = line_degree_profiles(g2);

  // Vertex pairs grouped by the largest line they involve, so each pair is
  // checked as soon as all of its lines are assigned.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks(n);
  for (std::size_t a = 0; a < g1.vertex_count(); ++a) {
    const auto va = g1.vertex(a);
    for (std::size_t b = a + 1; b < g1.vertex_count(); ++b) {
      const auto vb = g1.vertex(b);
      checks[std::max(va.y.line, vb.y.line)].emplace_back(a, b);
    }
  }

  std::vector<std::size_t> images(n);
  std::vector<Sign> flips(n, Sign::Plus);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t k) {
    for (const auto& [a, b] : checks[k]) {
      const auto va = g1.vertex(a);
      const auto vb = g1.vertex(b);
      auto map = [&](const SignedLine& s) { return SignedLine{images[s.line], s.sign * flips[s.line]}; };
      const auto ia = g2.index_of(CompatVertex::make(map(va.x), map(va.y)));
      const auto ib = g2.index_of(CompatVertex::make(map(vb.x), map(vb.y)));
      if (g1.adjacent(a, b) != g2.adjacent(ia, ib)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || fp1[k] != fp2[t]) continue;
      used[t] = true;
      images[k] = t;
      for (Sign f : {Sign::Plus, Sign::Minus}) {
        if (k == 0 && f == Sign::Minus) continue;  // -δ works whenever δ does
        flips[k] = f;
        if (consistent(k) && self(self, k + 1)) return true;
      }
      used[t] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return AntipodalMap{Permutation(images), flips};
}

bool graphs_compatible(const CompatGraph& g1, const CompatGraph& g2) { return find_graph_isomorphism(g1, g2).has_value(); }

}  // namespace arrangeo
