#include "arrangeo/isomorphism.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "arrangeo/concurrency.hpp"
#include "arrangeo/errors.hpp"

namespace arrangeo {

std::string BetweennessRecord::to_string() const {
  return "line " + line.to_string() + ": " + middle.to_string() + " between " +
         (vertices[0] == middle ? vertices[1] : vertices[0]).to_string() + " and " +
         (vertices[2] == middle ? vertices[1] : vertices[2]).to_string();
}

namespace {

// For every line, the extra subscript of each vertex in line order, and the
// position of each extra subscript.
struct LineOrders {
  std::vector<Subset> lines;
  std::vector<std::vector<std::size_t>> sequence;
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<std::vector<std::size_t>> position;  // [line][hyperplane]
};

LineOrders line_orders(const Arrangement& arr) {
  LineOrders lo;
  const std::size_t n = arr.size();
  const std::size_t m = arr.dim();
  if (n + 1 < m) return lo;
  for (auto& s : subsets_of_size(n, m - 1)) {
    std::vector<std::size_t> seq;
    std::vector<std::size_t> pos(n, n);
    for (const auto& v : order_on_line(arr, s)) {
      const std::size_t extra = v.vertex.minus(s)[0];
      pos[extra] = seq.size();
      seq.push_back(extra);
    }
    lo.index.emplace(s.mask(), lo.lines.size());
    lo.lines.push_back(std::move(s));
    lo.sequence.push_back(std::move(seq));
    lo.position.push_back(std::move(pos));
  }
  return lo;
}

void check_sizes(const Arrangement& arr1, const Arrangement& arr2, const Permutation& phi) {
  if (arr1.size() != arr2.size() || arr1.dim() != arr2.dim()) {
    throw DimensionError("arrangements differ in size or dimension");
  }
  if (phi.size() != arr1.size()) throw DimensionError("permutation has the wrong size");
}

std::size_t median_index(std::size_t a, std::size_t b, std::size_t c) {
  // Which of the three (0, 1, 2) holds the median value.
  if ((a < b) == (b < c)) return 1;
  if ((b < a) == (a < c)) return 0;
  return 2;
}

}  // namespace

std::vector<BetweennessRecord> betweenness_table(const Arrangement& arr) {
  const LineOrders lo = line_orders(arr);
  std::vector<BetweennessRecord> out;
  for (std::size_t l = 0; l < lo.lines.size(); ++l) {
    const auto& seq = lo.sequence[l];
    const auto& line = lo.lines[l];
    for (const auto& t : subsets_of_size(seq.size(), 3)) {
      std::array<Subset, 3> verts{line.with(seq[t[0]]), line.with(seq[t[1]]), line.with(seq[t[2]])};
      Subset middle = verts[1];
      std::sort(verts.begin(), verts.end());
      out.push_back({line, verts, middle});
    }
  }
  return out;
}

IsomorphismVerdict is_isomorphism(const Arrangement& arr1, const Arrangement& arr2, const Permutation& phi) {
  check_sizes(arr1, arr2, phi);
  const LineOrders lo1 = line_orders(arr1);
  const LineOrders lo2 = line_orders(arr2);
  for (std::size_t l = 0; l < lo1.lines.size(); ++l) {
    const auto& line = lo1.lines[l];
    const Subset image = phi.apply(line);
    const auto& pos2 = lo2.position[lo2.index.at(image.mask())];
    const auto& seq = lo1.sequence[l];
    for (const auto& t : subsets_of_size(seq.size(), 3)) {
      const std::size_t p = pos2[phi.images()[seq[t[0]]]];
      const std::size_t q = pos2[phi.images()[seq[t[1]]]];
      const std::size_t r = pos2[phi.images()[seq[t[2]]]];
      if (median_index(p, q, r) != 1) {
        std::array<Subset, 3> verts{line.with(seq[t[0]]), line.with(seq[t[1]]), line.with(seq[t[2]])};
        Subset middle = verts[1];
        std::sort(verts.begin(), verts.end());
        return {false, BetweennessRecord{line, verts, middle}};
      }
    }
  }
  return {};
}

bool orders_agree(const Arrangement& arr1, const Arrangement& arr2, const Permutation& phi) {
  check_sizes(arr1, arr2, phi);
  const LineOrders lo1 = line_orders(arr1);
  const LineOrders lo2 = line_orders(arr2);
  for (std::size_t l = 0; l < lo1.lines.size(); ++l) {
    const std::size_t l2 = lo2.index.at(phi.apply(lo1.lines[l]).mask());
    std::vector<std::size_t> mapped;
    for (auto e : lo1.sequence[l]) mapped.push_back(phi.images()[e]);
    const auto& target = lo2.sequence[l2];
    if (mapped != target && !std::equal(mapped.begin(), mapped.end(), target.rbegin())) return false;
  }
  return true;
}

std::optional<Permutation> find_isomorphism(const Arrangement& arr1, const Arrangement& arr2,
                                            std::size_t max_hyperplanes) {
  if (arr1.size() != arr2.size() || arr1.dim() != arr2.dim()) return std::nullopt;
  const std::size_t n = arr1.size();
  if (n > max_hyperplanes) {
    throw CapacityError("isomorphism search is limited to " + std::to_string(max_hyperplanes) + " hyperplanes");
  }
  const auto table1 = betweenness_table(arr1);
  const auto table2 = betweenness_table(arr2);
  const LineOrders lo2 = line_orders(arr2);

  // Per hyperplane: how often it lies in a middle vertex, and how often it is
  // the extra subscript of one. Both are preserved by isomorphisms.
  auto fingerprint = [n](const std::vector<BetweennessRecord>& table) {
    std::vector<std::pair<std::size_t, std::size_t>> fp(n);
    for (const auto& r : table) {
      for (auto i : r.middle) ++fp[i].first;
      ++fp[r.middle.minus(r.line)[0]].second;
    }
    return fp;
  };
  const auto fp1 = fingerprint(table1);
  const auto fp2 = fingerprint(table2);
  {
    auto a = fp1, b = fp2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Records become checkable once every subscript they mention is assigned.
  std::vector<std::vector<const BetweennessRecord*>> due(n);
  for (const auto& r : table1) {
    std::size_t top = 0;
    for (const auto& v : r.vertices) top = std::max(top, v.indices().back());
    due[top].push_back(&r);
  }

  std::vector<std::size_t> images(n);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t k) {
    for (const auto* r : due[k]) {
      std::vector<std::size_t> line_img;
      for (auto i : r->line) line_img.push_back(images[i]);
      const auto& pos = lo2.position[lo2.index.at(Subset(line_img).mask())];
      std::array<std::size_t, 3> p{};
      std::size_t mid = 0;
      for (std::size_t v = 0; v < 3; ++v) {
        const std::size_t extra = r->vertices[v].minus(r->line)[0];
        p[v] = pos[images[extra]];
        if (r->vertices[v] == r->middle) mid = v;
      }
      if (median_index(p[0], p[1], p[2]) != mid) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || fp1[k] != fp2[t]) continue;
      used[t] = true;
      images[k] = t;
      if (consistent(k) && self(self, k + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return Permutation(images);
}

TranslationVerdict translation_equivalent(const Arrangement& arr1, const Arrangement& arr2) {
  if (arr1.size() != arr2.size() || arr1.dim() != arr2.dim()) return {};
  auto cpb = find_cpb(extract_normal_system(arr1), extract_normal_system(arr2));
  return {cpb.has_value(), std::move(cpb)};
}

namespace {

std::string cone_key(const Arrangement& arr) {
  std::string key;
  for (const auto& e : cone_signature(arr).entries) key.push_back(to_char(e.second));
  return key;
}

}  // namespace

std::optional<Realization> realize_translation(const Arrangement& source, const Arrangement& target,
                                               const Permutation& phi, std::size_t max_cones) {
  check_sizes(source, target, phi);
  if (max_cones == 0) return std::nullopt;

  if (phi.is_identity() && source.coefficients() == target.coefficients()) {
    // Every step fixes one sign that differs from the target's, so the walk
    // reaches the target cone after at most C(n, m+1) crossings.
    const ConeSignature goal = cone_signature(target);
    Realization r{source, {}, 1};
    while (!is_isomorphism(r.arrangement, target, phi).ok) {
      if (r.cones_visited >= max_cones) return std::nullopt;
      const ConeSignature here = cone_signature(r.arrangement);
      std::optional<Subset> next;
      for (const auto& f : cone_facets(r.arrangement)) {
        if (here.sign_of(f) != goal.sign_of(f)) {
          next = f;
          break;
        }
      }
      if (!next) throw Error("internal error: no facet separates the cone from the target");
      r.arrangement = cross_facet(r.arrangement, *next);
      r.crossed.push_back(*next);
      ++r.cones_visited;
    }
    return r;
  }

  std::deque<Realization> queue;
  std::set<std::string> seen{cone_key(source)};
  queue.push_back({source, {}, 0});
  std::size_t visited = 0;
  while (!queue.empty() && visited < max_cones) {
    Realization cur = std::move(queue.front());
    queue.pop_front();
    cur.cones_visited = ++visited;
    if (is_isomorphism(cur.arrangement, target, phi).ok) return cur;
    for (const auto& f : cone_facets(cur.arrangement)) {
      Arrangement next = cross_facet(cur.arrangement, f);
      if (!seen.insert(cone_key(next)).second) continue;
      auto path = cur.crossed;
      path.push_back(f);
      queue.push_back({std::move(next), std::move(path), 0});
    }
  }
  return std::nullopt;
}

}  // namespace arrangeo
