#include <algorithm>
#include <unordered_map>

#include "arrangeo/compat_graph.hpp"
#include "arrangeo/errors.hpp"
#include "arrangeo/normal_system.hpp"

namespace arrangeo {

namespace {

// Circuit sign of every line in every (m+1)-subset, keyed by subset mask.
struct Circuits {
  std::vector<Subset> subsets;
  std::unordered_map<std::uint64_t, std::vector<Sign>> by_mask;  // sign per position in the subset
};

Circuits circuits_of(const NormalSystem& ns) {
  Circuits c;
  if (ns.size() <= ns.dim()) return c;
  c.subsets = subsets_of_size(ns.size(), ns.dim() + 1);
  for (const auto& s : c.subsets) c.by_mask.emplace(s.mask(), circuit_signs(ns, s));
  return c;
}

Sign sign_at(const Subset& s, const std::vector<Sign>& signs, std::size_t line) {
  const auto pos = std::lower_bound(s.begin(), s.end(), line) - s.begin();
  return signs[static_cast<std::size_t>(pos)];
}

// Per line: number of signed normal simple bases (all 2^m sign choices) that
// use the line. Simple bases map to simple bases under a CPB.
std::vector<std::vector<std::size_t>> simple_base_counts(const NormalSystem& ns, const Circuits& circ) {
  const std::size_t n = ns.size();
  const std::size_t m = ns.dim();
  std::vector<std::vector<std::size_t>> out(n, std::vector<std::size_t>(1, 0));
  if (n < m) return out;
  for (const auto& base : subsets_of_size(n, m)) {
    // Sign patterns eps with eps = ±(signs of v_j in the base) are not simple.
    std::vector<std::uint64_t> blocked;
    for (std::size_t j = 0; j < n; ++j) {
      if (base.contains(j)) continue;
      const Subset c = base.with(j);
      const auto& lam = circ.by_mask.at(c.mask());
      const Sign lj = sign_at(c, lam, j);
      std::uint64_t pattern = 0;
      for (std::size_t k = 0; k < m; ++k) {
        // v_j = sum c_k v_{l_k} with sgn c_k = -sgn(lam_{l_k}) sgn(lam_j).
        if (-(sign_at(c, lam, base[k]) * lj) == Sign::Minus) pattern |= std::uint64_t{1} << k;
      }
      blocked.push_back(pattern);
      blocked.push_back(pattern ^ ((std::uint64_t{1} << m) - 1));
    }
    std::sort(blocked.begin(), blocked.end());
    blocked.erase(std::unique(blocked.begin(), blocked.end()), blocked.end());
    const std::size_t simple = (std::size_t{1} << m) - blocked.size();
    for (auto l : base) out[l][0] += simple;
  }
  return out;
}

std::vector<std::vector<std::size_t>> fingerprints(const NormalSystem& ns, const Circuits& circ) {
  if (ns.dim() == 3) return line_degree_profiles(build_graph(ns));
  return simple_base_counts(ns, circ);
}

}  // namespace

std::optional<AntipodalMap> find_cpb(const NormalSystem& ns1, const NormalSystem& ns2,
                                     const std::optional<Permutation>& fixed_perm) {
  const std::size_t n = ns1.size();
  const std::size_t m = ns1.dim();
  if (ns2.size() != n || ns2.dim() != m) return std::nullopt;
  if (n > 63) throw CapacityError("find_cpb supports at most 63 lines");
  if (fixed_perm && fixed_perm->size() != n) throw DimensionError("fixed permutation has the wrong size");

  const Circuits c1 = circuits_of(ns1);
  const Circuits c2 = circuits_of(ns2);
  const auto fp1 = fingerprints(ns1, c1);
  const auto fp2 = fingerprints(ns2, c2);
  {
    auto s1 = fp1, s2 = fp2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  // Circuits whose largest line is k become checkable once line k is placed.
  std::vector<std::vector<const Subset*>> due(n);
  for (const auto& s : c1.subsets) due[s.indices().back()].push_back(&s);

  std::vector<std::size_t> images(n);
  std::vector<Sign> flips(n, Sign::Plus);
  std::vector<bool> used(n, false);

  // δ is a CPB iff on every circuit C the products
  // sgn(lam1_i) · f_i · sgn(lam2_{π i}) agree for all i in C.
  auto consistent = [&](std::size_t k) {
    for (const Subset* s : due[k]) {
      const auto& lam1 = c1.by_mask.at(s->mask());
      std::vector<std::size_t> img;
      img.reserve(s->size());
      for (auto i : *s) img.push_back(images[i]);
      std::uint64_t mask = 0;
      for (auto t : img) mask |= std::uint64_t{1} << t;
      const Subset image_set{std::vector<std::size_t>(img)};
      const auto& lam2 = c2.by_mask.at(mask);
      std::optional<Sign> product;
      for (std::size_t p = 0; p < s->size(); ++p) {
        const Sign mu = lam1[p] * flips[(*s)[p]] * sign_at(image_set, lam2, img[p]);
        if (!product) product = mu;
        else if (*product != mu) return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || fp1[k] != fp2[t]) continue;
      if (fixed_perm && fixed_perm->images()[k] != t) continue;
      used[t] = true;
      images[k] = t;
      for (Sign f : {Sign::Plus, Sign::Minus}) {
        if (k == 0 && f == Sign::Minus) continue;
        flips[k] = f;
        if (consistent(k) && self(self, k + 1)) return true;
      }
      used[t] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  AntipodalMap delta{Permutation(images), flips};
  if (!is_cpb(ns1, ns2, delta).ok) throw Error("internal error: circuit search returned a map that is not a CPB");
  return delta;
}

}  // namespace arrangeo
