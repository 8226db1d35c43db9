#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "arrangeo/concurrency.hpp"
#include "arrangeo/errors.hpp"
#include "arrangeo/isomorphism.hpp"
#include "generators.hpp"

using namespace arrangeo;

namespace {

Arrangement lines(std::vector<std::tuple<long, long, long>> abc) {
  std::vector<Hyperplane> hs;
  for (auto [a1, a2, b] : abc) hs.emplace_back(QVector{a1, a2}, b);
  return Arrangement(2, std::move(hs));
}

// Coefficient of y_k: the bordered determinant with y = e_k.
QVector bordered_oracle(const QMatrix& a, const Subset& s) {
  const std::size_t m = a.cols();
  QVector out(a.rows());
  for (std::size_t k = 0; k < s.size(); ++k) {
    QMatrix b(m + 1, m + 1);
    for (std::size_t r = 0; r <= m; ++r) {
      for (std::size_t c = 0; c < m; ++c) b(r, c) = a(s[r], c);
      b(r, m) = r == k ? 1 : 0;
    }
    out[s[k]] = det(b);
  }
  return out;
}

// The simplex on S survives iff no other hyperplane has vertices of it strictly on both sides.
std::vector<Subset> simplex_oracle(const Arrangement& arr) {
  std::vector<Subset> out;
  const std::size_t m = arr.dim();
  for (const auto& s : subsets_of_size(arr.size(), m + 1)) {
    std::vector<QVector> verts;
    for (std::size_t k = 0; k <= m; ++k) verts.push_back(vertex_point(arr, s.without(s[k])));
    bool ok = true;
    for (std::size_t h = 0; h < arr.size() && ok; ++h) {
      if (s.contains(h)) continue;
      bool plus = false, minus = false;
      for (const auto& v : verts) (arr[h].evaluate(v).sign() > 0 ? plus : minus) = true;
      ok = !(plus && minus);
    }
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<Subset> sequence(const Arrangement& arr, const Subset& line) {
  std::vector<Subset> out;
  for (const auto& v : order_on_line(arr, line)) out.push_back(v.vertex);
  return out;
}

}  // namespace

TEST_CASE("concurrency_normal examples") {
  const QMatrix a{{1, 0}, {0, 1}, {1, 1}};
  CHECK(concurrency_normal(a, Subset{0, 1, 2}) == QVector{-1, -1, 1});
  const QMatrix swapped{{0, 1}, {1, 0}, {1, 1}};
  CHECK(concurrency_normal(swapped, Subset{0, 1, 2}) == QVector{1, 1, -1});
  const QMatrix b{{1, 0}, {0, 1}, {1, 2}};
  CHECK(concurrency_normal(b, Subset{0, 1, 2}) == QVector{-1, -2, 1});
  const QMatrix bad{{1, 0}, {2, 0}, {1, 1}};
  CHECK_THROWS_AS(concurrency_normal(bad, Subset{0, 1, 2}), ValidationError);
}

TEST_CASE("cone_signature examples") {
  const Arrangement tri = lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});
  const auto sig = cone_signature(tri);
  REQUIRE(sig.entries.size() == 1);
  CHECK(sig.sign_of(Subset{0, 1, 2}) == Sign::Plus);
  CHECK(sig.to_string() == "{1,2,3}:+\n");
  CHECK_THROWS_AS(cone_signature(lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})), DegeneracyError);
  const auto neg = cone_signature(tri.with_offsets(tri.offsets() * Rational(-1)));
  CHECK(neg.sign_of(Subset{0, 1, 2}) == Sign::Minus);
}

TEST_CASE("simplices and facets examples") {
  const Arrangement tri = lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});
  CHECK(simplex_polyhedralities(tri) == std::vector<Subset>{Subset{0, 1, 2}});
  CHECK(cone_facets(tri) == std::vector<Subset>{Subset{0, 1, 2}});

  // 6x + 2y = 3 crosses the triangle's interior.
  const Arrangement cut = lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {6, 2, 3}});
  const auto simp = simplex_polyhedralities(cut);
  CHECK(std::find(simp.begin(), simp.end(), Subset{0, 1, 2}) == simp.end());

  std::vector<Hyperplane> planes{{QVector{1, 0, 0}, 0}, {QVector{0, 1, 0}, 0}, {QVector{0, 0, 1}, 0}, {QVector{1, 1, 1}, 1}};
  CHECK(simplex_polyhedralities(Arrangement(3, planes)) == std::vector<Subset>{Subset{0, 1, 2, 3}});
}

TEST_CASE("cross_facet examples") {
  const Arrangement tri = lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});
  const auto crossed = cross_facet(tri, Subset{0, 1, 2});
  CHECK(crossed.coefficients() == tri.coefficients());
  CHECK(cone_signature(crossed).sign_of(Subset{0, 1, 2}) == Sign::Minus);
  for (std::size_t l = 0; l < 3; ++l) {
    auto before = sequence(tri, Subset{l});
    std::swap(before[0], before[1]);
    CHECK(sequence(crossed, Subset{l}) == before);
  }
  const auto back = cross_facet(crossed, Subset{0, 1, 2});
  CHECK(cone_signature(back).same_cone(cone_signature(tri)));

  const Arrangement cut = lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {6, 2, 3}});
  CHECK_THROWS_AS(cross_facet(cut, Subset{0, 1, 2}), GeometryError);
}

TEST_CASE("a simplex region that is not a facet") {
  const Arrangement arr = lines({{-8, 2, 3}, {5, 4, 3}, {-8, 4, -9}, {0, 7, -2}, {8, 9, -9}, {-4, 8, 2}});
  REQUIRE(validate_general_position(arr).valid);
  const Subset s{0, 2, 4};
  const auto simp = simplex_polyhedralities(arr);
  CHECK(std::find(simp.begin(), simp.end(), s) != simp.end());
  const auto facets = cone_facets(arr);
  CHECK(std::find(facets.begin(), facets.end(), s) == facets.end());
  CHECK(facets.size() + 1 == simp.size());

  // Farkas certificate: with S flipped, a positive combination of the signed
  // normals vanishes, so the neighbouring cone across M_S alone is empty.
  const auto sig = cone_signature(arr);
  const std::vector<std::pair<Subset, long>> weights{
      {Subset{0, 1, 5}, 16}, {Subset{0, 2, 3}, 23}, {Subset{0, 2, 4}, 21}, {Subset{1, 2, 3}, 16}, {Subset{3, 4, 5}, 12}};
  QVector total(6);
  for (const auto& [sub, w] : weights) {
    const Sign sign = sub == s ? -sig.sign_of(sub) : sig.sign_of(sub);
    total += concurrency_normal(arr.coefficients(), sub) * Rational(w * to_int(sign));
  }
  CHECK(total.is_zero());
  CHECK_THROWS_AS(cross_facet(arr, s), GeometryError);
}

TEST_CASE("cone_count_bound") {
  CHECK(cone_count_bound(3, 2) == 2);
  CHECK(cone_count_bound(4, 2) == 16);
  // N = C(6,4) = 15: sum_{i<=6} C(15,i) - C(14,6).
  CHECK(cone_count_bound(6, 3) == mpz_class(1 + 15 + 105 + 455 + 1365 + 3003 + 5005 - 3003));
}

TEST_CASE("random arrangements") {
  testing::Rng rng(testing::announce_seed("concurr", 31337));
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t m = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, static_cast<long>(m) + 1, m == 2 ? 6 : 5));
    const Arrangement arr = testing::random_arrangement(rng, m, n);
    const QMatrix a = arr.coefficients();

    const auto hyper = concurrency_arrangement(a);
    CHECK(hyper.size() == binomial(n, m + 1));
    for (const auto& h : hyper) {
      CHECK(h.normal == bordered_oracle(a, h.subset));
      for (std::size_t i = 0; i < n; ++i) CHECK(h.normal[i].is_zero() == !h.subset.contains(i));
      // Every normal is orthogonal to each column of A.
      for (std::size_t c = 0; c < m; ++c) CHECK(h.normal.dot(a.col(c)).is_zero());
    }

    const auto simp = simplex_polyhedralities(arr);
    CHECK(simp == simplex_oracle(arr));
    // Every facet is a simplex region; the converse can fail (see below).
    const auto facets = cone_facets(arr);
    for (const auto& f : facets) CHECK(std::find(simp.begin(), simp.end(), f) != simp.end());

    const auto sig = cone_signature(arr);
    for (const auto& s : facets) {
      const auto crossed = cross_facet(arr, s);
      const auto sig2 = cone_signature(crossed);
      for (const auto& [sub, sign] : sig.entries) CHECK(sig2.sign_of(sub) == (sub == s ? -sign : sign));
      CHECK(cone_signature(cross_facet(crossed, s)).same_cone(sig));
    }

    // Same cone, same coefficients: isomorphic under the identity.
    const auto scaled = arr.with_offsets(arr.offsets() * Rational(mpz_class(7), mpz_class(3)));
    CHECK(cone_signature(scaled).same_cone(sig));
    CHECK(is_isomorphism(arr, scaled, Permutation::identity(n)).ok);
    const auto negated = arr.with_offsets(arr.offsets() * Rational(-1));
    for (const auto& [sub, sign] : cone_signature(negated).entries) CHECK(sign == -sig.sign_of(sub));
    CHECK(is_isomorphism(arr, negated, Permutation::identity(n)).ok);
  }
}
