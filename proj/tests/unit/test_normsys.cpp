#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrangeo/errors.hpp"
#include "arrangeo/io.hpp"
#include "arrangeo/normal_system.hpp"
#include "generators.hpp"

using namespace arrangeo;

namespace {

const std::string fixtures = ARRANGEO_FIXTURES;

NormalSystem ns1() { return load_normal_system(fixtures + "/ns1.json"); }
NormalSystem ns2() { return load_normal_system(fixtures + "/ns2.json"); }

SignedLine pos(std::size_t one_based) { return {one_based - 1, Sign::Plus}; }
SignedLine neg(std::size_t one_based) { return {one_based - 1, Sign::Minus}; }

// Oracle for the literal definition: every genuine basis of signed vectors
// (no quotient by negation), every signed u, Cramer's rule for coefficients.
bool all_positive_by_cramer(const std::vector<QVector>& base, const QVector& u) {
  const std::size_t m = base.size();
  const QMatrix a = QMatrix::from_columns(base, m);
  const Rational d = det(a);
  if (d.is_zero()) return false;
  for (std::size_t k = 0; k < m; ++k) {
    QMatrix ak = a;
    for (std::size_t r = 0; r < m; ++r) ak(r, k) = u[r];
    if ((det(ak) / d).sign() <= 0) return false;
  }
  return true;
}

bool cpb_oracle(const NormalSystem& a, const NormalSystem& b, const AntipodalMap& delta) {
  const std::size_t m = a.dim();
  const std::size_t n = a.size();
  for (const auto& lines : subsets_of_size(n, m)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<QVector> b1, b2;
      for (std::size_t k = 0; k < m; ++k) {
        const SignedLine s{lines[k], (mask >> k) & 1U ? Sign::Minus : Sign::Plus};
        b1.push_back(a.vector(s));
        b2.push_back(b.vector(delta.apply(s)));
      }
      for (std::size_t i = 0; i < n; ++i)
        for (Sign sg : {Sign::Plus, Sign::Minus}) {
          const SignedLine u{i, sg};
          if (all_positive_by_cramer(b1, a.vector(u)) != all_positive_by_cramer(b2, b.vector(delta.apply(u))))
            return false;
        }
    }
  }
  return true;
}

AntipodalMap random_map(testing::Rng& rng, std::size_t n) {
  AntipodalMap d{testing::random_permutation(rng, n), {}};
  for (std::size_t i = 0; i < n; ++i) d.flips.push_back(testing::uniform(rng, 0, 1) ? Sign::Plus : Sign::Minus);
  return d;
}

}  // namespace

TEST_CASE("extract_normal_system") {
  const Arrangement tri(2, {{QVector{1, 0}, 0}, {QVector{0, 1}, 0}, {QVector{1, 1}, 1}});
  const auto ns = extract_normal_system(tri);
  CHECK(ns.reps() == std::vector<QVector>{QVector{1, 0}, QVector{0, 1}, QVector{1, 1}});
  const Arrangement scaled(2, {{QVector{1, 0}, 0}, {QVector{0, -3}, 0}, {QVector{1, 1}, 1}});
  CHECK(extract_normal_system(scaled) == ns);

  std::vector<Hyperplane> planes;
  const auto first = ns1();
  for (const auto& v : first.reps()) planes.emplace_back(v * Rational(7), 1);
  const auto from_planes = extract_normal_system(Arrangement(3, planes));
  CHECK(from_planes == ns1());
  CHECK(ns1().rep(3) == QVector{1, 2, 2});
  CHECK(ns1().rep(4) == QVector{1, 4, 8});
  CHECK(ns1().rep(5) == QVector{6, 6, 7});
}

TEST_CASE("is_maximally_independent") {
  const std::vector<QVector> good{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  CHECK(is_maximally_independent(good, 3).independent);
  const std::vector<QVector> bad{{1, 0, 0}, {2, 0, 0}};
  const auto v = is_maximally_independent(bad, 3);
  CHECK_FALSE(v.independent);
  CHECK(v.witness->to_string() == "{1,2}");
  // Oracle: all C(6,3) determinants of the first example system are nonzero.
  const auto reps = ns1().reps();
  for (const auto& s : subsets_of_size(6, 3)) {
    std::vector<QVector> cols;
    for (auto i : s) cols.push_back(reps[i]);
    CHECK_FALSE(det(QMatrix::from_columns(cols, 3)).is_zero());
  }
  CHECK(is_maximally_independent(reps, 3).independent);
  CHECK_THROWS_AS(NormalSystem(3, bad), ValidationError);
}

TEST_CASE("is_normal_simple_base") {
  const NormalSystem ns(2, {QVector{1, 0}, QVector{0, 1}, QVector{1, 1}});
  const std::vector<SignedLine> b1{pos(1), pos(2)};
  CHECK_FALSE(is_normal_simple_base(ns, b1).simple);
  const std::vector<SignedLine> b2{pos(1), neg(2)};
  CHECK(is_normal_simple_base(ns, b2).simple);
  const std::vector<SignedLine> b3{pos(1), neg(1)};
  const auto v = is_normal_simple_base(ns, b3);
  CHECK_FALSE(v.simple);
  CHECK_FALSE(v.reason.empty());
}

TEST_CASE("positive_combo") {
  const auto ns = ns1();
  const std::vector<QVector> base{ns.vector(pos(1)), ns.vector(pos(2)), ns.vector(pos(3))};
  // Representatives are (1,2,2) etc.; the unit vector (1/3,2/3,2/3) is a positive multiple.
  const QVector u4(std::vector<Rational>{Rational(mpz_class(1), mpz_class(3)), Rational(mpz_class(2), mpz_class(3)),
                                         Rational(mpz_class(2), mpz_class(3))});
  const auto c = positive_combo(base, u4);
  REQUIRE(c);
  CHECK(*c == u4);
  CHECK_FALSE(positive_combo(base, -u4));

  const auto w = ns2();
  const std::vector<QVector> vbase{w.vector(pos(1)), w.vector(pos(2)), w.vector(pos(3))};
  const QVector v6(std::vector<Rational>{Rational(mpz_class(2), mpz_class(11)), Rational(mpz_class(6), mpz_class(11)),
                                         Rational(mpz_class(9), mpz_class(11))});
  CHECK(*positive_combo(vbase, v6) == v6);

  const std::vector<QVector> singular{QVector{1, 0}, QVector{2, 0}};
  CHECK_THROWS(positive_combo(singular, QVector{1, 1}));
}

TEST_CASE("AntipodalMap algebra") {
  const auto d = AntipodalMap::parse("2,3,1", "+-+");
  CHECK(d.apply(pos(1)) == pos(2));
  CHECK(d.apply(pos(2)) == neg(3));
  CHECK(d.apply(neg(2)) == pos(3));
  CHECK(d.inverse().after(d) == AntipodalMap::identity(3));
  CHECK(d.after(d.inverse()) == AntipodalMap::identity(3));
  CHECK(d.negated().apply(pos(1)) == neg(2));
  CHECK(d.flips_string() == "+-+");
  CHECK_THROWS_AS(AntipodalMap::parse("1,2", "+"), ParseError);
}

TEST_CASE("is_cpb examples") {
  const auto a = ns1();
  const auto b = ns2();
  CHECK(is_cpb(a, a, AntipodalMap::identity(6)).ok);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    AntipodalMap d = AntipodalMap::identity(6);
    for (std::size_t i = 0; i < 6; ++i)
      if ((mask >> i) & 1U) d.flips[i] = Sign::Minus;
    const auto v = is_cpb(a, b, d);
    CHECK_FALSE(v.ok);
    REQUIRE(v.witness);
    CHECK(v.witness->base.size() == 3);
  }
  const NormalSystem two(2, {QVector{1, 0}, QVector{0, 1}});
  const NormalSystem other(2, {QVector{1, 3}, QVector{-2, 5}});
  for (const auto& d : {AntipodalMap::parse("1,2", "++"), AntipodalMap::parse("2,1", "-+"),
                        AntipodalMap::parse("1,2", "--")})
    CHECK(is_cpb(two, other, d).ok);
  CHECK_THROWS(is_cpb(two, a, AntipodalMap::identity(2)));
}

TEST_CASE("find_cpb examples") {
  CHECK_FALSE(find_cpb(ns1(), ns2()));
  const auto self = find_cpb(ns1(), ns1());
  REQUIRE(self);
  CHECK(is_cpb(ns1(), ns1(), *self).ok);
  const auto fixed = find_cpb(ns1(), ns2(), Permutation::identity(6));
  CHECK_FALSE(fixed);
}

TEST_CASE("random CPB properties against the literal oracle") {
  testing::Rng rng(testing::announce_seed("normsys", 4242));
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, static_cast<long>(m) + 1, m == 2 ? 6 : 5));
    const auto a = testing::random_normal_system(rng, m, n);
    const auto b = testing::random_normal_system(rng, m, n);

    const auto d = random_map(rng, n);
    const bool expect = cpb_oracle(a, b, d);
    CHECK(is_cpb(a, b, d).ok == expect);
    CHECK(is_cpb(a, b, d.negated()).ok == expect);

    const auto found = find_cpb(a, b);
    if (m == 2) REQUIRE(found);
    if (found) {
      CHECK(cpb_oracle(a, b, *found));
      CHECK(is_cpb(b, a, found->inverse()).ok);
      CHECK(is_cpb(a, b, found->negated()).ok);
      // Composition: a -> b -> relabeled b.
      const AntipodalMap rho{testing::random_permutation(rng, n), std::vector<Sign>(n, Sign::Plus)};
      std::vector<QVector> reps(n);
      for (std::size_t i = 0; i < n; ++i) reps[rho.perm[i]] = b.rep(i);
      const NormalSystem c(m, reps);
      CHECK(is_cpb(b, c, rho).ok);
      CHECK(is_cpb(a, c, rho.after(*found)).ok);
    } else {
      // Exhaustive oracle confirms no map exists (small n only).
      bool any = false;
      std::vector<std::size_t> p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = i;
      do {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)) && !any; ++mask) {
          AntipodalMap e{Permutation(p), std::vector<Sign>(n, Sign::Plus)};
          for (std::size_t i = 1; i < n; ++i)
            if ((mask >> (i - 1)) & 1U) e.flips[i] = Sign::Minus;
          any = cpb_oracle(a, b, e);
        }
      } while (!any && std::next_permutation(p.begin(), p.end()));
      CHECK_FALSE(any);
    }

    // Relabeling a system gives a CPB back.
    const auto rho = testing::random_permutation(rng, n);
    std::vector<QVector> reps(n);
    for (std::size_t i = 0; i < n; ++i) reps[rho[i]] = a.rep(i) * Rational(-3);
    const auto back = find_cpb(a, NormalSystem(m, reps));
    REQUIRE(back);
    CHECK(is_cpb(a, NormalSystem(m, reps), *back).ok);
  }
}

TEST_CASE("positive_combo symmetric under negation") {
  testing::Rng rng(testing::announce_seed("normsys-combo", 17));
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    const QMatrix t = testing::random_invertible(rng, m, -5, 5);
    std::vector<QVector> base, neg_base;
    for (std::size_t c = 0; c < m; ++c) {
      base.push_back(t.col(c));
      neg_base.push_back(-t.col(c));
    }
    const QVector u = testing::random_nonzero_vector(rng, m);
    const auto p = positive_combo(base, u);
    const auto q = positive_combo(neg_base, -u);
    CHECK(p.has_value() == q.has_value());
    if (p) CHECK(*p == *q);
    CHECK(p.has_value() == all_positive_by_cramer(base, u));
  }
}
