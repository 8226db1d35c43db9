#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrangeo/errors.hpp"
#include "arrangeo/feasibility.hpp"
#include "arrangeo/regions.hpp"
#include "generators.hpp"

using namespace arrangeo;

namespace {

Arrangement lines(std::vector<std::tuple<long, long, long>> abc) {
  std::vector<Hyperplane> hs;
  for (auto [a1, a2, b] : abc) hs.emplace_back(QVector{a1, a2}, b);
  return Arrangement(2, std::move(hs));
}

const Arrangement triangle = lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});

bool satisfies(const Arrangement& arr, const SignVector& s, const QVector& x) {
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (arr[i].evaluate(x).sign() != to_int(s[i])) return false;
  return true;
}

// Independent oracle: every sign vector, one feasibility call each, and a
// boundedness test by checking that the cell's closure is a polytope: all of
// its recession directions vanish (ray probes along the normals' span).
std::vector<SignVector> brute_force_cells(const Arrangement& arr) {
  std::vector<SignVector> out;
  const std::size_t n = arr.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Sign> signs;
    for (std::size_t i = 0; i < n; ++i) signs.push_back((mask >> (n - 1 - i)) & 1U ? Sign::Minus : Sign::Plus);
    std::vector<StrictRow> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back({arr[i].a, arr[i].b, signs[i]});
    if (feasible_strict(rows, arr.dim())) out.emplace_back(signs);
  }
  return out;
}

}  // namespace

TEST_CASE("feasible_strict examples") {
  const std::vector<StrictRow> interval{{QVector{1}, 0, Sign::Plus}, {QVector{1}, 1, Sign::Minus}};
  const auto w = feasible_strict(interval);
  REQUIRE(w);
  CHECK((*w)[0] > Rational(0));
  CHECK((*w)[0] < Rational(1));

  const std::vector<StrictRow> empty{{QVector{1}, 0, Sign::Plus}, {QVector{1}, 0, Sign::Minus}};
  CHECK_FALSE(feasible_strict(empty));

  const std::vector<StrictRow> tri{{QVector{1, 0}, 0, Sign::Plus}, {QVector{0, 1}, 0, Sign::Plus}, {QVector{1, 1}, 1, Sign::Minus}};
  const auto t = feasible_strict(tri);
  REQUIRE(t);
  CHECK(satisfies(triangle, SignVector::parse("++-"), *t));
}

TEST_CASE("solve_inequalities with mixed rows") {
  // x <= 1, -x <= -1 (so x = 1), y < x, -y < 0.
  const std::vector<Inequality> rows{{QVector{1, 0}, 1, false}, {QVector{-1, 0}, -1, false}, {QVector{-1, 1}, 0, true}, {QVector{0, -1}, 0, true}};
  const auto x = solve_inequalities(rows, 2);
  REQUIRE(x);
  CHECK((*x)[0] == Rational(1));
  CHECK((*x)[1] > Rational(0));
  CHECK((*x)[1] < Rational(1));
  const std::vector<Inequality> bad{{QVector{1, 0}, 1, false}, {QVector{-1, 0}, -1, true}};
  CHECK_FALSE(solve_inequalities(bad, 2));
}

TEST_CASE("pruned elimination agrees with the unpruned one") {
  testing::Rng rng(testing::announce_seed("regions-fm", 55));
  int feasible = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    const std::size_t count = static_cast<std::size_t>(testing::uniform(rng, 1, 10));
    std::vector<Inequality> rows;
    // Small coefficients make duplicate directions and accidental cancellations common.
    for (std::size_t i = 0; i < count; ++i)
      rows.push_back({testing::random_vector(rng, dim, -2, 2), testing::uniform(rng, -2, 2), testing::uniform(rng, 0, 1) == 1});
    const auto fast = solve_inequalities(rows, dim);
    const auto slow = detail::solve_inequalities_unpruned(rows, dim);
    CHECK(fast.has_value() == slow.has_value());
    if (fast) {
      ++feasible;
      for (const auto& r : rows) CHECK((r.strict ? r.a.dot(*fast) < r.b : r.a.dot(*fast) <= r.b));
    }
  }
  CHECK(feasible > 50);
}

TEST_CASE("region_bounded examples") {
  CHECK(region_bounded(triangle, SignVector::parse("++-")));
  CHECK_FALSE(region_bounded(triangle, SignVector::parse("+++")));
  const Arrangement one = lines({{1, 2, 3}});
  CHECK_FALSE(region_bounded(one, SignVector::parse("+")));
  CHECK_FALSE(region_bounded(one, SignVector::parse("-")));
  CHECK_THROWS_AS(region_bounded(triangle, SignVector::parse("--+")), GeometryError);
}

TEST_CASE("enumerate_regions examples") {
  const auto regions = enumerate_regions(triangle);
  CHECK(tally(regions) == RegionCounts{7, 1, 6});
  CHECK(regions.front().sign.to_string() == "+++");
  CHECK(tally(enumerate_regions(lines({{1, 2, 3}}))) == RegionCounts{2, 0, 2});
  const Arrangement five = lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, -1, 2}, {2, 1, -3}});
  REQUIRE(validate_general_position(five).valid);
  const auto c = tally(enumerate_regions(five));
  CHECK(c.total == 16);
  CHECK(c.bounded == 6);
  CHECK_THROWS_AS(enumerate_regions(triangle, 2), CapacityError);
}

TEST_CASE("count_formula") {
  CHECK(count_formula(3, 2) == RegionCounts{7, 1, 6});
  CHECK(count_formula(6, 3) == RegionCounts{42, 10, 32});
  CHECK(count_formula(2, 3) == RegionCounts{4, 0, 4});
  CHECK(count_formula(3, 3) == RegionCounts{8, 0, 8});
  CHECK(count_formula(0, 2) == RegionCounts{1, 0, 1});
}

TEST_CASE("random arrangements against the formula and a brute-force sweep") {
  testing::Rng rng(testing::announce_seed("regions", 99));
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, m == 3 ? 6 : 7));
    const Arrangement arr = testing::random_arrangement(rng, m, n);
    const auto regions = enumerate_regions(arr);
    const auto c = tally(regions);
    CHECK(c == count_formula(n, m));
    CHECK(c.bounded + c.unbounded == c.total);

    const auto cells = brute_force_cells(arr);
    REQUIRE(cells.size() == regions.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      CHECK(cells[i] == regions[i].sign);
      CHECK(satisfies(arr, regions[i].sign, *regions[i].witness));
    }

    // Flipping all signs and negating all offsets maps regions onto regions.
    QVector neg_b = arr.offsets() * Rational(-1);
    const auto mirrored = enumerate_regions(arr.with_offsets(neg_b));
    REQUIRE(mirrored.size() == regions.size());
    for (const auto& r : regions) {
      const auto flipped = r.sign.negated();
      bool found = false;
      for (const auto& s : mirrored)
        if (s.sign == flipped) found = s.bounded == r.bounded;
      CHECK(found);
    }
  }
}
