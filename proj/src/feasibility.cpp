#include "arrangeo/feasibility.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "arrangeo/errors.hpp"

namespace arrangeo {

namespace {

// Row of the working system: coef·(x, t) <= rhs. The extra variable t turns
// strict rows into a·x + t <= b; the system is strictly feasible iff it is
// feasible with t > 0.
struct Row {
  std::vector<mpz_class> coef;
  mpz_class rhs;
  std::vector<std::uint64_t> history;  // original rows combined into this one
  std::vector<std::uint64_t> occurs;   // variables present in some of those rows
};

std::size_t popcount(const std::vector<std::uint64_t>& bits) {
  std::size_t c = 0;
  for (auto w : bits) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void make_primitive(Row& r) {
  mpz_class g = abs(r.rhs);
  for (const auto& c : r.coef) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& c : r.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(r.rhs.get_mpz_t(), r.rhs.get_mpz_t(), g.get_mpz_t());
}

Row to_row(const QVector& a, const Rational& b, bool strict, std::size_t index, std::size_t words) {
  mpz_class lcm = b.denominator();
  for (const auto& e : a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.raw().get_den_mpz_t());
  Row r;
  r.coef.reserve(a.dim() + 1);
  for (const auto& e : a) r.coef.push_back(e.raw().get_num() * (lcm / e.raw().get_den()));
  r.coef.push_back(strict ? lcm : mpz_class(0));
  r.rhs = b.raw().get_num() * (lcm / b.raw().get_den());
  r.history.assign(words, 0);
  r.history[index / 64] |= std::uint64_t{1} << (index % 64);
  r.occurs.assign(r.coef.size() / 64 + 1, 0);
  for (std::size_t v = 0; v < r.coef.size(); ++v)
    if (r.coef[v] != 0) r.occurs[v / 64] |= std::uint64_t{1} << (v % 64);
  make_primitive(r);
  return r;
}

bool is_constant(const Row& r, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v)
    if (r.coef[v] != 0) return false;
  return true;
}

bool history_within(const Row& inner, const Row& outer) {
  for (std::size_t w = 0; w < inner.history.size(); ++w)
    if ((inner.history[w] & ~outer.history[w]) != 0) return false;
  return true;
}

// Among rows with the same direction, drops a row when another has a bound at
// least as tight and a history contained in its own; histories only shrink,
// so Chernikov's count stays sound. Returns false if a constant row
// 0 <= rhs is violated.
bool tidy(std::vector<Row>& rows, std::size_t nvars) {
  std::map<std::vector<mpz_class>, std::vector<std::size_t>> seen;
  std::vector<Row> kept;
  std::vector<bool> dead;
  kept.reserve(rows.size());
  for (auto& r : rows) {
    if (is_constant(r, nvars)) {
      if (r.rhs < 0) return false;
      continue;
    }
    auto& same = seen[r.coef];
    bool dominated = false;
    for (auto i : same)
      if (!dead[i] && kept[i].rhs <= r.rhs && history_within(kept[i], r)) dominated = true;
    if (dominated) continue;
    for (auto i : same)
      if (!dead[i] && r.rhs <= kept[i].rhs && history_within(r, kept[i])) dead[i] = true;
    same.push_back(kept.size());
    kept.push_back(std::move(r));
    dead.push_back(false);
  }
  rows.clear();
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (!dead[i]) rows.push_back(std::move(kept[i]));
  return true;
}

Rational value_of(const Row& r, const std::vector<Rational>& x, std::size_t skip, Rational& coef_out) {
  Rational rest = Rational(mpq_class(r.rhs));
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (v == skip || r.coef[v] == 0) continue;
    rest -= Rational(mpq_class(r.coef[v])) * x[v];
  }
  coef_out = Rational(mpq_class(r.coef[skip]));
  return rest;
}

Rational floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return Rational(f, 1);
}

// Picks a value in [lo, hi] (either side may be open-ended): 0 if allowed,
// the midpoint if both ends are finite, otherwise the nearest integer inside.
Rational pick(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  const Rational zero = 0;
  if ((!lo || *lo <= zero) && (!hi || *hi >= zero)) return zero;
  if (lo && hi) return (*lo + *hi) / Rational(2);
  if (lo) return -floor_of(-*lo);
  return floor_of(*hi);
}

std::optional<QVector> eliminate(std::span<const Inequality> input, std::size_t dim, bool prune) {
  const std::size_t nvars = dim + 1;  // x then t
  const std::size_t t = dim;
  const std::size_t words = (input.size() + 1) / 64 + 1;
  bool any_strict = false;

  std::vector<Row> rows;
  rows.reserve(input.size() + 1);
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i].a.dim() != dim) throw DimensionError("inequality has wrong dimension");
    any_strict = any_strict || input[i].strict;
    rows.push_back(to_row(input[i].a, input[i].b, input[i].strict, i, words));
  }
  {
    QVector zero(dim);
    Row cap = to_row(zero, 1, true, input.size(), words);  // t <= 1
    rows.push_back(std::move(cap));
  }
  if (!tidy(rows, nvars)) return std::nullopt;

  std::vector<bool> eliminated(dim, false);
  std::vector<std::size_t> order;
  std::vector<std::vector<Row>> stages;
  for (std::size_t step = 0; step < dim; ++step) {
    // Variable with the fewest generated rows.
    std::size_t best = dim;
    long best_cost = 0;
    for (std::size_t v = 0; v < dim; ++v) {
      if (eliminated[v]) continue;
      long pos = 0, neg = 0;
      for (const auto& r : rows) {
        const int s = sgn(r.coef[v]);
        pos += s > 0;
        neg += s < 0;
      }
      const long cost = pos * neg - pos - neg;
      if (best == dim || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    stages.push_back(rows);
    order.push_back(best);
    eliminated[best] = true;

    std::vector<Row> next, pos, neg;
    for (auto& r : rows) {
      const int s = sgn(r.coef[best]);
      if (s > 0) pos.push_back(std::move(r));
      else if (s < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        Row c;
        c.history.resize(words);
        for (std::size_t w = 0; w < words; ++w) c.history[w] = p.history[w] | q.history[w];
        c.occurs.resize(p.occurs.size());
        for (std::size_t w = 0; w < c.occurs.size(); ++w) c.occurs[w] = p.occurs[w] | q.occurs[w];
        const mpz_class lp = -q.coef[best];
        const mpz_class lq = p.coef[best];
        c.coef.resize(nvars);
        for (std::size_t v = 0; v < nvars; ++v) c.coef[v] = lp * p.coef[v] + lq * q.coef[v];
        c.coef[best] = 0;
        c.rhs = lp * p.rhs + lq * q.rhs;
        make_primitive(c);
        // Imbert: a row built from more than 1 + |eliminated| original rows is
        // redundant, counting every variable of its parents that has vanished.
        std::size_t gone = 0;
        for (std::size_t v = 0; v < nvars; ++v)
          if (c.coef[v] == 0 && ((c.occurs[v / 64] >> (v % 64)) & 1U)) ++gone;
        if (prune && popcount(c.history) > gone + 1) continue;
        next.push_back(std::move(c));
      }
    }
    rows = std::move(next);
    if (!tidy(rows, nvars)) return std::nullopt;
  }

  // Only t remains, with nonnegative coefficients: t <= rhs/coef.
  std::optional<Rational> tmax;
  for (const auto& r : rows) {
    const Rational bound(r.rhs, r.coef[t]);
    if (!tmax || bound < *tmax) tmax = bound;
  }
  std::vector<Rational> x(nvars);
  if (any_strict) {
    if (!tmax || tmax->sign() <= 0) return std::nullopt;
    x[t] = *tmax / Rational(2);
  } else {
    x[t] = (tmax && tmax->sign() < 0) ? *tmax : Rational(0);
  }

  for (std::size_t k = order.size(); k-- > 0;) {
    const std::size_t v = order[k];
    std::optional<Rational> lo, hi;
    for (const auto& r : stages[k]) {
      if (r.coef[v] == 0) continue;
      Rational c;
      const Rational rest = value_of(r, x, v, c);
      const Rational bound = rest / c;
      if (c.sign() > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else if (!lo || bound > *lo) {
        lo = bound;
      }
    }
    x[v] = pick(lo, hi);
  }

  QVector out(dim);
  for (std::size_t v = 0; v < dim; ++v) out[v] = x[v];
  for (const auto& in : input) {
    const Rational lhs = in.a.dot(out);
    if (in.strict ? !(lhs < in.b) : !(lhs <= in.b)) throw Error("Fourier-Motzkin back-substitution produced an infeasible point");
  }
  return out;
}

}  // namespace

std::optional<QVector> solve_inequalities(std::span<const Inequality> rows, std::size_t dim) {
  return eliminate(rows, dim, true);
}

namespace detail {

std::optional<QVector> solve_inequalities_unpruned(std::span<const Inequality> rows, std::size_t dim) {
  return eliminate(rows, dim, false);
}

}  // namespace detail

std::optional<QVector> feasible_strict(std::span<const StrictRow> rows, std::size_t dim) {
  std::vector<Inequality> ineqs;
  ineqs.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.a.dim() != dim) throw DimensionError("strict row has wrong dimension");
    // s(a·x - b) > 0  <=>  (-s a)·x < -s b
    if (r.sign == Sign::Plus) ineqs.push_back({-r.a, -r.b, true});
    else ineqs.push_back({r.a, r.b, true});
  }
  return solve_inequalities(ineqs, dim);
}

std::optional<QVector> feasible_strict(std::span<const StrictRow> rows) {
  if (rows.empty()) throw DimensionError("feasible_strict needs at least one row to infer the dimension");
  return feasible_strict(rows, rows.front().a.dim());
}

}  // namespace arrangeo
