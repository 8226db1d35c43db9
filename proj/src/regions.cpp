#include "arrangeo/regions.hpp"

#include "arrangeo/errors.hpp"
#include "arrangeo/feasibility.hpp"

namespace arrangeo {

SignVector SignVector::parse(std::string_view text) {
  std::vector<Sign> signs;
  signs.reserve(text.size());
  for (char c : text) {
    if (c == '+') signs.push_back(Sign::Plus);
    else if (c == '-') signs.push_back(Sign::Minus);
    else throw ParseError("sign vector may only contain '+' and '-'");
  }
  return SignVector(std::move(signs));
}

SignVector SignVector::negated() const {
  std::vector<Sign> out;
  out.reserve(size());
  for (auto s : signs_) out.push_back(-s);
  return SignVector(std::move(out));
}

std::string SignVector::to_string() const {
  std::string out;
  out.reserve(size());
  for (auto s : signs_) out.push_back(to_char(s));
  return out;
}

namespace {

std::optional<QVector> prefix_witness(const Arrangement& arr, const std::vector<Sign>& signs) {
  std::vector<StrictRow> rows;
  rows.reserve(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) rows.push_back({arr[i].a, arr[i].b, signs[i]});
  return feasible_strict(rows, arr.dim());
}

void check_length(const Arrangement& arr, const SignVector& s) {
  if (s.size() != arr.size()) throw DimensionError("sign vector length differs from the number of hyperplanes");
}

bool recession_trivial(const Arrangement& arr, const SignVector& s) {
  if (rank(arr.coefficients()) < arr.dim()) return false;
  // Recession cone {d : s_j a_j·d >= 0}. With spanning normals any nonzero d
  // in it has s_i a_i·d > 0 for some i, so one probe per constraint suffices.
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::vector<Inequality> rows;
    rows.reserve(arr.size() + 1);
    for (std::size_t j = 0; j < arr.size(); ++j) {
      const QVector a = s[j] == Sign::Plus ? arr[j].a : -arr[j].a;
      rows.push_back({-a, 0, false});
      if (j == i) rows.push_back({-a, -1, false});
    }
    if (solve_inequalities(rows, arr.dim())) return false;
  }
  return true;
}

}  // namespace

std::optional<QVector> region_witness(const Arrangement& arr, const SignVector& s) {
  check_length(arr, s);
  return prefix_witness(arr, s.signs());
}

bool region_bounded(const Arrangement& arr, const SignVector& s) {
  check_length(arr, s);
  if (!region_witness(arr, s)) throw GeometryError("region " + s.to_string() + " is empty");
  return recession_trivial(arr, s);
}

Region classify_region(const Arrangement& arr, const SignVector& s) {
  Region r{s, false, false, region_witness(arr, s)};
  r.nonempty = r.witness.has_value();
  if (r.nonempty) r.bounded = region_bounded(arr, s);
  return r;
}

std::vector<Region> enumerate_regions(const Arrangement& arr, std::size_t max_hyperplanes) {
  const std::size_t n = arr.size();
  if (n > max_hyperplanes) {
    throw CapacityError("region enumeration is limited to " + std::to_string(max_hyperplanes) + " hyperplanes");
  }
  std::vector<Region> out;
  std::vector<Sign> prefix;
  prefix.reserve(n);

  // Depth-first over prefixes; an empty prefix cell prunes its whole subtree.
  auto descend = [&](auto&& self, std::optional<QVector> witness) -> void {
    if (prefix.size() == n) {
      SignVector s(prefix);
      const bool bounded = recession_trivial(arr, s);
      out.push_back({std::move(s), true, bounded, std::move(witness)});
      return;
    }
    for (Sign next : {Sign::Plus, Sign::Minus}) {
      prefix.push_back(next);
      if (auto w = prefix_witness(arr, prefix)) self(self, std::move(w));
      prefix.pop_back();
    }
  };
  descend(descend, QVector(arr.dim()));
  return out;
}

RegionCounts count_formula(std::uint64_t n, std::uint64_t m) {
  if (m == 0) throw DimensionError("dimension must be positive");
  RegionCounts c;
  for (std::uint64_t i = 0; i <= m && i <= n; ++i) c.total += binomial(n, i);
  c.bounded = n == 0 ? 0 : binomial(n - 1, m);
  c.unbounded = c.total - c.bounded;
  return c;
}

RegionCounts tally(const std::vector<Region>& regions) {
  RegionCounts c;
  for (const auto& r : regions) {
    if (!r.nonempty) continue;
    ++c.total;
    if (r.bounded) ++c.bounded;
    else ++c.unbounded;
  }
  return c;
}

}  // namespace arrangeo
