#include "arrangeo/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "arrangeo/errors.hpp"

namespace arrangeo {

namespace {

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || v == 0) {
      throw ParseError("malformed 1-based index list \"" + std::string(text) + "\"");
    }
    out.push_back(v - 1);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Subset::Subset(std::initializer_list<std::size_t> zero_based) : Subset(std::vector<std::size_t>(zero_based)) {}

Subset::Subset(std::vector<std::size_t> zero_based) : idx_(std::move(zero_based)) {
  std::sort(idx_.begin(), idx_.end());
  if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end()) {
    throw ParseError("subset has repeated subscripts");
  }
}

Subset Subset::from_one_based(const std::vector<std::size_t>& one_based) {
  std::vector<std::size_t> z;
  z.reserve(one_based.size());
  for (auto v : one_based) {
    if (v == 0) throw ParseError("subscripts are 1-based");
    z.push_back(v - 1);
  }
  return Subset(std::move(z));
}

Subset Subset::parse(std::string_view text) {
  if (!text.empty() && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  return Subset(parse_index_list(text));
}

bool Subset::contains(std::size_t i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

bool Subset::is_subset_of(const Subset& other) const {
  return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(), idx_.end());
}

Subset Subset::with(std::size_t i) const {
  auto v = idx_;
  v.push_back(i);
  return Subset(std::move(v));
}

Subset Subset::without(std::size_t i) const {
  auto v = idx_;
  v.erase(std::remove(v.begin(), v.end(), i), v.end());
  return Subset(std::move(v));
}

Subset Subset::united(const Subset& other) const {
  std::vector<std::size_t> v;
  std::set_union(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(), std::back_inserter(v));
  return Subset(std::move(v));
}

Subset Subset::minus(const Subset& other) const {
  std::vector<std::size_t> v;
  std::set_difference(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(), std::back_inserter(v));
  return Subset(std::move(v));
}

std::uint64_t Subset::mask() const {
  std::uint64_t m = 0;
  for (auto i : idx_) m |= std::uint64_t{1} << i;
  return m;
}

std::vector<std::size_t> Subset::one_based() const {
  std::vector<std::size_t> v;
  v.reserve(idx_.size());
  for (auto i : idx_) v.push_back(i + 1);
  return v;
}

std::string Subset::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(idx_[k] + 1);
  }
  return s + "}";
}

std::vector<Subset> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Subset> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw ParseError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_index_list(text)); }

Subset Permutation::apply(const Subset& s) const {
  std::vector<std::size_t> v;
  v.reserve(s.size());
  for (auto i : s) v.push_back(images_.at(i));
  return Subset(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& first) const {
  std::vector<std::size_t> v(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) v[i] = images_.at(first[i]);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i] + 1);
  }
  return s;
}

}  // namespace arrangeo
