#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace arrangeo {

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

inline Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::Plus : Sign::Minus; }
inline int to_int(Sign s) { return static_cast<int>(s); }
inline char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }
/// Sign of a nonzero integer.
inline Sign sign_of(int v) { return v > 0 ? Sign::Plus : Sign::Minus; }

/// Sorted set of hyperplane subscripts. Stored 0-based; every textual form is
/// 1-based, e.g. "{1,3}".
class Subset {
 public:
  Subset() = default;
  Subset(std::initializer_list<std::size_t> zero_based);
  explicit Subset(std::vector<std::size_t> zero_based);

  static Subset from_one_based(const std::vector<std::size_t>& one_based);
  /// Parses "1,3,4" (1-based, any order).
  static Subset parse(std::string_view text);

  [[nodiscard]] std::size_t size() const { return idx_.size(); }
  [[nodiscard]] bool empty() const { return idx_.empty(); }
  [[nodiscard]] std::size_t operator[](std::size_t i) const { return idx_[i]; }
  [[nodiscard]] auto begin() const { return idx_.begin(); }
  [[nodiscard]] auto end() const { return idx_.end(); }
  [[nodiscard]] const std::vector<std::size_t>& indices() const { return idx_; }

  [[nodiscard]] bool contains(std::size_t i) const;
  [[nodiscard]] bool is_subset_of(const Subset& other) const;
  [[nodiscard]] Subset with(std::size_t i) const;
  [[nodiscard]] Subset without(std::size_t i) const;
  [[nodiscard]] Subset united(const Subset& other) const;
  [[nodiscard]] Subset minus(const Subset& other) const;
  [[nodiscard]] std::uint64_t mask() const;

  [[nodiscard]] std::vector<std::size_t> one_based() const;
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const Subset&, const Subset&) = default;
  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::vector<std::size_t> idx_;
};

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Subset> subsets_of_size(std::size_t n, std::size_t k);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Bijection of {0..n-1}; textual form is the 1-based image list "2,1,3".
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  static Permutation parse(std::string_view text);

  [[nodiscard]] std::size_t size() const { return images_.size(); }
  [[nodiscard]] std::size_t operator[](std::size_t i) const { return images_[i]; }
  [[nodiscard]] const std::vector<std::size_t>& images() const { return images_; }

  [[nodiscard]] Subset apply(const Subset& s) const;
  [[nodiscard]] Permutation inverse() const;
  /// (this after first)(i) = this[first[i]].
  [[nodiscard]] Permutation after(const Permutation& first) const;
  [[nodiscard]] bool is_identity() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

}  // namespace arrangeo
