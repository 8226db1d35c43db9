#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrangeo/arrangement.hpp"

namespace arrangeo {

/// One sign per hyperplane; names the open set {x : s_i (a_i·x - b_i) > 0}.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<Sign> signs) : signs_(std::move(signs)) {}

  /// "++-" style text.
  static SignVector parse(std::string_view text);

  [[nodiscard]] std::size_t size() const { return signs_.size(); }
  [[nodiscard]] Sign operator[](std::size_t i) const { return signs_[i]; }
  [[nodiscard]] const std::vector<Sign>& signs() const { return signs_; }
  [[nodiscard]] SignVector negated() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<Sign> signs_;
};

struct Region {
  SignVector sign;
  bool nonempty = false;
  bool bounded = false;
  std::optional<QVector> witness;
};

/// Interior point of the open cell, or nullopt if it is empty.
std::optional<QVector> region_witness(const Arrangement& arr, const SignVector& s);

/// Recession-cone test. Throws GeometryError on an empty cell.
bool region_bounded(const Arrangement& arr, const SignVector& s);

Region classify_region(const Arrangement& arr, const SignVector& s);

/// All nonempty open regions, sign vectors in lexicographic order with + < -.
/// CapacityError when n exceeds `max_hyperplanes`.
std::vector<Region> enumerate_regions(const Arrangement& arr, std::size_t max_hyperplanes = 20);

struct RegionCounts {
  std::uint64_t total = 0;
  std::uint64_t bounded = 0;
  std::uint64_t unbounded = 0;
  friend bool operator==(const RegionCounts&, const RegionCounts&) = default;
};

/// Closed-form counts for n hyperplanes in general position in dimension m.
RegionCounts count_formula(std::uint64_t n, std::uint64_t m);

RegionCounts tally(const std::vector<Region>& regions);

}  // namespace arrangeo
