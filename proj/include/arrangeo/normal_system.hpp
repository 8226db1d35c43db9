#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrangeo/arrangement.hpp"
#include "arrangeo/combinatorics.hpp"
#include "arrangeo/linalg.hpp"

namespace arrangeo {

/// ±v_line. Text form "+2" / "-1" (1-based).
struct SignedLine {
  std::size_t line = 0;
  Sign sign = Sign::Plus;

  [[nodiscard]] SignedLine negated() const { return {line, -sign}; }
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const SignedLine&, const SignedLine&) = default;
};

struct IndependenceVerdict {
  bool independent = true;
  std::optional<Subset> witness;
};

/// Every subset of size <= m is independent; otherwise the smallest violating subset.
IndependenceVerdict is_maximally_independent(std::span<const QVector> vectors, std::size_t m);

/// Lines through the origin given by normalized representatives.
class NormalSystem {
 public:
  /// Normalizes each vector; throws ValidationError if they are not
  /// maximally independent.
  NormalSystem(std::size_t m, std::vector<QVector> vectors);

  [[nodiscard]] std::size_t dim() const { return m_; }
  [[nodiscard]] std::size_t size() const { return reps_.size(); }
  [[nodiscard]] const QVector& rep(std::size_t i) const { return reps_[i]; }
  [[nodiscard]] const std::vector<QVector>& reps() const { return reps_; }
  [[nodiscard]] QVector vector(const SignedLine& s) const;

  friend bool operator==(const NormalSystem&, const NormalSystem&) = default;

 private:
  std::size_t m_;
  std::vector<QVector> reps_;
};

NormalSystem extract_normal_system(const Arrangement& arr);

struct SimpleBaseVerdict {
  bool simple = false;
  std::string reason;
};

SimpleBaseVerdict is_normal_simple_base(const NormalSystem& ns, std::span<const SignedLine> base);

/// Coefficients of `u` in `base`, returned only when all are strictly positive.
std::optional<QVector> positive_combo(std::span<const QVector> base, const QVector& u);

/// δ(v_i) = flips[i] · w_{perm(i)}, extended by δ(-u) = -δ(u).
struct AntipodalMap {
  Permutation perm;
  std::vector<Sign> flips;

  static AntipodalMap identity(std::size_t n);
  /// Parses perm "2,1,3" and flips "+-+".
  static AntipodalMap parse(std::string_view perm, std::string_view flips);

  [[nodiscard]] std::size_t size() const { return flips.size(); }
  [[nodiscard]] SignedLine apply(const SignedLine& s) const;
  /// (this after first)(u) = this(first(u)).
  [[nodiscard]] AntipodalMap after(const AntipodalMap& first) const;
  [[nodiscard]] AntipodalMap inverse() const;
  [[nodiscard]] AntipodalMap negated() const;
  [[nodiscard]] std::string flips_string() const;

  friend bool operator==(const AntipodalMap&, const AntipodalMap&) = default;
};

struct CpbWitness {
  std::vector<SignedLine> base;
  SignedLine u;
};

struct CpbVerdict {
  bool ok = true;
  std::optional<CpbWitness> witness;
};

/// Literal check over every basis (up to global negation) and every u.
CpbVerdict is_cpb(const NormalSystem& ns1, const NormalSystem& ns2, const AntipodalMap& delta);

/// Backtracking search for a convex positive bijection, optionally with the
/// line permutation fixed. The first line's flip is fixed to +, since -δ is a
/// CPB whenever δ is.
std::optional<AntipodalMap> find_cpb(const NormalSystem& ns1, const NormalSystem& ns2,
                                     const std::optional<Permutation>& fixed_perm = std::nullopt);

/// Sign pattern of the dependency among m+1 lines, first entry positive.
std::vector<Sign> circuit_signs(const NormalSystem& ns, const Subset& lines);

}  // namespace arrangeo
