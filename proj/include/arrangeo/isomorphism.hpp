#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrangeo/arrangement.hpp"
#include "arrangeo/normal_system.hpp"

namespace arrangeo {

/// Three vertices on the line cut out by `line`, and which of them is in the middle.
struct BetweennessRecord {
  Subset line;
  std::array<Subset, 3> vertices;  // sorted
  Subset middle;

  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const BetweennessRecord&, const BetweennessRecord&) = default;
};

std::vector<BetweennessRecord> betweenness_table(const Arrangement& arr);

struct IsomorphismVerdict {
  bool ok = true;
  std::optional<BetweennessRecord> witness;  ///< record of the first arrangement whose middle is not preserved
};

/// Does φ (hyperplane i of arr1 to hyperplane φ(i) of arr2) preserve every middle vertex?
IsomorphismVerdict is_isomorphism(const Arrangement& arr1, const Arrangement& arr2, const Permutation& phi);

/// Full order comparison: on every line the image sequence is the target
/// sequence or its reverse.
bool orders_agree(const Arrangement& arr1, const Arrangement& arr2, const Permutation& phi);

/// Backtracking search; CapacityError beyond `max_hyperplanes`.
std::optional<Permutation> find_isomorphism(const Arrangement& arr1, const Arrangement& arr2,
                                            std::size_t max_hyperplanes = 9);

struct TranslationVerdict {
  bool equivalent = false;
  std::optional<AntipodalMap> cpb;
};

/// Isomorphic up to translating hyperplanes, decided on the normal systems.
TranslationVerdict translation_equivalent(const Arrangement& arr1, const Arrangement& arr2);

struct Realization {
  Arrangement arrangement;      ///< translate of the source
  std::vector<Subset> crossed;  ///< facets crossed, in order
  std::size_t cones_visited = 0;
};

/// Moves the offsets of `source` through concurrency cones until it is
/// isomorphic to `target` under `phi`. With equal coefficient matrices and
/// φ = id the walk goes straight towards the target's cone; otherwise cones
/// are searched breadth-first. Gives up after `max_cones` cones.
std::optional<Realization> realize_translation(const Arrangement& source, const Arrangement& target,
                                               const Permutation& phi, std::size_t max_cones);

}  // namespace arrangeo
