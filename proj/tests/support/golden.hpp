#pragma once

#include <array>
#include <vector>

#include "arrangeo/normal_system.hpp"

namespace arrangeo::testing {

/// One printed relation: sum of lhs terms = sum of rhs terms = value.
/// Terms are (coefficient, 1-based line).
struct Relation {
  std::vector<std::pair<long, std::size_t>> lhs;
  std::vector<std::pair<long, std::size_t>> rhs;
  std::array<long, 3> value;
};

// Relation 9 of the first list reads 9u1 + 27u5 here (the 9u5 print does not balance),
// and relation 14 of the second list has value (12,36,54).
inline const std::vector<Relation>& first_system_relations() {
  static const std::vector<Relation> r{
      {{{3, 4}}, {{1, 1}, {2, 2}, {2, 3}}, {1, 2, 2}},
      {{{9, 5}}, {{1, 1}, {4, 2}, {8, 3}}, {1, 4, 8}},
      {{{11, 6}}, {{6, 1}, {6, 2}, {7, 3}}, {6, 6, 7}},
      {{{12, 4}}, {{3, 1}, {4, 2}, {9, 5}}, {4, 8, 8}},
      {{{5, 1}, {21, 4}}, {{2, 2}, {22, 6}}, {12, 14, 14}},
      {{{88, 6}}, {{41, 1}, {20, 2}, {63, 5}}, {48, 48, 56}},
      {{{1, 1}, {9, 5}}, {{4, 3}, {6, 4}}, {2, 4, 8}},
      {{{11, 6}}, {{3, 1}, {1, 3}, {9, 4}}, {6, 6, 7}},
      {{{9, 1}, {27, 5}}, {{10, 3}, {22, 6}}, {12, 12, 24}},
      {{{9, 5}}, {{2, 2}, {6, 3}, {3, 4}}, {1, 4, 8}},
      {{{18, 4}}, {{6, 2}, {5, 3}, {11, 6}}, {6, 12, 12}},
      {{{54, 5}}, {{18, 2}, {41, 3}, {11, 6}}, {6, 24, 48}},
      {{{44, 6}}, {{13, 1}, {30, 4}, {9, 5}}, {24, 24, 28}},
      {{{123, 4}}, {{26, 2}, {45, 5}, {66, 6}}, {41, 82, 82}},
      {{{13, 3}, {27, 4}}, {{27, 5}, {11, 6}}, {9, 18, 31}},
  };
  return r;
}

inline const std::vector<Relation>& second_system_relations() {
  static const std::vector<Relation> r{
      {{{3, 4}}, {{1, 1}, {2, 2}, {2, 3}}, {1, 2, 2}},
      {{{9, 5}}, {{1, 1}, {4, 2}, {8, 3}}, {1, 4, 8}},
      {{{11, 6}}, {{2, 1}, {6, 2}, {9, 3}}, {2, 6, 9}},
      {{{12, 4}}, {{3, 1}, {4, 2}, {9, 5}}, {4, 8, 8}},
      {{{27, 4}}, {{5, 1}, {6, 2}, {22, 6}}, {9, 18, 18}},
      {{{88, 6}}, {{7, 1}, {12, 2}, {81, 5}}, {16, 48, 72}},
      {{{1, 1}, {9, 5}}, {{4, 3}, {6, 4}}, {2, 4, 8}},
      {{{1, 1}, {11, 6}}, {{3, 3}, {9, 4}}, {3, 6, 9}},
      {{{1, 1}, {27, 5}}, {{6, 3}, {22, 6}}, {4, 12, 24}},
      {{{9, 5}}, {{2, 2}, {6, 3}, {3, 4}}, {1, 4, 8}},
      {{{11, 6}}, {{2, 2}, {5, 3}, {6, 4}}, {2, 6, 9}},
      {{{18, 5}}, {{2, 2}, {7, 3}, {11, 6}}, {2, 8, 16}},
      {{{1, 1}, {44, 6}}, {{18, 4}, {27, 5}}, {9, 24, 36}},
      {{{66, 6}}, {{2, 2}, {21, 4}, {45, 5}}, {12, 36, 54}},
      {{{1, 3}, {11, 6}}, {{3, 4}, {9, 5}}, {2, 6, 10}},
  };
  return r;
}

/// Unit vectors as printed, before normalization.
inline std::vector<QVector> printed_vectors(bool second) {
  auto q = [](long p, long d) { return Rational(mpz_class(p), mpz_class(d)); };
  std::vector<QVector> v{
      QVector{1, 0, 0},
      QVector{0, 1, 0},
      QVector{0, 0, 1},
      QVector{q(1, 3), q(2, 3), q(2, 3)},
      QVector{q(1, 9), q(4, 9), q(8, 9)},
  };
  if (second)
    v.push_back(QVector{q(2, 11), q(6, 11), q(9, 11)});
  else
    v.push_back(QVector{q(6, 11), q(6, 11), q(7, 11)});
  return v;
}

}  // namespace arrangeo::testing
