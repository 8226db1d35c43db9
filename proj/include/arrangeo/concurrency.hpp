#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "arrangeo/arrangement.hpp"

namespace arrangeo {

/// Coefficients of y_{i_1}, ..., y_{i_{m+1}} in det [A_S | y_S], expanded
/// along the last column; zero off S. Throws ValidationError if some m rows
/// of A_S are dependent.
QVector concurrency_normal(const QMatrix& coefficients, const Subset& s);

struct ConcurrencyHyperplane {
  Subset subset;
  QVector normal;
};

/// All C(n, m+1) hyperplanes, subsets in lexicographic order.
std::vector<ConcurrencyHyperplane> concurrency_arrangement(const QMatrix& coefficients);

/// Which side of every concurrency hyperplane the offset vector lies on.
struct ConeSignature {
  std::vector<std::pair<Subset, Sign>> entries;  // lexicographic by subset
  QVector b;

  [[nodiscard]] Sign sign_of(const Subset& s) const;
  [[nodiscard]] bool same_cone(const ConeSignature& other) const;
  /// One "{1,2,3}:+" line per subset.
  [[nodiscard]] std::string to_string() const;
};

/// Throws DegeneracyError if b lies on a concurrency hyperplane.
ConeSignature cone_signature(const Arrangement& arr);

/// (m+1)-subsets whose simplex is a region of the whole arrangement.
std::vector<Subset> simplex_polyhedralities(const Arrangement& arr);

/// (m+1)-subsets whose concurrency hyperplane carries a facet of the cone of b.
std::vector<Subset> cone_facets(const Arrangement& arr);

/// Same normals, offsets moved into the neighbouring cone across M_S.
/// Throws GeometryError if S is not a facet.
Arrangement cross_facet(const Arrangement& arr, const Subset& s);

/// Upper bound on the number of cones: sum_{i=0}^{n} C(N, i) - C(N-1, n), N = C(n, m+1).
mpz_class cone_count_bound(std::size_t n, std::size_t m);

}  // namespace arrangeo
