#include "arrangeo/concurrency.hpp"

#include <algorithm>
#include <optional>

#include "arrangeo/errors.hpp"
#include "arrangeo/feasibility.hpp"
#include "arrangeo/parallel.hpp"

namespace arrangeo {

QVector concurrency_normal(const QMatrix& coefficients, const Subset& s) {
  const std::size_t n = coefficients.rows();
  const std::size_t m = coefficients.cols();
  if (s.size() != m + 1) throw DimensionError("a concurrency hyperplane needs m+1 subscripts");
  if (s.indices().back() >= n) throw DimensionError("subscript out of range");
  QVector normal(n);
  for (std::size_t k = 0; k <= m; ++k) {
    QMatrix minor(m, m);
    std::size_t r = 0;
    for (std::size_t q = 0; q <= m; ++q) {
      if (q == k) continue;
      for (std::size_t c = 0; c < m; ++c) minor(r, c) = coefficients(s[q], c);
      ++r;
    }
    const Rational d = det(minor);
    if (d.is_zero()) throw ValidationError("normals of " + s.without(s[k]).to_string() + " are linearly dependent");
    // Row k (1-based k+1) of the bordered (m+1)x(m+1) matrix, last column.
    normal[s[k]] = ((k + 1 + m + 1) % 2 == 0) ? d : -d;
  }
  return normal;
}

std::vector<ConcurrencyHyperplane> concurrency_arrangement(const QMatrix& coefficients) {
  std::vector<ConcurrencyHyperplane> out;
  if (coefficients.rows() <= coefficients.cols()) return out;
  for (auto& s : subsets_of_size(coefficients.rows(), coefficients.cols() + 1)) {
    QVector normal = concurrency_normal(coefficients, s);
    out.push_back({std::move(s), std::move(normal)});
  }
  return out;
}

Sign ConeSignature::sign_of(const Subset& s) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), s,
                             [](const std::pair<Subset, Sign>& e, const Subset& key) { return e.first < key; });
  if (it == entries.end() || it->first != s) throw DimensionError("subset " + s.to_string() + " is not in the signature");
  return it->second;
}

bool ConeSignature::same_cone(const ConeSignature& other) const { return entries == other.entries; }

std::string ConeSignature::to_string() const {
  std::string out;
  for (const auto& [s, sign] : entries) out += s.to_string() + ":" + to_char(sign) + "\n";
  return out;
}

namespace {

// Signs of <n_S, b>, 0 allowed.
std::vector<int> raw_signs(const std::vector<ConcurrencyHyperplane>& hs, const QVector& b) {
  std::vector<int> out;
  out.reserve(hs.size());
  for (const auto& h : hs) out.push_back(h.normal.dot(b).sign());
  return out;
}

// Coordinates y = K z on ker(A^t); the column space of A is the lineality
// space of every cone, so nothing is lost.
struct Reduced {
  std::vector<QVector> basis;  // K, columns in Q^n
  std::vector<QVector> normals;  // K^t n_S
};

Reduced reduce(const Arrangement& arr, const std::vector<ConcurrencyHyperplane>& hs) {
  Reduced r;
  r.basis = kernel_basis(arr.coefficients().transpose());
  for (const auto& h : hs) {
    QVector v(r.basis.size());
    for (std::size_t c = 0; c < r.basis.size(); ++c) v[c] = r.basis[c].dot(h.normal);
    r.normals.push_back(std::move(v));
  }
  return r;
}

bool facet_open(const Reduced& red, const std::vector<int>& signs, std::size_t flip) {
  std::vector<StrictRow> rows;
  rows.reserve(signs.size());
  for (std::size_t t = 0; t < signs.size(); ++t) {
    const bool plus = (signs[t] > 0) != (t == flip);
    rows.push_back({red.normals[t], 0, plus ? Sign::Plus : Sign::Minus});
  }
  return feasible_strict(rows, red.basis.size()).has_value();
}

}  // namespace

ConeSignature cone_signature(const Arrangement& arr) {
  const auto hs = concurrency_arrangement(arr.coefficients());
  ConeSignature sig;
  sig.b = arr.offsets();
  const auto signs = raw_signs(hs, sig.b);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (signs[i] == 0) {
      throw DegeneracyError("offsets lie on the concurrency hyperplane of " + hs[i].subset.to_string() +
                            " (those hyperplanes share a point)");
    }
    sig.entries.emplace_back(hs[i].subset, signs[i] > 0 ? Sign::Plus : Sign::Minus);
  }
  return sig;
}

std::vector<Subset> simplex_polyhedralities(const Arrangement& arr) {
  require_general_position(arr);
  const std::size_t n = arr.size();
  const std::size_t m = arr.dim();
  std::vector<Subset> out;
  if (n <= m) return out;
  for (const auto& s : subsets_of_size(n, m + 1)) {
    std::vector<QVector> corners;
    for (auto i : s) corners.push_back(vertex_point(arr, s.without(i)));
    bool cut = false;
    for (std::size_t h = 0; h < n && !cut; ++h) {
      if (s.contains(h)) continue;
      bool below = false, above = false;
      for (const auto& v : corners) {
        const int side = arr[h].evaluate(v).sign();
        below = below || side < 0;
        above = above || side > 0;
      }
      cut = below && above;
    }
    if (!cut) out.push_back(s);
  }
  return out;
}

std::vector<Subset> cone_facets(const Arrangement& arr) {
  const auto hs = concurrency_arrangement(arr.coefficients());
  if (hs.empty()) return {};
  const auto sig = cone_signature(arr);
  std::vector<int> signs;
  for (const auto& e : sig.entries) signs.push_back(to_int(e.second));
  const Reduced red = reduce(arr, hs);
  std::vector<char> is_facet(hs.size(), 0);
  parallel_for(hs.size(), [&](std::size_t i) { is_facet[i] = facet_open(red, signs, i) ? 1 : 0; });
  std::vector<Subset> out;
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (is_facet[i]) out.push_back(hs[i].subset);
  return out;
}

Arrangement cross_facet(const Arrangement& arr, const Subset& s) {
  const auto hs = concurrency_arrangement(arr.coefficients());
  const auto sig = cone_signature(arr);
  std::size_t idx = hs.size();
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (hs[i].subset == s) idx = i;
  if (idx == hs.size()) throw DimensionError("subset " + s.to_string() + " has no concurrency hyperplane");

  std::vector<int> target;
  for (const auto& e : sig.entries) target.push_back(to_int(e.second));
  const Reduced red = reduce(arr, hs);
  if (!facet_open(red, target, idx)) throw GeometryError(s.to_string() + " is not a facet of the cone");
  target[idx] = -target[idx];

  const QVector b = arr.offsets();
  const QVector& nrm = hs[idx].normal;
  const QVector reflected = b - nrm * (Rational(2) * nrm.dot(b) / nrm.dot(nrm));
  if (raw_signs(hs, reflected) == target) return arr.with_offsets(reflected);

  // Point in the relative interior of the facet: z on the hyperplane
  // <r_S, z> = 0 (z = K2 w), other signs strict.
  const auto k2 = kernel_basis(QMatrix::from_rows(std::vector<QVector>{red.normals[idx]}, red.basis.size()));
  std::vector<StrictRow> rows;
  for (std::size_t t = 0; t < hs.size(); ++t) {
    if (t == idx) continue;
    QVector coeffs(k2.size());
    for (std::size_t c = 0; c < k2.size(); ++c) coeffs[c] = k2[c].dot(red.normals[t]);
    rows.push_back({coeffs, 0, target[t] > 0 ? Sign::Plus : Sign::Minus});
  }
  std::optional<QVector> w = rows.empty() ? std::optional<QVector>(QVector(k2.size())) : feasible_strict(rows, k2.size());
  if (!w) throw Error("internal error: facet " + s.to_string() + " has no relative interior point");
  QVector z(red.basis.size());
  for (std::size_t c = 0; c < k2.size(); ++c) z += k2[c] * (*w)[c];
  // Keep b's column-space component: that part is a translation of the whole arrangement.
  const QMatrix a = arr.coefficients();
  std::vector<QVector> cols;
  for (std::size_t c = 0; c < a.cols(); ++c) cols.push_back(a.col(c));
  QVector p = projector_pair(cols).onto * b;
  for (std::size_t c = 0; c < red.basis.size(); ++c) p += red.basis[c] * z[c];

  const Rational half(mpz_class(1), mpz_class(2));
  QVector step = reflected - p;
  for (int attempt = 0; attempt < 512; ++attempt) {
    step *= half;
    const QVector candidate = p + step;
    if (raw_signs(hs, candidate) == target) return arr.with_offsets(candidate);
  }
  throw Error("internal error: could not cross facet " + s.to_string());
}

mpz_class cone_count_bound(std::size_t n, std::size_t m) {
  mpz_class big_n;
  mpz_bin_uiui(big_n.get_mpz_t(), n, m + 1);
  mpz_class total = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    mpz_class c;
    mpz_bin_ui(c.get_mpz_t(), big_n.get_mpz_t(), i);
    total += c;
  }
  if (big_n > 0) {
    mpz_class c;
    const mpz_class less = big_n - 1;
    mpz_bin_ui(c.get_mpz_t(), less.get_mpz_t(), n);
    total -= c;
  }
  return total;
}

}  // namespace arrangeo
