#include "arrangeo/normal_system.hpp"

#include "arrangeo/errors.hpp"

namespace arrangeo {

std::string SignedLine::to_string() const { return std::string(1, to_char(sign)) + std::to_string(line + 1); }

IndependenceVerdict is_maximally_independent(std::span<const QVector> vectors, std::size_t m) {
  for (const auto& v : vectors) {
    if (v.dim() != m) throw DimensionError("vector has wrong dimension");
  }
  for (std::size_t r = 1; r <= std::min(m, vectors.size()); ++r) {
    for (const auto& s : subsets_of_size(vectors.size(), r)) {
      std::vector<QVector> rows;
      for (auto i : s) rows.push_back(vectors[i]);
      if (rank(QMatrix::from_rows(rows, m)) < r) return {false, s};
    }
  }
  return {};
}

namespace {

std::vector<QVector> normalize_all(std::size_t m, std::vector<QVector> vectors) {
  if (m == 0) throw DimensionError("normal system dimension must be positive");
  for (auto& v : vectors) {
    if (v.dim() != m) throw DimensionError("normal vector has wrong dimension");
    v = v.normalized();
  }
  return vectors;
}

}  // namespace

NormalSystem::NormalSystem(std::size_t m, std::vector<QVector> vectors)
    : m_(m), reps_(normalize_all(m, std::move(vectors))) {
  const auto verdict = is_maximally_independent(reps_, m_);
  if (!verdict.independent) {
    throw ValidationError("vectors " + verdict.witness->to_string() + " are linearly dependent");
  }
}

QVector NormalSystem::vector(const SignedLine& s) const {
  return s.sign == Sign::Plus ? reps_.at(s.line) : -reps_.at(s.line);
}

NormalSystem extract_normal_system(const Arrangement& arr) {
  std::vector<QVector> normals;
  normals.reserve(arr.size());
  for (const auto& h : arr.hyperplanes()) normals.push_back(h.a);
  return NormalSystem(arr.dim(), std::move(normals));
}

std::optional<QVector> positive_combo(std::span<const QVector> base, const QVector& u) {
  if (base.empty()) throw DimensionError("empty base");
  const QMatrix b = QMatrix::from_columns(base, u.dim());
  if (!b.is_square()) throw DimensionError("base must have as many vectors as the dimension");
  QVector c = solve_unique(b, u);
  for (const auto& e : c) {
    if (e.sign() <= 0) return std::nullopt;
  }
  return c;
}

SimpleBaseVerdict is_normal_simple_base(const NormalSystem& ns, std::span<const SignedLine> base) {
  if (base.size() != ns.dim()) return {false, "a base needs exactly m vectors"};
  std::vector<QVector> vecs;
  std::vector<bool> used(ns.size(), false);
  for (const auto& s : base) {
    if (s.line >= ns.size()) throw DimensionError("line index out of range");
    if (used[s.line]) return {false, "line " + std::to_string(s.line + 1) + " appears twice, so this is not a base"};
    used[s.line] = true;
    vecs.push_back(ns.vector(s));
  }
  // Distinct lines of a normal system always form a base; a nonnegative
  // combination with a zero coefficient would contradict maximal independence.
  for (std::size_t j = 0; j < ns.size(); ++j) {
    if (used[j]) continue;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      if (positive_combo(vecs, ns.vector({j, s}))) {
        return {false, SignedLine{j, s}.to_string() + " is a positive combination of the base"};
      }
    }
  }
  return {true, ""};
}

AntipodalMap AntipodalMap::identity(std::size_t n) {
  return {Permutation::identity(n), std::vector<Sign>(n, Sign::Plus)};
}

AntipodalMap AntipodalMap::parse(std::string_view perm, std::string_view flips) {
  AntipodalMap d{Permutation::parse(perm), {}};
  for (char c : flips) {
    if (c == '+') d.flips.push_back(Sign::Plus);
    else if (c == '-') d.flips.push_back(Sign::Minus);
    else throw ParseError("flips may only contain '+' and '-'");
  }
  if (d.flips.size() != d.perm.size()) throw ParseError("perm and flips have different lengths");
  return d;
}

SignedLine AntipodalMap::apply(const SignedLine& s) const {
  return {perm.images().at(s.line), s.sign * flips.at(s.line)};
}

AntipodalMap AntipodalMap::after(const AntipodalMap& first) const {
  if (first.size() != size()) throw DimensionError("composing maps of different sizes");
  AntipodalMap out{perm.after(first.perm), std::vector<Sign>(size())};
  for (std::size_t i = 0; i < size(); ++i) out.flips[i] = first.flips[i] * flips[first.perm.images()[i]];
  return out;
}

AntipodalMap AntipodalMap::inverse() const {
  AntipodalMap out{perm.inverse(), std::vector<Sign>(size())};
  for (std::size_t i = 0; i < size(); ++i) out.flips[perm.images()[i]] = flips[i];
  return out;
}

AntipodalMap AntipodalMap::negated() const {
  AntipodalMap out = *this;
  for (auto& f : out.flips) f = -f;
  return out;
}

std::string AntipodalMap::flips_string() const {
  std::string s;
  for (auto f : flips) s.push_back(to_char(f));
  return s;
}

CpbVerdict is_cpb(const NormalSystem& ns1, const NormalSystem& ns2, const AntipodalMap& delta) {
  const std::size_t n = ns1.size();
  const std::size_t m = ns1.dim();
  if (ns2.size() != n || ns2.dim() != m || delta.size() != n) {
    throw DimensionError("is_cpb needs systems and map of the same size and dimension");
  }
  if (n < m) return {};
  for (const auto& lines : subsets_of_size(n, m)) {
    // Sign choices with the first base vector fixed to +; -B gives the same conditions.
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << (m - 1)); ++pattern) {
      std::vector<SignedLine> base;
      std::vector<QVector> b1, b2;
      for (std::size_t k = 0; k < m; ++k) {
        const Sign s = (k > 0 && ((pattern >> (k - 1)) & 1U)) ? Sign::Minus : Sign::Plus;
        base.push_back({lines[k], s});
        b1.push_back(ns1.vector(base.back()));
        b2.push_back(ns2.vector(delta.apply(base.back())));
      }
      const QMatrix m1 = inverse(QMatrix::from_columns(b1, m));
      const QMatrix m2 = inverse(QMatrix::from_columns(b2, m));
      for (std::size_t j = 0; j < n; ++j) {
        for (Sign s : {Sign::Plus, Sign::Minus}) {
          const SignedLine u{j, s};
          const QVector c1 = m1 * ns1.vector(u);
          const QVector c2 = m2 * ns2.vector(delta.apply(u));
          auto all_positive = [](const QVector& c) {
            for (const auto& e : c)
              if (e.sign() <= 0) return false;
            return true;
          };
          if (all_positive(c1) != all_positive(c2)) return {false, CpbWitness{base, u}};
        }
      }
    }
  }
  return {};
}

std::vector<Sign> circuit_signs(const NormalSystem& ns, const Subset& lines) {
  if (lines.size() != ns.dim() + 1) throw DimensionError("a circuit needs m+1 lines");
  std::vector<QVector> cols;
  for (auto i : lines) cols.push_back(ns.rep(i));
  const auto ker = kernel_basis(QMatrix::from_columns(cols, ns.dim()));
  if (ker.size() != 1) throw ValidationError("lines " + lines.to_string() + " are not in general position");
  std::vector<Sign> out;
  for (const auto& e : ker.front()) {
    if (e.is_zero()) throw ValidationError("lines " + lines.to_string() + " are not in general position");
    out.push_back(e.sign() > 0 ? Sign::Plus : Sign::Minus);
  }
  return out;
}

}  // namespace arrangeo
