#include "arrangeo/io.hpp"

#include <fstream>

#include "arrangeo/errors.hpp"

namespace arrangeo {

Rational rational_from_json(const nlohmann::json& j, const std::string& where) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a rational string such as \"3/4\" or an integer");
}

nlohmann::json rational_to_json(const Rational& r) { return r.to_string(); }

namespace {

QVector vector_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  QVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

std::size_t dimension_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m")) throw ParseError("missing field \"m\"");
  const auto& m = j.at("m");
  if (!m.is_number_integer() || m.get<long>() <= 0) throw ParseError("\"m\" must be a positive integer");
  return m.get<std::size_t>();
}

}  // namespace

Arrangement parse_arrangement(const nlohmann::json& j, bool validate) {
  const std::size_t m = dimension_from_json(j);
  if (!j.contains("hyperplanes") || !j.at("hyperplanes").is_array()) {
    throw ParseError("missing array \"hyperplanes\"");
  }
  std::vector<Hyperplane> hs;
  const auto& list = j.at("hyperplanes");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "hyperplanes[" + std::to_string(i) + "]";
    const auto& h = list[i];
    if (!h.is_object() || !h.contains("a") || !h.contains("b")) throw ParseError(where + ": needs fields \"a\" and \"b\"");
    QVector a = vector_from_json(h.at("a"), where + ".a");
    if (a.dim() != m) throw ParseError(where + ".a: expected " + std::to_string(m) + " entries");
    if (a.is_zero()) throw ParseError(where + ".a: normal must be nonzero");
    hs.emplace_back(std::move(a), rational_from_json(h.at("b"), where + ".b"));
  }
  Arrangement arr(m, std::move(hs));
  if (validate) require_general_position(arr);
  return arr;
}

NormalSystem parse_normal_system(const nlohmann::json& j) {
  const std::size_t m = dimension_from_json(j);
  if (!j.contains("vectors") || !j.at("vectors").is_array()) throw ParseError("missing array \"vectors\"");
  std::vector<QVector> vs;
  const auto& list = j.at("vectors");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "vectors[" + std::to_string(i) + "]";
    QVector v = vector_from_json(list[i], where);
    if (v.dim() != m) throw ParseError(where + ": expected " + std::to_string(m) + " entries");
    if (v.is_zero()) throw ParseError(where + ": vector must be nonzero");
    vs.push_back(std::move(v));
  }
  return NormalSystem(m, std::move(vs));
}

nlohmann::json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(file.string() + ": " + e.what());
  }
}

Arrangement load_arrangement(const std::filesystem::path& file, bool validate) {
  return parse_arrangement(read_json_file(file), validate);
}

NormalSystem load_normal_system(const std::filesystem::path& file) { return parse_normal_system(read_json_file(file)); }

nlohmann::json to_json(const QVector& v) {
  auto out = nlohmann::json::array();
  for (const auto& e : v) out.push_back(rational_to_json(e));
  return out;
}

nlohmann::json to_json(const Arrangement& arr) {
  nlohmann::json out;
  out["m"] = arr.dim();
  out["hyperplanes"] = nlohmann::json::array();
  for (const auto& h : arr.hyperplanes()) out["hyperplanes"].push_back({{"a", to_json(h.a)}, {"b", rational_to_json(h.b)}});
  return out;
}

nlohmann::json to_json(const NormalSystem& ns) {
  nlohmann::json out;
  out["m"] = ns.dim();
  out["vectors"] = nlohmann::json::array();
  for (const auto& v : ns.reps()) out["vectors"].push_back(to_json(v));
  return out;
}

}  // namespace arrangeo
