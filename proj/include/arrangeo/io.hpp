#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "arrangeo/arrangement.hpp"
#include "arrangeo/normal_system.hpp"

namespace arrangeo {

/// A rational given as "p", "p/q" or an integer JSON number; floats are rejected.
Rational rational_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json rational_to_json(const Rational& r);

/// {"m": 2, "hyperplanes": [{"a": ["1","0"], "b": "0"}, ...]}. With
/// `validate`, general position is checked and the witness reported.
Arrangement parse_arrangement(const nlohmann::json& j, bool validate = true);
Arrangement load_arrangement(const std::filesystem::path& file, bool validate = true);

/// {"m": 3, "vectors": [["1","0","0"], ...]}.
NormalSystem parse_normal_system(const nlohmann::json& j);
NormalSystem load_normal_system(const std::filesystem::path& file);

nlohmann::json to_json(const QVector& v);
nlohmann::json to_json(const Arrangement& arr);
nlohmann::json to_json(const NormalSystem& ns);

nlohmann::json read_json_file(const std::filesystem::path& file);

}  // namespace arrangeo
