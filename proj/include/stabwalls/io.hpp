#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "stabwalls/rational.hpp"
#include "stabwalls/sheaf.hpp"
#include "stabwalls/variety.hpp"

namespace stabwalls {

using Json = nlohmann::ordered_json;

// Rationals are strings ("3/2", "-4") or JSON integers.
Rational rational_from_json(const Json& j, const std::string& where);
NumClass class_from_json(const Json& j, int rank, const std::string& where);
Json to_json(const Rational& q);
Json to_json(const NumClass& c);
Json to_json(const UniPoly& p);

VarietyData variety_from_json(const Json& j);
VarietyData load_variety(const std::filesystem::path& path);
Json variety_to_json(const VarietyData& v);

// Sheaf expression tree:
//   {"line_bundle": [..]}, {"sum": [e, ...]}, {"extension": {"sub": e, "quot": e}},
//   {"twist": {"of": e, "by": [..]}}, {"formal_difference": {"plus": e, "minus": e}},
//   {"scaled": {"of": e, "by": "k"}}, {"zero": true}
// An optional "label" member overrides the generated label.
SheafNumerics sheaf_from_json(const VarietyData& v, const Json& j);

Json read_json_file(const std::filesystem::path& path);

// Directory holding the bundled data files (varieties/, scenarios/).
std::filesystem::path bundled_data_dir();

}  // namespace stabwalls
