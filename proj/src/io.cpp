#include "stabwalls/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "stabwalls/errors.hpp"

namespace stabwalls {

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.dump());
  throw InputError(where + ": expected a rational as a string or an integer");
}

NumClass class_from_json(const Json& j, int rank, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a coordinate list");
  if (static_cast<int>(j.size()) != rank) {
    throw InputError(where + ": expected " + std::to_string(rank) + " coordinates, got " + std::to_string(j.size()));
  }
  NumClass c;
  for (std::size_t i = 0; i < j.size(); ++i) c.coords.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return c;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const NumClass& c) {
  Json out = Json::array();
  for (const auto& q : c.coords) out.push_back(to_string(q));
  return out;
}

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& q : p.coeffs()) out.push_back(to_string(q));
  return out;
}

namespace {

Exponent parse_key(const std::string& key, int rank, const std::string& where) {
  Exponent e;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      int k = std::stoi(part, &used);
      if (used != part.size() || k < 0) throw std::invalid_argument("bad");
      e.push_back(k);
    } catch (const std::exception&) {
      throw InputError(where + ": bad multidegree key \"" + key + "\"");
    }
  }
  if (static_cast<int>(e.size()) != rank) throw InputError(where + ": key \"" + key + "\" has wrong arity");
  return e;
}

std::string key_string(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out;
}

const Json& member(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) throw InputError(where + ": missing field \"" + name + "\"");
  return j.at(name);
}

int positive_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long>() < 1) throw InputError(where + ": expected a positive integer");
  return j.get<int>();
}

}  // namespace

VarietyData variety_from_json(const Json& j) {
  VarietyData v;
  if (!j.is_object()) throw InputError("variety: expected an object");
  v.name = j.value("name", std::string("variety"));
  v.dim = positive_int(member(j, "dim", "variety"), "variety.dim");
  v.picard_rank = positive_int(member(j, "picard_rank", "variety"), "variety.picard_rank");
  if (j.contains("basis")) {
    for (const auto& label : j.at("basis")) {
      if (!label.is_string()) throw InputError("variety.basis: labels must be strings");
      v.basis_labels.push_back(label.get<std::string>());
    }
  } else {
    for (int i = 0; i < v.picard_rank; ++i) v.basis_labels.push_back("B" + std::to_string(i));
  }
  const Json& inter = member(j, "intersection", "variety");
  if (!inter.is_object()) throw InputError("variety.intersection: expected an object");
  for (const auto& [key, val] : inter.items()) {
    Exponent e = parse_key(key, v.picard_rank, "variety.intersection");
    Rational q = rational_from_json(val, "variety.intersection[" + key + "]");
    if (q != 0) v.intersection[e] = q;
  }
  v.todd.resize(static_cast<std::size_t>(v.dim) + 1);
  if (j.contains("todd")) {
    const Json& todd = j.at("todd");
    if (!todd.is_object()) throw InputError("variety.todd: expected an object");
    for (const auto& [ekey, table] : todd.items()) {
      int e = 0;
      try {
        e = std::stoi(ekey);
      } catch (const std::exception&) {
        throw InputError("variety.todd: bad degree \"" + ekey + "\"");
      }
      if (e < 1 || e > v.dim) throw InputError("variety.todd: degree " + ekey + " out of range");
      for (const auto& [key, val] : table.items()) {
        Exponent m = parse_key(key, v.picard_rank, "variety.todd." + ekey);
        Rational q = rational_from_json(val, "variety.todd." + ekey + "[" + key + "]");
        if (q != 0) v.todd[static_cast<std::size_t>(e)][m] = q;
      }
    }
  }
  if (j.contains("ample")) {
    for (const auto& h : j.at("ample")) v.ample.push_back(class_from_json(h, v.picard_rank, "variety.ample"));
  }
  v.validate();
  return v;
}

Json variety_to_json(const VarietyData& v) {
  Json j;
  j["name"] = v.name;
  j["dim"] = v.dim;
  j["picard_rank"] = v.picard_rank;
  j["basis"] = v.basis_labels;
  Json inter = Json::object();
  for (const auto& e : exponents_of_degree(v.picard_rank, v.dim)) inter[key_string(e)] = to_string(v.todd_value(0, e));
  j["intersection"] = inter;
  Json todd = Json::object();
  for (int e = 1; e <= v.dim; ++e) {
    Json table = Json::object();
    for (const auto& m : exponents_of_degree(v.picard_rank, v.dim - e)) table[key_string(m)] = to_string(v.todd_value(e, m));
    todd[std::to_string(e)] = table;
  }
  j["todd"] = todd;
  Json ample = Json::array();
  for (const auto& h : v.ample) ample.push_back(to_json(h));
  j["ample"] = ample;
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

VarietyData load_variety(const std::filesystem::path& path) {
  VarietyData v = variety_from_json(read_json_file(path));
  if (v.name == "variety") v.name = path.stem().string();
  return v;
}

SheafNumerics sheaf_from_json(const VarietyData& v, const Json& j) {
  if (!j.is_object()) throw InputError("sheaf expression: expected an object");
  SheafNumerics s;
  if (j.contains("line_bundle")) {
    s = line_bundle_form(v, class_from_json(j.at("line_bundle"), v.picard_rank, "line_bundle"));
  } else if (j.contains("sum")) {
    const Json& parts = j.at("sum");
    if (!parts.is_array() || parts.empty()) throw InputError("sum: expected a nonempty list");
    s = sheaf_from_json(v, parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) s = direct_sum(s, sheaf_from_json(v, parts[i]));
  } else if (j.contains("extension")) {
    const Json& ext = j.at("extension");
    s = extension_middle(sheaf_from_json(v, member(ext, "sub", "extension")),
                         sheaf_from_json(v, member(ext, "quot", "extension")));
  } else if (j.contains("twist")) {
    const Json& tw = j.at("twist");
    s = twist(sheaf_from_json(v, member(tw, "of", "twist")),
              class_from_json(member(tw, "by", "twist"), v.picard_rank, "twist.by"));
  } else if (j.contains("formal_difference")) {
    const Json& fd = j.at("formal_difference");
    s = formal_difference(sheaf_from_json(v, member(fd, "plus", "formal_difference")),
                          sheaf_from_json(v, member(fd, "minus", "formal_difference")));
  } else if (j.contains("scaled")) {
    const Json& sc = j.at("scaled");
    s = scaled(sheaf_from_json(v, member(sc, "of", "scaled")), rational_from_json(member(sc, "by", "scaled"), "scaled.by"));
  } else if (j.contains("zero")) {
    s = zero_sheaf(v);
  } else {
    throw InputError("sheaf expression: unknown constructor in " + j.dump());
  }
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw InputError("sheaf label must be a string");
    s.label = j.at("label").get<std::string>();
  }
  return s;
}

std::filesystem::path bundled_data_dir() {
  if (const char* env = std::getenv("STABWALLS_DATA")) return env;
#ifdef STABWALLS_DATA_DIR
  return STABWALLS_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace stabwalls
