#include "stabwalls/scenario.hpp"

#include "stabwalls/errors.hpp"

namespace stabwalls {

namespace {

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) throw InputError(where + ": missing field \"" + name + "\"");
  return j.at(name);
}

std::string string_field(const Json& j, const char* name, const std::string& where) {
  const Json& s = field(j, name, where);
  if (!s.is_string()) throw InputError(where + "." + name + ": expected a string");
  return s.get<std::string>();
}

Character character_from_json(const Json& j, int rank, const std::string& where) {
  return class_from_json(j, rank, where).coords;
}

ParabolicData filtration_from_json(const VarietyData& v, const Json& j, const std::string& where) {
  ParabolicData p;
  p.total = sheaf_from_json(v, field(j, "total", where));
  const Json& qs = field(j, "quotients", where);
  if (!qs.is_array()) throw InputError(where + ".quotients: expected a list");
  for (const auto& q : qs) p.quotients.push_back(sheaf_from_json(v, q));
  p.divisor = class_from_json(field(j, "divisor", where), v.picard_rank, where + ".divisor");
  return p;
}

ParabolicSection parabolic_from_json(const Scenario& sc, const Json& j) {
  const VarietyData& v = sc.need_variety();
  ParabolicSection p;
  const Json& ws = field(j, "weights", "parabolic");
  if (!ws.is_array()) throw InputError("parabolic.weights: expected a list");
  for (std::size_t i = 0; i < ws.size(); ++i) p.weights.alphas.push_back(rational_from_json(ws[i], "parabolic.weights"));
  p.weights.validate();
  p.full = filtration_from_json(v, field(j, "filtration", "parabolic"), "parabolic.filtration");
  if (static_cast<int>(p.full.quotients.size()) != p.weights.k()) {
    throw InputError("parabolic.filtration: " + std::to_string(p.full.quotients.size()) + " quotients for " +
                     std::to_string(p.weights.alphas.size()) + " weights");
  }
  p.full.validate();
  if (j.contains("center")) {
    p.center = class_from_json(j.at("center"), v.picard_rank, "parabolic.center");
  } else if (sc.segment) {
    p.center = Rational(1, 2) * (sc.segment->h0 + sc.segment->h1);
  } else {
    throw InputError("parabolic: a center or a segment is required");
  }
  if (j.contains("candidates")) {
    for (const auto& c : j.at("candidates")) {
      std::string id = string_field(c, "id", "parabolic.candidates");
      ParabolicData d = filtration_from_json(v, field(c, "filtration", "parabolic candidate " + id),
                                             "parabolic candidate " + id);
      if (static_cast<int>(d.quotients.size()) != p.weights.k()) {
        throw InputError("parabolic candidate " + id + ": filtration length does not match the weights");
      }
      try {
        d.validate();
      } catch (const InputError& e) {
        throw InputError("parabolic candidate " + id + ": " + e.what());
      }
      p.candidates.push_back({id, std::move(d)});
    }
  }
  return p;
}

VgitSection vgit_from_json(const Json& j) {
  VgitSection s;
  s.weights.rank = field(j, "torus_rank", "vgit").get<int>();
  const Json& sums = field(j, "summands", "vgit");
  if (!sums.is_array()) throw InputError("vgit.summands: expected a list");
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const Json& x = sums[i];
    Summand m;
    m.label = x.value("label", "W" + std::to_string(i));
    m.dim = x.value("dim", 1);
    const Json& w = field(x, "weight", "vgit.summands");
    if (!w.is_array()) throw InputError("summand " + m.label + ": weight must be an integer list");
    for (const auto& c : w) {
      if (!c.is_number_integer()) throw InputError("summand " + m.label + ": weight must be an integer list");
      m.weight.push_back(c.get<long>());
    }
    s.weights.summands.push_back(std::move(m));
  }
  s.weights.validate();
  if (j.contains("paths")) {
    for (const auto& p : j.at("paths")) {
      s.paths.push_back({character_from_json(field(p, "from", "vgit.paths"), s.weights.rank, "vgit.paths.from"),
                         character_from_json(field(p, "to", "vgit.paths"), s.weights.rank, "vgit.paths.to")});
    }
  }
  if (j.contains("probes")) {
    for (const auto& p : j.at("probes")) s.probes.push_back(character_from_json(p, s.weights.rank, "vgit.probes"));
  }
  return s;
}

}  // namespace

const VarietyData& Scenario::need_variety() const {
  if (!variety) throw InputError("scenario " + name + " has no variety");
  return *variety;
}

const Segment& Scenario::need_segment() const {
  if (!segment) throw InputError("scenario " + name + " has no segment");
  return *segment;
}

const SheafNumerics& Scenario::need_sheaf() const {
  if (!sheaf) throw InputError("scenario " + name + " has no sheaf");
  return *sheaf;
}

std::filesystem::path resolve_variety(const std::string& ref, const std::filesystem::path& base) {
  std::filesystem::path p(ref);
  if (p.extension() != ".json") return bundled_data_dir() / "varieties" / (ref + ".json");
  if (p.is_relative() && !base.empty()) return base / p;
  return p;
}

Scenario scenario_from_json(const Json& j, const std::filesystem::path& base) {
  if (!j.is_object()) throw InputError("scenario: expected an object");
  Scenario sc;
  sc.source = j;
  sc.name = j.value("name", std::string("scenario"));

  if (j.contains("variety")) {
    const Json& v = j.at("variety");
    if (v.is_string()) {
      sc.variety = load_variety(resolve_variety(v.get<std::string>(), base));
    } else {
      sc.variety = variety_from_json(v);
    }
  }
  if (j.contains("segment")) {
    const VarietyData& v = sc.need_variety();
    const Json& s = j.at("segment");
    sc.segment = Segment{class_from_json(field(s, "h0", "segment"), v.picard_rank, "segment.h0"),
                         class_from_json(field(s, "h1", "segment"), v.picard_rank, "segment.h1")};
    validate_segment(v, *sc.segment);
  }
  if (j.contains("sheaf")) sc.sheaf = sheaf_from_json(sc.need_variety(), j.at("sheaf"));
  if (j.contains("candidates")) {
    const Json& cs = j.at("candidates");
    if (!cs.is_array()) throw InputError("candidates: expected a list");
    for (const auto& c : cs) {
      std::string id = string_field(c, "id", "candidate");
      try {
        sc.candidates.push_back({id, sheaf_from_json(sc.need_variety(), field(c, "sheaf", "candidate"))});
      } catch (const InputError& e) {
        throw InputError("candidate " + id + ": " + e.what());
      }
    }
    if (sc.sheaf) validate_candidates(*sc.sheaf, sc.candidates);
  }
  if (j.contains("twist")) {
    const Json& t = j.at("twist");
    if (t.contains("center") && t.at("center") != "midpoint") {
      throw InputError("twist.center: only \"midpoint\" is supported");
    }
    if (t.contains("l")) {
      const Json& l = t.at("l");
      if (!(l.is_string() && l == "l0")) {
        if (!l.is_number_integer() || l.get<long>() < 1) throw InputError("twist.l: expected a positive integer or \"l0\"");
        sc.l = l.get<long>();
      }
    }
  }
  if (j.contains("options")) sc.require_star = j.at("options").value("require_star", false);
  if (j.contains("parabolic")) sc.parabolic = parabolic_from_json(sc, j.at("parabolic"));
  if (j.contains("vgit")) sc.vgit = vgit_from_json(j.at("vgit"));
  return sc;
}

Scenario load_scenario(const std::string& ref) {
  std::filesystem::path p(ref);
  if (p.extension() != ".json") p = bundled_data_dir() / "scenarios" / (ref + ".json");
  Scenario sc = scenario_from_json(read_json_file(p), p.parent_path());
  if (!sc.source.contains("name")) sc.name = p.stem().string();
  return sc;
}

}  // namespace stabwalls
