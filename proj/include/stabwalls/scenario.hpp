#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "stabwalls/io.hpp"
#include "stabwalls/parabolic.hpp"
#include "stabwalls/vgit.hpp"
#include "stabwalls/walls.hpp"

namespace stabwalls {

struct ParabolicSection {
  WeightVector weights;
  ParabolicData full;
  std::vector<ParabolicCandidate> candidates;
  NumClass center;
};

struct VgitPath {
  Character from;
  Character to;
};

struct VgitSection {
  TorusWeights weights;
  std::vector<VgitPath> paths;
  // Characters whose semistable loci are listed in the report.
  std::vector<Character> probes;
};

struct Scenario {
  std::string name;
  std::optional<VarietyData> variety;
  std::optional<Segment> segment;
  std::optional<SheafNumerics> sheaf;
  std::vector<Candidate> candidates;
  // Twist count; empty means "use l0".
  std::optional<long> l;
  bool require_star = false;
  std::optional<ParabolicSection> parabolic;
  std::optional<VgitSection> vgit;
  // The input as read, embedded verbatim in reports.
  Json source;

  const VarietyData& need_variety() const;
  const Segment& need_segment() const;
  const SheafNumerics& need_sheaf() const;
};

// "zb2" names a bundled variety; anything else is a path, relative to base.
std::filesystem::path resolve_variety(const std::string& ref, const std::filesystem::path& base);

Scenario scenario_from_json(const Json& j, const std::filesystem::path& base = {});
// Bundled scenario names ("zb1") are accepted as well as paths.
Scenario load_scenario(const std::string& ref);

}  // namespace stabwalls
