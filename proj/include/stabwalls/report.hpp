#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabwalls/scenario.hpp"

namespace stabwalls {

struct ReportOptions {
  int threads = 1;
  bool require_star = false;
  bool verify = false;
  bool plot = false;
  std::optional<long> l;
};

// JSON carries exact data only; the text form adds decimal previews.
struct Report {
  Json data;
  std::string text;
  // "param,candidate_id,coeff_index,value" rows, filled when plot is set.
  std::string csv;
};

inline constexpr int kPreviewDigits = 8;
inline constexpr int kCsvDigits = 10;

Json to_json(const AlgebraicReal& r);
// "(5 − √21)/4 ≈ 0.10435608 (approx.)"
std::string describe(const AlgebraicReal& r);

Report walls_report(const Scenario& sc, const ReportOptions& opt);
Report classes_report(const Scenario& sc, const ReportOptions& opt);
Report l0_report(const Scenario& sc, const ReportOptions& opt);
Report beta_report(const Scenario& sc, const ReportOptions& opt);
Report parabolic_report(const Scenario& sc, const ReportOptions& opt);
Report vgit_report(const Scenario& sc, const ReportOptions& opt);
Report chi_report(const VarietyData& v, const std::vector<NumClass>& classes, const ReportOptions& opt);

// Dispatch on a subcommand name other than chi.
Report run_report(const std::string& command, const Scenario& sc, const ReportOptions& opt);

}  // namespace stabwalls
