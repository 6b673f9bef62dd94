#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stabwalls/report.hpp"

using namespace stabwalls;

namespace {

constexpr int kOk = 0;
constexpr int kInput = 2;
constexpr int kCompute = 3;

struct Args {
  std::string scenario;
  std::string format = "json";
  std::string plot;
  bool require_star = false;
  int parallel = 1;
  bool verify = false;
  long l = 0;
  std::string variety;
  std::vector<std::string> classes;
};

NumClass parse_class(const std::string& text) {
  NumClass c;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) c.coords.push_back(parse_rational(part));
  if (c.coords.empty()) throw InputError("empty class \"" + text + "\"");
  return c;
}

Report chi_command(const Args& a, const ReportOptions& opt) {
  std::vector<NumClass> classes;
  for (const auto& c : a.classes) classes.push_back(parse_class(c));
  if (!a.scenario.empty()) {
    Scenario sc = load_scenario(a.scenario);
    if (classes.empty() && sc.source.contains("chi")) {
      for (const auto& c : sc.source.at("chi")) classes.push_back(class_from_json(c, sc.need_variety().picard_rank, "chi"));
    }
    return chi_report(sc.need_variety(), classes, opt);
  }
  if (a.variety.empty()) throw InputError("chi needs --variety or --scenario");
  std::filesystem::path p = resolve_variety(a.variety, std::filesystem::current_path());
  return chi_report(load_variety(p), classes, opt);
}

int run(const std::string& command, const Args& a) {
  ReportOptions opt;
  opt.threads = a.parallel;
  opt.require_star = a.require_star;
  opt.verify = a.verify;
  opt.plot = !a.plot.empty();
  if (a.l != 0) opt.l = a.l;
  if (a.format != "json" && a.format != "text") throw InputError("--format must be json or text");
  if (a.parallel < 1) throw InputError("--parallel must be positive");
  if (opt.l && *opt.l < 1) throw InputError("--l must be a positive integer");

  Report rep;
  if (command == "chi") {
    if (opt.plot) throw InputError("chi has no plot data");
    rep = chi_command(a, opt);
  } else {
    if (a.scenario.empty()) throw InputError(command + " needs --scenario");
    rep = run_report(command, load_scenario(a.scenario), opt);
  }

  if (opt.plot) {
    std::ofstream out(a.plot);
    if (!out) throw InputError("cannot write " + a.plot);
    out << rep.csv;
  }
  if (a.format == "json") {
    std::cout << rep.data.dump(2) << "\n";
  } else {
    std::cout << rep.text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walls and chambers for stability of sheaves along a segment of polarizations"};
  app.require_subcommand(1);
  Args a;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"walls", "walls and chambers along the segment"},
      {"classes", "candidate wall classes for a Picard rank 2 segment"},
      {"chi", "Euler characteristic of line bundles"},
      {"l0", "twist threshold at the midpoint"},
      {"beta", "walls in the interpolation parameter beta"},
      {"parabolic", "parabolic Hilbert polynomials and weight walls"},
      {"vgit", "chambers and flips of a torus action"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--scenario", a.scenario, "scenario file, or the name of a bundled scenario");
    sub->add_option("--format", a.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--emit-plot-data", a.plot, "write CSV samples to this file");
    sub->add_flag("--require-star", a.require_star, "prune wall witnesses failing condition (*)");
    sub->add_option("--parallel", a.parallel, "worker threads for per-candidate evaluation");
    sub->add_flag("--verify", a.verify, "run additivity spot-checks");
    if (name == "beta") sub->add_option("--l", a.l, "twist count (default: l0)");
    if (name == "chi") {
      sub->add_option("--variety", a.variety, "bundled variety name or variety file");
      sub->add_option("--class", a.classes, "divisor class, comma separated, e.g. 3,-1");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, a);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kInput;
  } catch (const ComputationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCompute;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCompute;
  }
}
