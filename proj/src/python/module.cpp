#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stabwalls/report.hpp"

namespace py = pybind11;
using namespace stabwalls;

namespace {

std::string run_json(const std::string& command, const std::string& scenario, int threads, bool require_star,
                     bool verify, std::optional<long> l) {
  ReportOptions opt;
  opt.threads = threads;
  opt.require_star = require_star;
  opt.verify = verify;
  opt.l = l;
  py::gil_scoped_release release;
  return run_report(command, load_scenario(scenario), opt).data.dump(2);
}

std::string run_text(const std::string& command, const std::string& scenario) {
  py::gil_scoped_release release;
  return run_report(command, load_scenario(scenario), {}).text;
}

std::string chi_of(const std::string& variety, const std::vector<std::string>& cls) {
  VarietyData v = load_variety(resolve_variety(variety, std::filesystem::current_path()));
  NumClass c;
  for (const auto& x : cls) c.coords.push_back(parse_rational(x));
  return chi_report(v, {c}, {}).data["values"][0]["chi"].get<std::string>();
}

py::list roots_of(const std::vector<std::string>& coeffs, const std::string& lo, const std::string& hi) {
  std::vector<Rational> cs;
  for (const auto& c : coeffs) cs.push_back(parse_rational(c));
  UniPoly p(cs);
  if (p.is_zero()) throw InputError("the zero polynomial has no isolated roots");
  py::list out;
  for (const auto& r : isolate_roots(p, parse_rational(lo), parse_rational(hi))) {
    py::dict d;
    d["rational"] = r.is_rational;
    d["lo"] = to_string(r.lo);
    d["hi"] = to_string(r.hi);
    d["polynomial"] = r.defining_poly.to_ascii("x");
    d["approx"] = r.approx();
    out.append(d);
  }
  return out;
}

py::tuple semistable(const std::vector<std::vector<long>>& weights, const std::vector<std::string>& chi,
                     const std::vector<int>& support) {
  TorusWeights w;
  if (weights.empty()) throw InputError("no weights");
  w.rank = static_cast<int>(weights.front().size());
  for (std::size_t i = 0; i < weights.size(); ++i) w.summands.push_back({"W" + std::to_string(i), 1, weights[i]});
  w.validate();
  Character c;
  for (const auto& x : chi) c.push_back(parse_rational(x));
  SemistabilityResult r = is_semistable(w, c, support);
  return py::make_tuple(r.semistable, r.stable);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact wall and chamber computations";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ComputationError>(m, "ComputationError", PyExc_ArithmeticError);

  m.def("report_json", &run_json, py::arg("command"), py::arg("scenario"), py::arg("threads") = 1,
        py::arg("require_star") = false, py::arg("verify") = false, py::arg("l") = std::nullopt);
  m.def("report_text", &run_text, py::arg("command"), py::arg("scenario"));
  m.def("chi", &chi_of, py::arg("variety"), py::arg("cls"));
  m.def("isolate_roots", &roots_of, py::arg("coeffs"), py::arg("lo"), py::arg("hi"));
  m.def("is_semistable", &semistable, py::arg("weights"), py::arg("chi"), py::arg("support"));
  m.def("data_dir", [] { return bundled_data_dir().string(); });
}
