#include "stabwalls/report.hpp"

#include <algorithm>
#include <sstream>

#include "stabwalls/errors.hpp"

namespace stabwalls {

namespace {

std::string verdict_key(Verdict v) {
  switch (v) {
    case Verdict::stable:
      return "stable";
    case Verdict::properly_semistable:
      return "properly_semistable";
    case Verdict::unstable:
      return "unstable";
    case Verdict::no_witness:
      break;
  }
  return "no_witness";
}

std::string sign_char(int s) { return s > 0 ? "+" : s < 0 ? "-" : "0"; }

// Fixed-width text table.
class Table {
 public:
  explicit Table(std::vector<std::string> head) { rows_.push_back(std::move(head)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
    }
    std::ostringstream out;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& r = rows_[k];
      out << "  ";
      for (std::size_t i = 0; i < r.size(); ++i) {
        out << r[i];
        if (i + 1 < r.size()) out << std::string(width[i] - display_width(r[i]) + 2, ' ');
      }
      out << "\n";
    }
    return out.str();
  }

 private:
  // Counts UTF-8 code points, good enough for the glyphs used here.
  static std::size_t display_width(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  }
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_row(const Rational& param, const std::string& id, int index, const Rational& value) {
  return to_decimal(param, kCsvDigits) + "," + id + "," + std::to_string(index) + "," + to_decimal(value, kCsvDigits) + "\n";
}

const std::string kCsvHeader = "param,candidate_id,coeff_index,value\n";

Json poly_json(const UniPoly& p, const char* var) {
  Json j;
  j["coefficients"] = to_json(p);
  j["text"] = p.to_string(var);
  return j;
}

Json segment_json(const Segment& s) {
  Json j;
  j["h0"] = to_json(s.h0);
  j["h1"] = to_json(s.h1);
  return j;
}

Json sheaf_json(const VarietyData& v, const SheafNumerics& e) {
  Json j;
  j["label"] = e.label;
  j["rank"] = to_json(e.rank);
  j["c1"] = to_json(c1_of(v, e));
  return j;
}

std::string support_label(const TorusWeights& w, const Support& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += w.summands[static_cast<std::size_t>(s[i])].label;
  }
  return out + "}";
}

Json supports_json(const TorusWeights& w, const std::vector<Support>& ss) {
  Json out = Json::array();
  for (const auto& s : ss) {
    Json labels = Json::array();
    for (int i : s) labels.push_back(w.summands[static_cast<std::size_t>(i)].label);
    out.push_back(labels);
  }
  return out;
}

std::string supports_text(const TorusWeights& w, const std::vector<Support>& ss) {
  if (ss.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < ss.size(); ++i) out += (i ? " " : "") + support_label(w, ss[i]);
  return out;
}

Json character_json(const Character& c) { return to_json(NumClass(c)); }

std::string character_text(const Character& c) { return NumClass(c).to_string(); }

Json star_json(const StarReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["slope_vanishes"] = r.slope_vanishes;
  j["sub_discriminant"] = poly_json(r.sub_discriminant, "λ");
  j["sub_discriminant_sign"] = r.sub_discriminant_sign;
  j["quotient_discriminant"] = poly_json(r.quotient_discriminant, "λ");
  j["quotient_discriminant_sign"] = r.quotient_discriminant_sign;
  return j;
}

const Candidate& find_candidate(const std::vector<Candidate>& cs, const std::string& id) {
  for (const auto& c : cs) {
    if (c.id == id) return c;
  }
  throw ComputationError("unknown candidate " + id);
}

Json wall_json(const VarietyData& v, const Segment& s, const SheafNumerics& e, const std::vector<Candidate>& cs,
               const Wall& w) {
  Json j;
  j["position"] = to_json(w.position);
  j["kind"] = to_string(w.kind);
  j["rational"] = w.position.is_rational;
  j["sign_change"] = w.sign_change;
  j["defining_index"] = w.defining_index;
  j["witnesses"] = w.witnesses;
  Json details = Json::array();
  for (const auto& d : w.details) {
    Json x;
    x["id"] = d.id;
    x["kind"] = to_string(d.kind);
    x["defining_index"] = d.defining_index;
    x["sign_change"] = d.sign_change;
    x["polynomial"] = poly_json(d.polynomial, "λ");
    x["scale"] = to_json(d.scale);
    try {
      x["star"] = star_json(check_star(v, s, find_candidate(cs, d.id).data, e, w.position));
    } catch (const ComputationError&) {
      x["star"] = nullptr;
    }
    details.push_back(x);
  }
  j["details"] = details;
  return j;
}

Json verdicts_json(const std::vector<CandidateVerdict>& cv) {
  Json out = Json::array();
  for (const auto& c : cv) {
    Json x;
    x["id"] = c.id;
    x["sign"] = c.profile.sign;
    x["index"] = c.profile.index;
    x["slope_sign"] = c.slope_sign;
    out.push_back(x);
  }
  return out;
}

std::string verdicts_text(const std::vector<CandidateVerdict>& cv) {
  if (cv.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < cv.size(); ++i) out += (i ? " " : "") + cv[i].id + ":" + sign_char(cv[i].profile.sign);
  return out;
}

std::string end_text(const ChamberEnd& e) {
  return e.value.is_rational ? to_string(*e.value.rational_value) : "~" + e.value.decimal(kPreviewDigits);
}

TwistSetup make_setup(const Scenario& sc, long l) { return TwistSetup::from_segment(sc.need_variety(), sc.need_segment(), l); }

Json setup_json(const TwistSetup& t) {
  Json j;
  j["center"] = to_json(t.center);
  j["direction"] = to_json(t.direction);
  j["scale"] = to_json(t.scale);
  return j;
}

std::string header(const std::string& title, const Scenario& sc) {
  std::string out = title + ": " + sc.name + "\n";
  if (sc.variety) out += "variety " + sc.variety->name + "\n";
  if (sc.segment) out += "segment " + sc.segment->h0.to_string() + " -> " + sc.segment->h1.to_string() + "\n";
  if (sc.sheaf) out += "sheaf " + sc.sheaf->label + ", rank " + to_string(sc.sheaf->rank) + "\n";
  return out;
}

}  // namespace

Json to_json(const AlgebraicReal& r) {
  Json j;
  j["rational"] = r.is_rational;
  if (r.is_rational) {
    j["value"] = to_json(*r.rational_value);
    return j;
  }
  AlgebraicReal fine = refine(r, pow10_inv(kPreviewDigits));
  j["polynomial"] = poly_json(fine.defining_poly, "λ");
  j["interval"] = Json::array({to_json(fine.lo), to_json(fine.hi)});
  if (r.closed_form) j["closed_form"] = *r.closed_form;
  return j;
}

std::string describe(const AlgebraicReal& r) {
  if (r.is_rational) return to_string(*r.rational_value);
  std::string head = r.closed_form ? *r.closed_form : "root of " + r.defining_poly.to_string() + " in [" +
                                                         to_string(r.lo) + ", " + to_string(r.hi) + "]";
  return head + " ≈ " + r.decimal(kPreviewDigits) + " (approx.)";
}

Report walls_report(const Scenario& sc, const ReportOptions& opt) {
  const VarietyData& v = sc.need_variety();
  const Segment& s = sc.need_segment();
  const SheafNumerics& e = sc.need_sheaf();
  WallOptions wo;
  wo.require_star = opt.require_star || sc.require_star;
  wo.threads = opt.threads;
  ChamberReport cr = chambers(v, s, e, sc.candidates, wo);

  Report rep;
  Json& j = rep.data;
  j["command"] = "walls";
  j["scenario"] = sc.name;
  j["banner"] = cr.banner;
  j["variety"] = v.name;
  j["segment"] = segment_json(s);
  j["sheaf"] = sheaf_json(v, e);
  j["require_star"] = wo.require_star;
  Json warnings = Json::array();
  if (sc.candidates.empty()) warnings.push_back("empty candidate list: one chamber, no comparison was made");
  Json cands = Json::array();
  for (const auto& c : sc.candidates) {
    Json x = sheaf_json(v, c.data);
    x["id"] = c.id;
    x["xi"] = to_json(xi(v, c.data, e));
    cands.push_back(x);
  }
  j["candidates"] = cands;
  Json walls = Json::array();
  for (const auto& w : cr.walls.walls) walls.push_back(wall_json(v, s, e, sc.candidates, w));
  j["walls"] = walls;
  j["everywhere_semistable"] = cr.walls.everywhere_semistable;
  Json pruned = Json::array();
  for (const auto& w : cr.walls.pruned) pruned.push_back(wall_json(v, s, e, sc.candidates, w));
  j["pruned"] = pruned;
  Json chs = Json::array();
  for (const auto& c : cr.chambers) {
    Json x;
    x["lo"] = {{"position", to_json(c.lo.value)}, {"is_wall", c.lo.is_wall}};
    x["hi"] = {{"position", to_json(c.hi.value)}, {"is_wall", c.hi.is_wall}};
    x["sample"] = to_json(c.sample);
    x["candidates"] = verdicts_json(c.candidates);
    x["gieseker"] = verdict_key(c.gieseker);
    x["slope"] = verdict_key(c.slope);
    chs.push_back(x);
  }
  j["chambers"] = chs;
  Json at = Json::array();
  for (const auto& p : cr.at_walls) {
    Json x;
    x["wall"] = p.wall_index;
    x["candidates"] = verdicts_json(p.candidates);
    x["gieseker"] = verdict_key(p.gieseker);
    x["slope"] = verdict_key(p.slope);
    at.push_back(x);
  }
  j["at_walls"] = at;
  j["warnings"] = warnings;

  std::string t = header("walls", sc);
  t += "note: " + cr.banner + "\n";
  for (const auto& w : warnings) t += "warning: " + w.get<std::string>() + "\n";
  t += "\n" + std::to_string(cr.walls.walls.size()) + " wall(s)\n";
  if (!cr.walls.walls.empty()) {
    Table tab({"#", "position", "kind", "rational", "witnesses", "polynomial"});
    for (std::size_t i = 0; i < cr.walls.walls.size(); ++i) {
      const Wall& w = cr.walls.walls[i];
      std::string ids;
      for (const auto& id : w.witnesses) ids += (ids.empty() ? "" : ",") + id;
      tab.add({std::to_string(i), describe(w.position), to_string(w.kind), w.position.is_rational ? "yes" : "no", ids,
               w.position.defining_poly.to_string()});
    }
    t += tab.render();
  }
  if (!cr.walls.pruned.empty()) t += std::to_string(cr.walls.pruned.size()) + " wall(s) pruned by the (*) filter\n";
  if (!cr.walls.everywhere_semistable.empty()) {
    t += "identically equal reduced polynomials:";
    for (const auto& id : cr.walls.everywhere_semistable) t += " " + id;
    t += "\n";
  }
  t += "\nchambers\n";
  Table ct({"lo", "hi", "sample", "gieseker", "slope", "signs"});
  for (const auto& c : cr.chambers) {
    ct.add({end_text(c.lo), end_text(c.hi), to_string(c.sample), to_string(c.gieseker), to_string(c.slope),
            verdicts_text(c.candidates)});
  }
  t += ct.render();
  if (!cr.at_walls.empty()) {
    t += "\nat the walls\n";
    Table wt({"wall", "gieseker", "slope", "signs"});
    for (const auto& p : cr.at_walls) {
      wt.add({std::to_string(p.wall_index), to_string(p.gieseker), to_string(p.slope), verdicts_text(p.candidates)});
    }
    t += wt.render();
  }
  rep.text = t;

  if (opt.plot) {
    rep.csv = kCsvHeader;
    for (const auto& c : sc.candidates) {
      std::vector<UniPoly> q = profile_polynomials(v, s, c.data, e);
      for (int i = 0; i <= 100; ++i) {
        Rational lambda(i, 100);
        lambda.canonicalize();
        for (std::size_t k = 0; k < q.size(); ++k) rep.csv += csv_row(lambda, c.id, static_cast<int>(k), q[k](lambda));
      }
    }
  }
  return rep;
}

Report classes_report(const Scenario& sc, const ReportOptions&) {
  const VarietyData& v = sc.need_variety();
  const Segment& s = sc.need_segment();
  const SheafNumerics& e = sc.need_sheaf();
  WallClassSearch ws = wall_class_search(v, s, e);
  W1Bound b = w1_bound(v, s, e);

  Report rep;
  Json& j = rep.data;
  j["command"] = "classes";
  j["scenario"] = sc.name;
  j["variety"] = v.name;
  j["segment"] = segment_json(s);
  j["sheaf"] = sheaf_json(v, e);
  j["bound"] = {{"h", to_json(b.h)}, {"l", to_json(b.l)}, {"k1", to_json(b.k1)}, {"k2", to_json(b.k2)},
                {"n_bound", to_json(b.n_bound)}, {"exact", b.exact}};
  Json deg = Json::array();
  for (const auto& p : ws.degenerate_points) deg.push_back(to_json(p));
  j["degenerate_points"] = deg;
  j["box"] = Json::array({ws.box0, ws.box1});
  Json classes = Json::array();
  Table tab({"class", "walls"});
  for (const auto& c : ws.classes) {
    Json x;
    x["class"] = to_json(c);
    Json pos = Json::array();
    std::string ptext;
    UniPoly form = segment_form(v, s, c, v.dim - 1);
    if (!form.is_zero()) {
      for (const auto& r : isolate_roots(form, Rational(0), Rational(1))) {
        pos.push_back(to_json(r));
        ptext += (ptext.empty() ? "" : "; ") + describe(r);
      }
    }
    x["walls"] = pos;
    classes.push_back(x);
    tab.add({c.to_string(), ptext});
  }
  j["classes"] = classes;
  Json cands = Json::array();
  for (const auto& c : sc.candidates) {
    NumClass x = xi(v, c.data, e);
    bool listed = std::find(ws.classes.begin(), ws.classes.end(), x) != ws.classes.end();
    cands.push_back({{"id", c.id}, {"xi", to_json(x)}, {"listed", listed}});
  }
  j["candidates"] = cands;

  std::string t = header("wall classes", sc);
  t += "bound N = " + to_string(b.n_bound) + (b.exact ? "" : " (safe rational bound)") + "\n";
  if (!ws.degenerate_points.empty()) {
    t += "excluded degenerate points:";
    for (const auto& p : ws.degenerate_points) t += " " + to_string(p);
    t += "\n";
  }
  t += std::to_string(ws.classes.size()) + " class(es)\n" + tab.render();
  for (const auto& c : cands) {
    t += "candidate " + c["id"].get<std::string>() + ": xi " + xi(v, find_candidate(sc.candidates, c["id"]).data, e).to_string() +
         (c["listed"].get<bool>() ? "" : " (not in the list)") + "\n";
  }
  rep.text = t;
  return rep;
}

Report l0_report(const Scenario& sc, const ReportOptions& opt) {
  const VarietyData& v = sc.need_variety();
  const Segment& s = sc.need_segment();
  const SheafNumerics& e = sc.need_sheaf();
  TwistSetup setup = make_setup(sc, 1);
  L0Result r = find_l0(setup, e, sc.candidates);
  std::vector<CandidateVerdict> at1 = verdicts_at(v, s, e, sc.candidates, Rational(1));
  std::vector<CandidateVerdict> at0 = verdicts_at(v, s, e, sc.candidates, Rational(0));

  Report rep;
  Json& j = rep.data;
  j["command"] = "l0";
  j["scenario"] = sc.name;
  j["variety"] = v.name;
  j["segment"] = segment_json(s);
  j["setup"] = setup_json(setup);
  j["l0"] = r.l0;
  j["certified"] = r.certified;
  Json certs = Json::array();
  Table tab({"candidate", "H1", "H0", "twist +l", "twist -l", "signs l0..l0+5"});
  for (const auto& c : r.certificates) {
    Json x;
    x["id"] = c.id;
    Json coeffs = Json::array();
    for (const auto& p : c.coefficients) coeffs.push_back(poly_json(p, "l"));
    x["coefficients"] = coeffs;
    Json bounds = Json::array();
    for (const auto& b : c.root_bounds) bounds.push_back(to_json(b));
    x["root_bounds"] = bounds;
    x["sign_h1"] = c.sign_h1;
    x["sign_h0"] = c.sign_h0;
    x["sign_twisted_up"] = c.sign_twisted_up;
    x["sign_twisted_down"] = c.sign_twisted_down;
    Json run = Json::array();
    std::string rtext;
    for (long l = r.l0; l <= r.l0 + 5; ++l) {
      int sg = lex_sign(delta_vector(c, Rational(l)));
      run.push_back(sg);
      rtext += sign_char(sg);
    }
    x["signs_from_l0"] = run;
    certs.push_back(x);
    tab.add({c.id, sign_char(c.sign_h1), sign_char(c.sign_h0), sign_char(c.sign_twisted_up), sign_char(c.sign_twisted_down),
             rtext});
  }
  j["certificates"] = certs;
  j["h1"] = verdicts_json(at1);
  j["h0"] = verdicts_json(at0);

  std::string t = header("twist threshold", sc);
  t += "A = " + setup.center.to_string() + ", D = " + setup.direction.to_string() + ", H1 = A + " + to_string(setup.scale) +
       " D\n";
  t += "l0 = " + std::to_string(r.l0) + " (root bounds certify every l >= " + std::to_string(r.certified) + ")\n";
  t += "lexicographic signs, E minus F\n" + tab.render();
  for (const auto& c : r.certificates) {
    t += c.id + ":\n";
    for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
      t += "  delta_" + std::to_string(i + 1) + "(l) = " + c.coefficients[i].to_string("l") + "\n";
    }
  }
  rep.text = t;

  if (opt.plot) {
    rep.csv = kCsvHeader;
    for (const auto& c : r.certificates) {
      for (long l = 1; l <= r.certified + 5; ++l) {
        for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
          rep.csv += csv_row(Rational(l), c.id, static_cast<int>(i + 1), c.coefficients[i](Rational(l)));
        }
      }
    }
  }
  return rep;
}

Report beta_report(const Scenario& sc, const ReportOptions& opt) {
  const VarietyData& v = sc.need_variety();
  const Segment& s = sc.need_segment();
  const SheafNumerics& e = sc.need_sheaf();

  Json warnings = Json::array();
  std::optional<long> l0;
  if (!sc.candidates.empty()) {
    try {
      l0 = find_l0(make_setup(sc, 1), e, sc.candidates).l0;
    } catch (const ComputationError& err) {
      warnings.push_back(std::string("no l0: ") + err.what());
    }
  }
  long l = 1;
  std::string l_source = "default";
  if (opt.l) {
    l = *opt.l;
    l_source = "override";
  } else if (sc.l) {
    l = *sc.l;
    l_source = "scenario";
  } else if (l0) {
    l = *l0;
    l_source = "l0";
  }
  if (l0 && l < *l0) warnings.push_back("l = " + std::to_string(l) + " is below l0 = " + std::to_string(*l0));
  TwistSetup setup = make_setup(sc, l);
  BetaWalls bw = beta_walls(setup, e, sc.candidates);

  Report rep;
  Json& j = rep.data;
  j["command"] = "beta";
  j["scenario"] = sc.name;
  j["variety"] = v.name;
  j["segment"] = segment_json(s);
  j["setup"] = setup_json(setup);
  j["l"] = l;
  j["l_source"] = l_source;
  j["l0"] = l0 ? Json(*l0) : Json(nullptr);
  Json walls = Json::array();
  for (const auto& w : bw.walls) walls.push_back({{"beta", to_json(w.beta)}, {"witnesses", w.witnesses}});
  j["walls"] = walls;
  Json chs = Json::array();
  bool identity = true;
  Table ct({"lo", "hi", "sample", "verdict", "signs"});
  for (const auto& c : bw.chambers) {
    Json x;
    x["lo"] = to_json(c.lo);
    x["hi"] = to_json(c.hi);
    x["sample"] = to_json(c.sample);
    Json signs = Json::array();
    std::string stext;
    for (std::size_t i = 0; i < c.signs.size(); ++i) {
      signs.push_back({{"id", sc.candidates[i].id}, {"sign", c.signs[i]}});
      stext += (i ? " " : "") + sc.candidates[i].id + ":" + sign_char(c.signs[i]);
    }
    x["signs"] = signs;
    x["verdict"] = verdict_key(c.verdict);
    chs.push_back(x);
    auto [bp, pp] = beta_parabolic_identity(setup, e, c.sample);
    identity = identity && bp == pp;
    ct.add({to_string(c.lo), to_string(c.hi), to_string(c.sample), to_string(c.verdict), stext.empty() ? "-" : stext});
  }
  j["chambers"] = chs;
  j["identical"] = bw.identical;
  j["parabolic_identity"] = identity;

  std::vector<int> beta1 = beta_signs(setup, e, sc.candidates, Rational(1));
  std::vector<CandidateVerdict> h1 = verdicts_at(v, s, e, sc.candidates, Rational(1));
  Json ends = Json::array();
  for (std::size_t i = 0; i < sc.candidates.size(); ++i) {
    ends.push_back({{"id", sc.candidates[i].id}, {"beta1", beta1[i]}, {"h1", h1[i].profile.sign},
                    {"agree", beta1[i] == h1[i].profile.sign}});
  }
  j["endpoint"] = ends;
  j["warnings"] = warnings;

  std::string t = header("beta walls", sc);
  t += "l = " + std::to_string(l) + " (" + l_source + ")" + (l0 ? ", l0 = " + std::to_string(*l0) : "") + "\n";
  for (const auto& w : warnings) t += "warning: " + w.get<std::string>() + "\n";
  t += std::to_string(bw.walls.size()) + " beta wall(s)";
  for (const auto& w : bw.walls) {
    std::string ids;
    for (const auto& id : w.witnesses) ids += (ids.empty() ? "" : ",") + id;
    t += "\n  beta = " + to_string(w.beta) + "  [" + ids + "]";
  }
  t += "\n" + ct.render();
  t += std::string("parabolic identity at chamber samples: ") + (identity ? "holds" : "FAILS") + "\n";
  for (const auto& x : ends) {
    t += "beta = 1 vs H1 for " + x["id"].get<std::string>() + ": " + sign_char(x["beta1"].get<int>()) + " / " +
         sign_char(x["h1"].get<int>()) + "\n";
  }
  rep.text = t;

  if (opt.plot) {
    rep.csv = kCsvHeader;
    for (int i = 0; i <= 100; ++i) {
      Rational beta(i, 100);
      beta.canonicalize();
      UniPoly pe = beta_poly(setup, e, beta) * Rational(1 / e.rank);
      for (const auto& c : sc.candidates) {
        UniPoly d = beta_poly(setup, c.data, beta) * Rational(1 / c.data.rank) - pe;
        for (int k = 0; k <= v.dim; ++k) rep.csv += csv_row(beta, c.id, k, d.coeff(v.dim - k));
      }
    }
  }
  return rep;
}

Report parabolic_report(const Scenario& sc, const ReportOptions&) {
  if (!sc.parabolic) throw InputError("scenario " + sc.name + " has no parabolic section");
  const VarietyData& v = sc.need_variety();
  const ParabolicSection& p = *sc.parabolic;
  UniPoly hp = parabolic_hilbert(v, p.full, p.weights, p.center);

  Report rep;
  Json& j = rep.data;
  j["command"] = "parabolic";
  j["scenario"] = sc.name;
  j["variety"] = v.name;
  Json ws = Json::array();
  for (const auto& a : p.weights.alphas) ws.push_back(to_json(a));
  j["weights"] = ws;
  Json gaps = Json::array();
  for (const auto& g : p.weights.gaps()) gaps.push_back(to_json(g));
  j["gaps"] = gaps;
  j["center"] = to_json(p.center);
  j["hilbert"] = poly_json(hp, "m");
  Json cands = Json::array();
  std::vector<int> orders;
  Table tab({"candidate", "order", "verdict"});
  for (const auto& c : p.candidates) {
    ParabolicComparison cmp = parabolic_compare(v, c.data, p.full, p.weights, p.center);
    orders.push_back(cmp.order);
    cands.push_back({{"id", c.id},
                     {"hilbert", poly_json(parabolic_hilbert(v, c.data, p.weights, p.center), "m")},
                     {"order", cmp.order},
                     {"verdict", verdict_key(cmp.verdict)}});
    tab.add({c.id, sign_char(cmp.order), to_string(cmp.verdict)});
  }
  j["candidates"] = cands;
  Verdict overall = overall_verdict(orders);
  j["verdict"] = verdict_key(overall);
  WeightWalls ww = weight_walls(v, p.full, p.candidates, p.weights.k(), p.center);
  Json walls = Json::array();
  for (const auto& w : ww.walls) {
    Json g = Json::array();
    for (const auto& x : w.gradient) g.push_back(to_json(x));
    walls.push_back({{"id", w.id}, {"coefficient", w.coefficient}, {"constant", to_json(w.constant)}, {"gradient", g}});
  }
  j["weight_walls"] = walls;
  j["weight_independent"] = ww.weight_independent;

  std::string t = header("parabolic", sc);
  t += "weights";
  for (const auto& a : p.weights.alphas) t += " " + to_string(a);
  t += ", center " + p.center.to_string() + "\n";
  t += "P^alpha(E)(m) = " + hp.to_string("m") + "\n";
  t += tab.render();
  t += "verdict: " + to_string(overall) + "\n";
  t += std::to_string(ww.walls.size()) + " weight wall(s)\n";
  for (const auto& w : ww.walls) {
    std::string eq = to_string(w.constant);
    for (std::size_t i = 0; i < w.gradient.size(); ++i) {
      eq += " + (" + to_string(w.gradient[i]) + ") a" + std::to_string(i);
    }
    t += "  " + w.id + ": " + eq + " = 0 (coefficient " + std::to_string(w.coefficient) + ")\n";
  }
  rep.text = t;
  return rep;
}

Report vgit_report(const Scenario& sc, const ReportOptions& opt) {
  if (!sc.vgit) throw InputError("scenario " + sc.name + " has no vgit section");
  const VgitSection& g = *sc.vgit;
  const TorusWeights& w = g.weights;
  VgitArrangement arr = vgit_chambers(w, opt.threads);

  Report rep;
  Json& j = rep.data;
  j["command"] = "vgit";
  j["scenario"] = sc.name;
  j["torus_rank"] = w.rank;
  Json sums = Json::array();
  for (const auto& s : w.summands) sums.push_back({{"label", s.label}, {"dim", s.dim}, {"weight", s.weight}});
  j["summands"] = sums;
  Json walls = Json::array();
  for (const auto& c : arr.walls) walls.push_back({{"normal", character_json(c.normal)}, {"offset", to_json(c.offset)}});
  j["walls"] = walls;
  Json chs = Json::array();
  Table tab({"dim", "sample", "quotient", "minimal", "semistable"});
  for (const auto& c : arr.chambers) {
    chs.push_back({{"dimension", c.dimension},
                   {"sample", character_json(c.sample)},
                   {"quotient", c.quotient},
                   {"minimal", supports_json(w, c.minimal)},
                   {"semistable", supports_json(w, c.semistable)}});
    tab.add({std::to_string(c.dimension), character_text(c.sample), c.quotient, supports_text(w, c.minimal),
             supports_text(w, c.semistable)});
  }
  j["chambers"] = chs;
  Json paths = Json::array();
  std::string ptext;
  for (const auto& p : g.paths) {
    std::vector<Flip> fs = flip_sequence(w, p.from, p.to);
    Json flips = Json::array();
    ptext += "path " + character_text(p.from) + " -> " + character_text(p.to) + ": " + std::to_string(fs.size()) + " flip(s)\n";
    for (const auto& f : fs) {
      flips.push_back({{"position", to_json(f.position)},
                       {"character", character_json(f.character)},
                       {"gained", supports_json(w, f.gained)},
                       {"lost", supports_json(w, f.lost)}});
      ptext += "  at t = " + to_string(f.position) + ", chi = " + character_text(f.character) + ": gains " +
               supports_text(w, f.gained) + ", loses " + supports_text(w, f.lost) + "\n";
    }
    paths.push_back({{"from", character_json(p.from)}, {"to", character_json(p.to)}, {"flips", flips}});
  }
  j["paths"] = paths;
  Json probes = Json::array();
  std::string qtext;
  for (const auto& chi : g.probes) {
    std::vector<Support> ss = semistable_supports(w, chi);
    Json stable = Json::array();
    for (const auto& s : ss) {
      if (is_semistable(w, chi, s).stable) stable.push_back(supports_json(w, {s})[0]);
    }
    probes.push_back({{"character", character_json(chi)}, {"semistable", supports_json(w, ss)}, {"stable", stable}});
    qtext += "chi = " + character_text(chi) + ": semistable " + supports_text(w, ss) + "\n";
  }
  j["probes"] = probes;

  std::string t = "vgit: " + sc.name + "\ntorus rank " + std::to_string(w.rank) + ", summands";
  for (const auto& s : w.summands) t += " " + s.label + character_text(Character(s.weight.begin(), s.weight.end()));
  t += "\n" + std::to_string(arr.walls.size()) + " wall(s), " + std::to_string(arr.chambers.size()) +
       " chamber(s) with a nonempty quotient\n";
  t += tab.render() + ptext + qtext;
  rep.text = t;
  return rep;
}

Report chi_report(const VarietyData& v, const std::vector<NumClass>& classes, const ReportOptions& opt) {
  if (classes.empty()) throw InputError("chi: no classes given");
  Report rep;
  Json& j = rep.data;
  j["command"] = "chi";
  j["variety"] = v.name;
  Json out = Json::array();
  std::string t = "chi on " + v.name + "\n";
  bool all_ok = true;
  for (const auto& c : classes) {
    if (c.size() != v.picard_rank) throw InputError("class " + c.to_string() + " has the wrong length");
    SheafNumerics l = line_bundle_form(v, c);
    Rational chi = l.chi(NumClass::zero(v.picard_rank));
    Json x;
    x["class"] = to_json(c);
    x["chi"] = to_json(chi);
    t += "  chi(O" + c.to_string() + ") = " + to_string(chi) + "\n";
    if (opt.verify) {
      // chi is additive on direct sums and on extensions, at every twist.
      SheafNumerics o = line_bundle_form(v, NumClass::zero(v.picard_rank));
      SheafNumerics sum = direct_sum(l, o);
      SheafNumerics ext = extension_middle(o, l);
      bool ok = true;
      for (int i = 0; i < v.picard_rank; ++i) {
        for (int k = -2; k <= 2; ++k) {
          NumClass d = Rational(k) * NumClass::basis(v.picard_rank, i);
          Rational expect = l.chi(d) + o.chi(d);
          ok = ok && sum.chi(d) == expect && ext.chi(d) == expect && line_bundle_form(v, c + d).chi(NumClass::zero(v.picard_rank)) == l.chi(d);
        }
      }
      x["additivity"] = ok;
      all_ok = all_ok && ok;
      t += std::string("    additivity check: ") + (ok ? "ok" : "FAILED") + "\n";
    }
    out.push_back(x);
  }
  j["values"] = out;
  if (opt.verify && !all_ok) throw ComputationError("additivity spot-check failed");
  rep.text = t;
  return rep;
}

Report run_report(const std::string& command, const Scenario& sc, const ReportOptions& opt) {
  if (opt.plot && command != "walls" && command != "beta" && command != "l0") {
    throw InputError("plot data is available for walls, l0 and beta only");
  }
  if (command == "walls") return walls_report(sc, opt);
  if (command == "classes") return classes_report(sc, opt);
  if (command == "l0") return l0_report(sc, opt);
  if (command == "beta") return beta_report(sc, opt);
  if (command == "parabolic") return parabolic_report(sc, opt);
  if (command == "vgit") return vgit_report(sc, opt);
  throw InputError("unknown command " + command);
}

}  // namespace stabwalls
