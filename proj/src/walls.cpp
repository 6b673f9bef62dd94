#include "stabwalls/walls.hpp"

#include <algorithm>
#include <map>

#include "stabwalls/errors.hpp"
#include "stabwalls/parallel.hpp"

namespace stabwalls {

std::string to_string(WallKind k) { return k == WallKind::slope ? "slope" : "gieseker"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::stable:
      return "stable";
    case Verdict::properly_semistable:
      return "properly semistable";
    case Verdict::unstable:
      return "unstable";
    case Verdict::no_witness:
      break;
  }
  return "no witness";
}

NumClass xi(const VarietyData& v, const SheafNumerics& f, const SheafNumerics& e) {
  if (f.rank == 0 || e.rank == 0) throw ComputationError("xi needs nonzero ranks");
  return c1_of(v, f) * Rational(1 / f.rank) - c1_of(v, e) * Rational(1 / e.rank);
}

void validate_segment(const VarietyData& v, const Segment& s) {
  if (s.h0.size() != v.picard_rank || s.h1.size() != v.picard_rank) throw InputError("segment endpoints have the wrong length");
  if (s.h0 == s.h1) throw InputError("degenerate segment: h0 equals h1");
}

void validate_candidates(const SheafNumerics& e, const std::vector<Candidate>& candidates) {
  if (e.rank <= 0) throw InputError("sheaf rank must be positive");
  std::map<std::string, int> seen;
  for (const auto& c : candidates) {
    if (c.id.empty()) throw InputError("candidate without id");
    if (seen[c.id]++) throw InputError("duplicate candidate id " + c.id);
    if (!(c.data.rank > 0 && c.data.rank < e.rank)) {
      throw InputError("candidate " + c.id + ": rank " + to_string(c.data.rank) + " not in (0, " + to_string(e.rank) + ")");
    }
  }
}

BiPoly reduced_difference(const VarietyData& v, const Segment& s, const SheafNumerics& f, const SheafNumerics& e) {
  if (f.rank == 0 || e.rank == 0) throw ComputationError("reduced difference needs nonzero ranks");
  const int n = v.dim;
  std::vector<Rational> ts;
  std::vector<UniPoly> diffs;
  for (int k = 0; k <= n; ++k) {
    Rational t(k, n);
    t.canonicalize();
    NumClass h = s.at(t);
    ts.push_back(t);
    diffs.push_back(hilbert_polynomial(e, h) * Rational(1 / e.rank) - hilbert_polynomial(f, h) * Rational(1 / f.rank));
  }
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i <= n; ++i) {
    std::vector<Rational> ys;
    for (const auto& d : diffs) ys.push_back(d.coeff(i));
    rows.push_back(interpolate(ts, ys).coeffs());
  }
  return BiPoly(std::move(rows));
}

std::vector<UniPoly> profile_polynomials(const VarietyData& v, const Segment& s, const SheafNumerics& f,
                                         const SheafNumerics& e) {
  BiPoly d = reduced_difference(v, s, f, e);
  std::vector<UniPoly> q;
  for (int k = 0; k <= v.dim; ++k) q.push_back(-d.m_coeff(v.dim - k));
  return q;
}

Profile lex_profile(const std::vector<Rational>& coeffs) {
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) return {sign(coeffs[k]), static_cast<int>(k) + 1};
  }
  return {0, 0};
}

Verdict overall_verdict(const std::vector<int>& signs) {
  if (signs.empty()) return Verdict::no_witness;
  if (std::any_of(signs.begin(), signs.end(), [](int s) { return s > 0; })) return Verdict::unstable;
  if (std::any_of(signs.begin(), signs.end(), [](int s) { return s == 0; })) return Verdict::properly_semistable;
  return Verdict::stable;
}

namespace {

struct CandidateWalls {
  std::vector<UniPoly> q;
  int first = 0;
  std::vector<std::pair<AlgebraicReal, WallWitness>> roots;
};

CandidateWalls analyze_candidate(const VarietyData& v, const Segment& s, const SheafNumerics& e, const Candidate& c) {
  CandidateWalls out;
  out.q = profile_polynomials(v, s, c.data, e);
  for (int k = 1; k <= v.dim; ++k) {
    if (!out.q[static_cast<std::size_t>(k)].is_zero()) {
      out.first = k;
      break;
    }
  }
  if (out.first == 0) return out;
  const UniPoly& p = out.q[static_cast<std::size_t>(out.first)];
  for (auto& root : isolate_roots(p, Rational(0), Rational(1))) {
    WallWitness w;
    w.id = c.id;
    w.kind = out.first == 1 ? WallKind::slope : WallKind::gieseker;
    w.defining_index = out.first;
    w.sign_change = multiplicity(p, root) % 2 == 1;
    w.polynomial = p.primitive();
    w.scale = p.primitive_scale();
    out.roots.emplace_back(std::move(root), std::move(w));
  }
  return out;
}

struct Analysis {
  std::vector<CandidateWalls> per_candidate;
  WallSet set;
};

Analysis analyze(const VarietyData& v, const Segment& s, const SheafNumerics& e, const std::vector<Candidate>& candidates,
                 const WallOptions& opt) {
  validate_segment(v, s);
  validate_candidates(e, candidates);
  Analysis a;
  a.per_candidate.resize(candidates.size());
  parallel_for(candidates.size(), opt.threads, [&](std::size_t i) {
    try {
      a.per_candidate[i] = analyze_candidate(v, s, e, candidates[i]);
    } catch (const ComputationError& err) {
      throw ComputationError("candidate " + candidates[i].id + ": " + err.what());
    }
  });

  std::vector<std::pair<AlgebraicReal, WallWitness>> all;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (a.per_candidate[i].first == 0) a.set.everywhere_semistable.push_back(candidates[i].id);
    for (const auto& r : a.per_candidate[i].roots) all.push_back(r);
  }
  std::sort(a.set.everywhere_semistable.begin(), a.set.everywhere_semistable.end());
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    int c = compare(x.first, y.first);
    return c != 0 ? c < 0 : x.second.id < y.second.id;
  });
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    Wall w;
    w.position = all[i].first;
    while (j < all.size() && compare(all[j].first, all[i].first) == 0) {
      if (all[j].first.defining_poly.degree() < w.position.defining_poly.degree()) w.position = all[j].first;
      w.details.push_back(all[j].second);
      ++j;
    }
    std::sort(w.details.begin(), w.details.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    w.sign_change = false;
    w.defining_index = w.details.front().defining_index;
    for (const auto& d : w.details) {
      w.witnesses.push_back(d.id);
      w.sign_change = w.sign_change || d.sign_change;
      w.defining_index = std::min(w.defining_index, d.defining_index);
    }
    w.kind = w.defining_index == 1 ? WallKind::slope : WallKind::gieseker;
    a.set.walls.push_back(std::move(w));
    i = j;
  }

  if (opt.require_star) {
    std::map<std::string, const Candidate*> by_id;
    for (const auto& c : candidates) by_id[c.id] = &c;
    std::vector<Wall> kept;
    for (auto& w : a.set.walls) {
      Wall keep = w, drop = w;
      keep.details.clear();
      drop.details.clear();
      for (const auto& d : w.details) {
        bool ok = check_star(v, s, by_id.at(d.id)->data, e, w.position).holds;
        (ok ? keep : drop).details.push_back(d);
      }
      auto rebuild = [](Wall& x) {
        x.witnesses.clear();
        x.sign_change = false;
        if (x.details.empty()) return;
        x.defining_index = x.details.front().defining_index;
        for (const auto& d : x.details) {
          x.witnesses.push_back(d.id);
          x.sign_change = x.sign_change || d.sign_change;
          x.defining_index = std::min(x.defining_index, d.defining_index);
        }
        x.kind = x.defining_index == 1 ? WallKind::slope : WallKind::gieseker;
      };
      rebuild(keep);
      rebuild(drop);
      if (!keep.details.empty()) kept.push_back(std::move(keep));
      if (!drop.details.empty()) a.set.pruned.push_back(std::move(drop));
    }
    a.set.walls = std::move(kept);
  }
  return a;
}

CandidateVerdict verdict_from_polys(const std::string& id, const std::vector<UniPoly>& q, const Rational& t) {
  std::vector<Rational> vals;
  for (std::size_t k = 1; k < q.size(); ++k) vals.push_back(q[k](t));
  return {id, lex_profile(vals), sign(vals.front())};
}

CandidateVerdict verdict_at_root(const std::string& id, const std::vector<UniPoly>& q, const AlgebraicReal& t) {
  std::vector<Rational> vals;
  for (std::size_t k = 1; k < q.size(); ++k) vals.emplace_back(sign_at(q[k], t));
  return {id, lex_profile(vals), sign(vals.front())};
}

void summarize(const std::vector<CandidateVerdict>& cs, Verdict& gieseker, Verdict& slope) {
  std::vector<int> g, sl;
  for (const auto& c : cs) {
    g.push_back(c.profile.sign);
    sl.push_back(c.slope_sign);
  }
  gieseker = overall_verdict(g);
  slope = overall_verdict(sl);
}

}  // namespace

WallSet wall_positions(const VarietyData& v, const Segment& s, const SheafNumerics& e,
                       const std::vector<Candidate>& candidates, const WallOptions& opt) {
  return analyze(v, s, e, candidates, opt).set;
}

ChamberReport chambers(const VarietyData& v, const Segment& s, const SheafNumerics& e,
                       const std::vector<Candidate>& candidates, const WallOptions& opt) {
  Analysis a = analyze(v, s, e, candidates, opt);
  ChamberReport report;
  report.banner =
      "verdicts are relative to the supplied candidate list; they do not certify semistability against all subsheaves";

  // The full (unpruned) wall structure drives the chamber split.
  WallOptions unpruned = opt;
  unpruned.require_star = false;
  const std::vector<Wall> all_walls = opt.require_star ? analyze(v, s, e, candidates, unpruned).set.walls : a.set.walls;

  std::vector<ChamberEnd> cuts;
  cuts.push_back({AlgebraicReal::from_rational(Rational(0)), false});
  std::vector<AlgebraicReal> avoid;
  for (const auto& w : all_walls) {
    avoid.push_back(w.position);
    if (!w.sign_change) continue;
    int c0 = compare(w.position, Rational(0)), c1 = compare(w.position, Rational(1));
    if (c0 == 0) {
      cuts.front().is_wall = true;
    } else if (c1 == 0) {
      continue;
    } else {
      cuts.push_back({w.position, true});
    }
  }
  ChamberEnd last{AlgebraicReal::from_rational(Rational(1)), false};
  for (const auto& w : all_walls) {
    if (w.sign_change && compare(w.position, Rational(1)) == 0) last.is_wall = true;
  }
  cuts.push_back(last);

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Chamber ch;
    ch.lo = cuts[i];
    ch.hi = cuts[i + 1];
    ch.sample = rationals_between(ch.lo.value, ch.hi.value, 1, avoid).front();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      ch.candidates.push_back(verdict_from_polys(candidates[c].id, a.per_candidate[c].q, ch.sample));
    }
    summarize(ch.candidates, ch.gieseker, ch.slope);
    report.chambers.push_back(std::move(ch));
  }

  for (std::size_t w = 0; w < a.set.walls.size(); ++w) {
    WallPointVerdict pv;
    pv.wall_index = w;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      pv.candidates.push_back(verdict_at_root(candidates[c].id, a.per_candidate[c].q, a.set.walls[w].position));
    }
    summarize(pv.candidates, pv.gieseker, pv.slope);
    report.at_walls.push_back(std::move(pv));
  }
  report.walls = std::move(a.set);
  return report;
}

std::vector<CandidateVerdict> verdicts_at(const VarietyData& v, const Segment& s, const SheafNumerics& e,
                                          const std::vector<Candidate>& candidates, const Rational& t) {
  NumClass h = s.at(t);
  UniPoly pe = hilbert_polynomial(e, h) * Rational(1 / e.rank);
  std::vector<CandidateVerdict> out;
  for (const auto& c : candidates) {
    UniPoly diff = hilbert_polynomial(c.data, h) * Rational(1 / c.data.rank) - pe;
    std::vector<Rational> vals;
    for (int k = v.dim - 1; k >= 0; --k) vals.push_back(diff.coeff(k));
    out.push_back({c.id, lex_profile(vals), sign(vals.front())});
  }
  return out;
}

std::optional<Wall> next_wall(const VarietyData& v, const Segment& s, const SheafNumerics& e,
                              const std::vector<Candidate>& candidates, const Rational& t0, int direction) {
  if (t0 < 0 || t0 > 1) throw InputError("starting point must lie in [0, 1]");
  if (direction != 1 && direction != -1) throw InputError("direction must be +1 or -1");
  WallSet ws = wall_positions(v, s, e, candidates);
  if (direction > 0) {
    for (const auto& w : ws.walls) {
      if (compare(w.position, t0) > 0) return w;
    }
  } else {
    for (auto it = ws.walls.rbegin(); it != ws.walls.rend(); ++it) {
      if (compare(it->position, t0) < 0) return *it;
    }
  }
  return std::nullopt;
}

namespace {

// t -> bogomolov(x, H(t)) as a polynomial of degree <= n - 2.
UniPoly discriminant_along(const VarietyData& v, const Segment& s, const SheafNumerics& x) {
  const int deg = std::max(v.dim - 2, 0);
  std::vector<Rational> ts, vals;
  for (int k = 0; k <= deg; ++k) {
    Rational t(k, std::max(deg, 1));
    t.canonicalize();
    ts.push_back(t);
    vals.push_back(bogomolov(v, x, s.at(t)));
  }
  return interpolate(ts, vals);
}

// t -> sum over the product x . y . H(t)^{n-2} as a polynomial.
UniPoly pairing_along(const VarietyData& v, const Segment& s, const NumClass& x, const NumClass& y) {
  const int deg = std::max(v.dim - 2, 0);
  std::vector<Rational> ts, vals;
  for (int k = 0; k <= deg; ++k) {
    Rational t(k, std::max(deg, 1));
    t.canonicalize();
    std::vector<NumClass> cls{x, y};
    for (int j = 0; j < v.dim - 2; ++j) cls.push_back(s.at(t));
    ts.push_back(t);
    vals.push_back(intersect(v, cls));
  }
  return interpolate(ts, vals);
}

}  // namespace

StarReport check_star(const VarietyData& v, const Segment& s, const SheafNumerics& f, const SheafNumerics& e,
                      const AlgebraicReal& wall) {
  if (f.rank <= 0) throw ComputationError("subsheaf rank not positive");
  SheafNumerics g = formal_difference(e, f);
  if (g.rank <= 0) throw ComputationError("quotient rank not positive");
  StarReport r;
  UniPoly slope = segment_form(v, s, xi(v, f, e), v.dim - 1);
  r.slope_vanishes = sign_at(slope, wall) == 0;
  r.sub_discriminant = discriminant_along(v, s, f);
  r.quotient_discriminant = discriminant_along(v, s, g);
  r.sub_discriminant_sign = sign_at(r.sub_discriminant, wall);
  r.quotient_discriminant_sign = sign_at(r.quotient_discriminant, wall);
  r.holds = r.slope_vanishes && r.sub_discriminant_sign <= 0 && r.quotient_discriminant_sign <= 0;
  return r;
}

namespace {

// Upper bound of p at an irrational critical point, refined until it decides
// against `best` or the iteration budget runs out.
Extremum optimize(const UniPoly& p, const Rational& a, const Rational& b, bool want_max) {
  if (b < a) throw ComputationError("empty optimization interval");
  const int orient = want_max ? 1 : -1;
  UniPoly q = p * Rational(orient);
  Rational best = std::max(q(a), q(b));
  bool exact = true;
  UniPoly d = q.derivative();
  if (!d.is_zero() && a < b) {
    for (auto& root : isolate_roots(d, a, b)) {
      if (root.is_rational) {
        best = std::max(best, q(*root.rational_value));
        continue;
      }
      AlgebraicReal cur = root;
      bool decided = false;
      for (int iter = 0; iter < 60 && !decided; ++iter) {
        auto [lo, hi] = range_bound(q, cur.lo, cur.hi);
        if (hi <= best) {
          decided = true;  // this critical point cannot beat best
        } else if (lo > best && iter >= 40) {
          best = hi;  // beats best; report a tight rational bound
          exact = false;
          decided = true;
        } else {
          cur = refine(cur, Rational((cur.hi - cur.lo) / 4));
        }
      }
      if (!decided) {
        best = std::max(best, range_bound(q, cur.lo, cur.hi).second);
        exact = false;
      }
    }
  }
  return {best * orient, exact};
}

}  // namespace

Extremum maximize(const UniPoly& p, const Rational& a, const Rational& b) { return optimize(p, a, b, true); }
Extremum minimize(const UniPoly& p, const Rational& a, const Rational& b) { return optimize(p, a, b, false); }

W1Bound w1_bound(const VarietyData& v, const Segment& s, const SheafNumerics& e) {
  validate_segment(v, s);
  const Rational& r = e.rank;
  if (r.get_den() != 1 || r < 2) throw ComputationError("the wall-class bound needs an integer rank of at least 2");
  const long rank = r.get_num().get_si();
  W1Bound out;
  out.h = Rational(-1);
  for (long k = 1; k < rank; ++k) {
    Rational val = Rational(k - 1, 2 * k) + Rational(rank - k - 1, 2 * (rank - k));
    val.canonicalize();
    out.h = std::max(out.h, val);
  }
  out.h.canonicalize();
  if (out.h >= 1) throw ComputationError("bound constant h >= 1");
  out.l = Rational(rank - 1, 2 * rank);
  out.l.canonicalize();

  NumClass c1 = c1_of(v, e);
  out.c1sq_poly = pairing_along(v, s, c1, c1);
  const int deg = std::max(v.dim - 2, 0);
  std::vector<Rational> ts, vals;
  for (int k = 0; k <= deg; ++k) {
    Rational t(k, std::max(deg, 1));
    t.canonicalize();
    std::vector<NumClass> hs(static_cast<std::size_t>(v.dim - 2), s.at(t));
    ts.push_back(t);
    vals.push_back(ch2_pairing(v, e, hs));
  }
  out.c2_poly = out.c1sq_poly * Rational(1, 2) - interpolate(ts, vals);
  Extremum k1 = maximize(out.c2_poly, Rational(0), Rational(1));
  Extremum k2 = minimize(out.c1sq_poly, Rational(0), Rational(1));
  out.k1 = k1.value;
  out.k2 = k2.value;
  out.exact = k1.exact && k2.exact;
  out.n_bound = r * r * (out.k1 - out.l * out.k2) / (1 - out.h);
  return out;
}

WallClassSearch wall_class_search(const VarietyData& v, const Segment& s, const SheafNumerics& e) {
  if (v.picard_rank != 2) throw ComputationError("unsupported Picard rank " + std::to_string(v.picard_rank) + " (only 2)");
  validate_segment(v, s);
  W1Bound bound = w1_bound(v, s, e);
  WallClassSearch out;
  out.n_bound = bound.n_bound;
  const Rational& big_n = bound.n_bound;
  const NumClass b0 = NumClass::basis(2, 0), b1 = NumClass::basis(2, 1);
  const int n = v.dim;
  const long fact = factorial(static_cast<int>(e.rank.get_num().get_si())).get_si();
  if (big_n < 0) return out;

  // l_j(t) = B_j . H(t)^{n-1}; the kernel of x -> x . H(t)^{n-1} is spanned by w(t) = (l_1, -l_0).
  UniPoly l0 = segment_form(v, s, b0, n - 1), l1 = segment_form(v, s, b1, n - 1);
  UniPoly p00 = pairing_along(v, s, b0, b0), p01 = pairing_along(v, s, b0, b1), p11 = pairing_along(v, s, b1, b1);
  // q(t) = -(w . w . H^{n-2}) > 0 wherever H(t) is ample
  UniPoly q = -(l1 * l1 * p00 - Rational(2) * (l1 * l0 * p01) + l0 * l0 * p11);
  if (q.is_zero()) throw ComputationError("degenerate segment: slope kernel form vanishes identically");

  // Degenerate points must be rational with a simple zero of q; near each, the
  // transverse coordinate of a lattice class keeps its wall a fixed distance away.
  std::vector<std::pair<Rational, Rational>> excluded;
  for (const auto& root : isolate_roots(q, Rational(0), Rational(1))) {
    if (!root.is_rational) throw ComputationError("degenerate segment: the intersection form degenerates at an irrational point");
    const Rational t0 = *root.rational_value;
    if (multiplicity(q, root) != 1) throw ComputationError("degenerate segment: higher order degeneration at " + to_string(t0));
    Rational d0 = l1(t0), d1 = -l0(t0);
    if (d0 == 0 && d1 == 0) throw ComputationError("degenerate segment: H^{n-1} is numerically trivial at " + to_string(t0));
    out.degenerate_points.push_back(t0);
    // scale the direction to a primitive integer vector
    Integer den = lcm(d0.get_den(), d1.get_den());
    Integer i0 = Integer(d0 * den), i1 = Integer(d1 * den);
    Integer g = gcd(i0, i1);
    i0 /= g;
    i1 /= g;
    // tau(x) = det(d, x) = i0 x1 - i1 x0 lies in (1/fact) Z; for x = c w(t): tau = c D(t)
    UniPoly dpoly = l0 * Rational(-i0) - l1 * Rational(i1);  // det(d, w(t)) = -i0 l0 - i1 l1
    // q = (t - t0) q1, D = (t - t0) D1 since D(t0) = 0
    UniPoly lin = UniPoly::linear_root(t0);
    UniPoly q1 = UniPoly::divmod(q, lin).first, d1poly = UniPoly::divmod(dpoly, lin).first;
    // On |t - t0| <= r0: tau^2 q / D^2 = tau^2 q1 / ((t - t0) D1^2) <= N forces
    // |t - t0| >= tau^2 q1 / (N D1^2) >= inf(q1) / (fact^2 N sup(D1^2)).
    Rational r0(1, 8);
    Rational delta(0);
    for (int attempt = 0; attempt < 40; ++attempt, r0 /= 2) {
      auto [q1lo, q1hi] = range_bound(q1, t0 - r0, t0 + r0);
      if (q1lo * sign(q1(t0)) <= 0 && q1hi * sign(q1(t0)) <= 0) continue;
      Rational inf_q1 = sign(q1(t0)) > 0 ? q1lo : Rational(-q1hi);
      if (inf_q1 <= 0) continue;
      Rational sup_d = range_bound(d1poly * d1poly, t0 - r0, t0 + r0).second;
      if (sup_d <= 0 || big_n == 0) {
        delta = r0;
      } else {
        delta = std::min(r0, Rational(inf_q1 / (Rational(fact * fact) * big_n * sup_d)));
      }
      break;
    }
    if (delta <= 0) throw ComputationError("degenerate segment: cannot separate walls from " + to_string(t0));
    // multiples of d itself have walls where d . H^{n-1} vanishes; keep those outside the gap
    UniPoly gd = l0 * Rational(i0) + l1 * Rational(i1);
    if (!gd.is_zero()) {
      for (const auto& other : isolate_roots(gd, Rational(0), Rational(1))) {
        if (compare(other, t0) == 0) continue;
        AlgebraicReal o = refine(other, Rational(delta / 4));
        Rational dist = std::min(abs(o.lo - t0), abs(o.hi - t0));
        if (dist < delta) delta = dist / 2;
      }
    }
    excluded.emplace_back(t0 - delta, t0 + delta);
  }

  // The remaining region is a finite union of closed intervals on which q > 0.
  std::vector<std::pair<Rational, Rational>> region{{Rational(0), Rational(1)}};
  for (const auto& [a, b] : excluded) {
    std::vector<std::pair<Rational, Rational>> next;
    for (const auto& [lo, hi] : region) {
      if (b <= lo || a >= hi) {
        next.emplace_back(lo, hi);
        continue;
      }
      if (lo < a) next.emplace_back(lo, a);
      if (b < hi) next.emplace_back(b, hi);
    }
    region = std::move(next);
  }

  std::vector<UniPoly> comp{l1 * l1, l0 * l0};
  std::vector<Rational> ratio(2, Rational(0));
  std::vector<std::pair<Rational, Rational>> work = region;
  int budget = 1 << 16;
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    Rational qlo = range_bound(q, a, b).first;
    if (qlo <= 0) {
      if (--budget < 0) throw ComputationError("degenerate segment: intersection form not definite on slope kernels");
      Rational mid = (a + b) / 2;
      work.emplace_back(a, mid);
      work.emplace_back(mid, b);
      continue;
    }
    for (std::size_t j = 0; j < 2; ++j) ratio[j] = std::max(ratio[j], Rational(range_bound(comp[j], a, b).second / qlo));
  }

  std::vector<long> box;
  for (std::size_t j = 0; j < 2; ++j) {
    // |x_j| <= sqrt(N ratio_j), numerators a_j = fact * x_j
    Integer fl = floor_of(Rational(big_n * ratio[j] * fact * fact));
    Integer root;
    mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
    box.push_back(root.get_si() + 1);
  }
  out.box0 = box[0];
  out.box1 = box[1];
  if (box[0] * box[1] > 50'000'000) throw ComputationError("wall class search box too large");

  for (long a0 = -box[0]; a0 <= box[0]; ++a0) {
    for (long a1 = -box[1]; a1 <= box[1]; ++a1) {
      if (a0 == 0 && a1 == 0) continue;
      Rational x0(a0, fact), x1(a1, fact);
      x0.canonicalize();
      x1.canonicalize();
      UniPoly f = l0 * x0 + l1 * x1;
      if (f.is_zero()) continue;
      // -x^2 H^{n-2} <= N at a root of f where the form is definite
      UniPoly g = p00 * Rational(x0 * x0) + p01 * Rational(2 * x0 * x1) + p11 * Rational(x1 * x1) + UniPoly::constant(big_n);
      for (const auto& root : isolate_roots(f, Rational(0), Rational(1))) {
        if (sign_at(q, root) > 0 && sign_at(g, root) >= 0) {
          out.classes.push_back(NumClass({x0, x1}));
          break;
        }
      }
    }
  }
  return out;
}

std::vector<NumClass> enumerate_wall_classes(const VarietyData& v, const Segment& s, const SheafNumerics& e) {
  return wall_class_search(v, s, e).classes;
}

}  // namespace stabwalls
