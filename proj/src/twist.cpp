#include "stabwalls/twist.hpp"

#include <algorithm>
#include <set>

#include "stabwalls/errors.hpp"

namespace stabwalls {

TwistSetup TwistSetup::from_segment(const VarietyData& v, const Segment& s, long l) {
  validate_segment(v, s);
  if (l < 1) throw InputError("twist count l must be a positive integer");
  TwistSetup out;
  out.variety = &v;
  out.center = (s.h0 + s.h1) * Rational(1, 2);
  NumClass raw = (s.h1 - s.h0) * Rational(1, 2);
  Integer den = 1;
  for (const auto& c : raw.coords) den = lcm(den, Integer(c.get_den()));
  Integer g = 0;
  for (const auto& c : raw.coords) g = gcd(g, Integer(c * den));
  out.direction = raw * Rational(den, g);
  out.scale = Rational(g, den);
  out.scale.canonicalize();
  out.l = l;
  return out;
}

Segment TwistSetup::segment() const { return {center - direction * scale, center + direction * scale}; }

namespace {

void require_ranks(const SheafNumerics& f, const SheafNumerics& e) {
  if (f.rank == 0 || e.rank == 0) throw ComputationError("twisted difference needs nonzero ranks");
}

// form(m A + l D) as a polynomial in (m, l)
MultiPoly twisted_form(const TwistSetup& setup, const SheafNumerics& e) {
  std::vector<MultiPoly> images;
  for (int j = 0; j < setup.center.size(); ++j) {
    images.push_back(MultiPoly::variable(2, 0) * setup.center[j] + MultiPoly::variable(2, 1) * setup.direction[j]);
  }
  return e.form.compose(images);
}

// m -> form(m A + shift)
UniPoly hilbert_along_center(const TwistSetup& setup, const SheafNumerics& e, const NumClass& shift) {
  std::vector<MultiPoly> images;
  for (int j = 0; j < setup.center.size(); ++j) {
    images.push_back(MultiPoly::variable(1, 0) * setup.center[j] + MultiPoly::constant(1, shift[j]));
  }
  return e.form.compose(images).to_unipoly();
}

std::vector<Rational> descending(const UniPoly& p, int n) {
  std::vector<Rational> out;
  for (int i = 0; i <= n; ++i) out.push_back(p.coeff(n - i));
  return out;
}

std::string candidate_list(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : ", ") + id;
  return out;
}

}  // namespace

BiPoly delta_poly(const TwistSetup& setup, const SheafNumerics& f, const SheafNumerics& e) {
  require_ranks(f, e);
  MultiPoly d = twisted_form(setup, e) * Rational(1 / e.rank) - twisted_form(setup, f) * Rational(1 / f.rank);
  return BiPoly::from_multi(d);
}

UniPoly delta_coeff(const TwistSetup& setup, const SheafNumerics& f, const SheafNumerics& e, int i) {
  const int n = setup.variety->dim;
  if (i < 1 || i > n) throw InputError("coefficient index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  return delta_poly(setup, f, e).m_coeff(n - i);
}

int lex_sign(const std::vector<Rational>& coeffs) {
  for (const auto& c : coeffs) {
    if (c != 0) return sign(c);
  }
  return 0;
}

std::vector<Rational> delta_vector(const L0Certificate& c, const Rational& l) {
  std::vector<Rational> out;
  for (const auto& p : c.coefficients) out.push_back(p(l));
  return out;
}

L0Result find_l0(const TwistSetup& setup, const SheafNumerics& e, const std::vector<Candidate>& candidates) {
  if (candidates.empty()) throw InputError("find_l0 needs at least one candidate");
  validate_candidates(e, candidates);
  const VarietyData& v = *setup.variety;
  const int n = v.dim;
  const Segment seg = setup.segment();
  const Rational half(1, 2);

  for (const auto& w : wall_positions(v, seg, e, candidates).walls) {
    bool inside = (compare(w.position, Rational(0)) > 0 && compare(w.position, half) < 0) ||
                  (compare(w.position, half) > 0 && compare(w.position, Rational(1)) < 0);
    if (inside) {
      throw ComputationError("wall between A and endpoint: the twist comparison does not apply (candidate " +
                             candidate_list(w.witnesses) + ")");
    }
  }

  L0Result out;
  Rational top(1);
  for (const auto& c : candidates) {
    L0Certificate cert;
    cert.id = c.id;
    BiPoly d = delta_poly(setup, c.data, e);
    for (int i = 1; i <= n; ++i) {
      UniPoly p = d.m_coeff(n - i);
      cert.root_bounds.push_back(p.is_zero() ? Rational(0) : cauchy_bound(p));
      top = std::max(top, cert.root_bounds.back());
      cert.coefficients.push_back(std::move(p));
    }
    BiPoly r = reduced_difference(v, seg, c.data, e);
    cert.sign_h1 = lex_sign(descending(r.at_t(Rational(1)), n));
    cert.sign_h0 = lex_sign(descending(r.at_t(Rational(0)), n));
    out.certificates.push_back(std::move(cert));
  }
  out.certified = ceil_of(top).get_si();

  auto agrees = [&](const L0Certificate& cert, long l) {
    return lex_sign(delta_vector(cert, Rational(l))) == cert.sign_h1 &&
           lex_sign(delta_vector(cert, Rational(-l))) == cert.sign_h0;
  };
  for (auto& cert : out.certificates) {
    cert.sign_twisted_up = lex_sign(delta_vector(cert, Rational(out.certified)));
    cert.sign_twisted_down = lex_sign(delta_vector(cert, Rational(-out.certified)));
    if (!agrees(cert, out.certified)) {
      throw ComputationError("wall between A and endpoint: the twist comparison does not apply (candidate " +
                             cert.id + ")");
    }
  }
  out.l0 = out.certified;
  while (out.l0 > 1 && std::all_of(out.certificates.begin(), out.certificates.end(),
                                   [&](const L0Certificate& cert) { return agrees(cert, out.l0 - 1); })) {
    --out.l0;
  }
  return out;
}

UniPoly beta_poly(const TwistSetup& setup, const SheafNumerics& e, const Rational& beta) {
  if (beta < 0 || beta > 1) throw InputError("beta " + to_string(beta) + " outside [0, 1]");
  NumClass shift = setup.direction * Rational(setup.l);
  return hilbert_along_center(setup, e, -shift) * Rational(1 - beta) + hilbert_along_center(setup, e, shift) * beta;
}

namespace {

// P^beta(F)/rk F - P^beta(E)/rk E at beta = 0 and beta = 1
std::pair<UniPoly, UniPoly> beta_ends(const TwistSetup& setup, const SheafNumerics& f, const SheafNumerics& e) {
  require_ranks(f, e);
  auto at = [&](const Rational& b) {
    return beta_poly(setup, f, b) * Rational(1 / f.rank) - beta_poly(setup, e, b) * Rational(1 / e.rank);
  };
  return {at(Rational(0)), at(Rational(1))};
}

int sign_between(const std::pair<UniPoly, UniPoly>& ends, const Rational& beta, int n) {
  UniPoly d = ends.first * Rational(1 - beta) + ends.second * beta;
  return lex_sign(descending(d, n));
}

}  // namespace

std::vector<int> beta_signs(const TwistSetup& setup, const SheafNumerics& e, const std::vector<Candidate>& candidates,
                            const Rational& beta) {
  std::vector<int> out;
  for (const auto& c : candidates) out.push_back(sign_between(beta_ends(setup, c.data, e), beta, setup.variety->dim));
  return out;
}

BetaWalls beta_walls(const TwistSetup& setup, const SheafNumerics& e, const std::vector<Candidate>& candidates) {
  validate_candidates(e, candidates);
  const int n = setup.variety->dim;
  BetaWalls out;
  std::vector<std::pair<UniPoly, UniPoly>> ends;
  std::set<Rational> points{Rational(0), Rational(1)};
  for (const auto& c : candidates) {
    ends.push_back(beta_ends(setup, c.data, e));
    const auto& [d0, d1] = ends.back();
    if (d0.is_zero() && d1.is_zero()) out.identical.push_back(c.id);
    // coefficient c_k + beta d_k with c_k = d0_k, d_k = d1_k - d0_k
    for (int k = 0; k <= n; ++k) {
      Rational slope = d1.coeff(k) - d0.coeff(k);
      if (slope == 0) continue;
      Rational root = -d0.coeff(k) / slope;
      if (root >= 0 && root <= 1) points.insert(root);
    }
  }
  std::vector<Rational> pts(points.begin(), points.end());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    BetaChamber ch;
    ch.lo = pts[i];
    ch.hi = pts[i + 1];
    ch.sample = (ch.lo + ch.hi) / 2;
    for (const auto& en : ends) ch.signs.push_back(sign_between(en, ch.sample, n));
    ch.verdict = overall_verdict(ch.signs);
    out.chambers.push_back(std::move(ch));
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    BetaWall w;
    w.beta = pts[i];
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      int here = sign_between(ends[c], pts[i], n);
      bool flips = (i > 0 && out.chambers[i - 1].signs[c] != here) ||
                   (i < out.chambers.size() && out.chambers[i].signs[c] != here);
      if (flips) w.witnesses.push_back(candidates[c].id);
    }
    std::sort(w.witnesses.begin(), w.witnesses.end());
    if (!w.witnesses.empty()) out.walls.push_back(std::move(w));
  }
  // Coefficient roots that are not walls do not split chambers.
  std::vector<BetaChamber> merged;
  for (auto& ch : out.chambers) {
    bool wall_below = std::any_of(out.walls.begin(), out.walls.end(), [&](const BetaWall& w) { return w.beta == ch.lo; });
    if (!merged.empty() && !wall_below) {
      merged.back().hi = ch.hi;
      merged.back().sample = (merged.back().lo + merged.back().hi) / 2;
    } else {
      merged.push_back(std::move(ch));
    }
  }
  out.chambers = std::move(merged);
  return out;
}

}  // namespace stabwalls
