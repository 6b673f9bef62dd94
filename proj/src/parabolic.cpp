#include "stabwalls/parabolic.hpp"

#include "stabwalls/errors.hpp"

namespace stabwalls {

std::vector<Rational> WeightVector::gaps() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < alphas.size(); ++i) out.push_back(alphas[i] - alphas[i - 1]);
  out.push_back(1 - alphas.back());
  return out;
}

void WeightVector::validate() const {
  if (alphas.empty()) throw InputError("weight vector is empty");
  if (alphas.front() <= 0) throw InputError("weights must satisfy 0 < alpha_0");
  for (std::size_t i = 1; i < alphas.size(); ++i) {
    if (alphas[i] <= alphas[i - 1]) throw InputError("weights must be strictly increasing");
  }
  if (alphas.back() >= 1) throw InputError("weights must satisfy alpha_k < 1");
}

SheafNumerics ParabolicData::last_quotient() const { return formal_difference(total, twist(total, -divisor)); }

void ParabolicData::validate() const {
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    if (quotients[i].rank < 0 || quotients[i].rank > total.rank) {
      throw InputError("quotient " + std::to_string(i + 1) + " has rank outside [0, rk E]");
    }
  }
}

namespace {

UniPoly along(const SheafNumerics& e, const NumClass& a) { return hilbert_polynomial(e, a); }

void check_arity(const ParabolicData& p, int k) {
  if (static_cast<int>(p.quotients.size()) != k) {
    throw InputError("filtration has " + std::to_string(p.quotients.size()) + " quotients, weights expect " +
                     std::to_string(k));
  }
}

// P^alpha as c + sum_i alpha_i g_i, polynomials in m.
std::pair<UniPoly, std::vector<UniPoly>> affine_hilbert(const ParabolicData& p, int k, const NumClass& a) {
  check_arity(p, k);
  p.validate();
  std::vector<UniPoly> q;
  for (const auto& s : p.quotients) q.push_back(along(s, a));
  q.push_back(along(p.last_quotient(), a));
  // eps_i = alpha_i - alpha_{i-1} (i = 1..k), eps_{k+1} = 1 - alpha_k
  UniPoly constant = along(p.total, a) - q[static_cast<std::size_t>(k)];
  std::vector<UniPoly> grad(static_cast<std::size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) {
    grad[static_cast<std::size_t>(i)] -= q[static_cast<std::size_t>(i) - 1];
    grad[static_cast<std::size_t>(i) - 1] += q[static_cast<std::size_t>(i) - 1];
  }
  grad[static_cast<std::size_t>(k)] += q[static_cast<std::size_t>(k)];
  return {constant, grad};
}

}  // namespace

UniPoly parabolic_hilbert(const VarietyData&, const ParabolicData& p, const WeightVector& w, const NumClass& a) {
  w.validate();
  check_arity(p, w.k());
  p.validate();
  std::vector<Rational> eps = w.gaps();
  UniPoly out = along(p.total, a);
  for (std::size_t i = 0; i < p.quotients.size(); ++i) out -= along(p.quotients[i], a) * eps[i];
  out -= along(p.last_quotient(), a) * eps.back();
  return out;
}

ParabolicComparison parabolic_compare(const VarietyData& v, const ParabolicData& sub, const ParabolicData& full,
                                      const WeightVector& w, const NumClass& a) {
  if (sub.total.rank <= 0 || full.total.rank <= 0) throw InputError("parabolic comparison needs positive ranks");
  UniPoly d = parabolic_hilbert(v, sub, w, a) * Rational(1 / sub.total.rank) -
              parabolic_hilbert(v, full, w, a) * Rational(1 / full.total.rank);
  std::vector<Rational> top;
  for (int i = v.dim; i >= 0; --i) top.push_back(d.coeff(i));
  ParabolicComparison out;
  out.order = lex_sign(top);
  out.verdict = overall_verdict({out.order});
  return out;
}

AffineDifference parabolic_difference(const VarietyData& v, const ParabolicData& sub, const ParabolicData& full, int k,
                                      const NumClass& a) {
  if (sub.total.rank <= 0 || full.total.rank <= 0) throw InputError("parabolic comparison needs positive ranks");
  auto [cs, gs] = affine_hilbert(sub, k, a);
  auto [cf, gf] = affine_hilbert(full, k, a);
  const Rational rs = 1 / sub.total.rank, rf = 1 / full.total.rank;
  AffineDifference out;
  for (int j = v.dim; j >= 0; --j) {
    out.constants.push_back(cs.coeff(j) * rs - cf.coeff(j) * rf);
    std::vector<Rational> g;
    for (std::size_t i = 0; i < gs.size(); ++i) g.push_back(gs[i].coeff(j) * rs - gf[i].coeff(j) * rf);
    out.gradients.push_back(std::move(g));
  }
  return out;
}

WeightWalls weight_walls(const VarietyData& v, const ParabolicData& full, const std::vector<ParabolicCandidate>& candidates,
                         int k, const NumClass& a) {
  if (k < 0 || k > 2) throw InputError("unsupported filtration length k = " + std::to_string(k) + " (at most 2)");
  // closure of the weight simplex: vertices (0,..,0,1,..,1)
  std::vector<std::vector<Rational>> vertices;
  for (int ones = 0; ones <= k + 1; ++ones) {
    std::vector<Rational> p(static_cast<std::size_t>(k) + 1, Rational(0));
    for (int i = k + 1 - ones; i <= k; ++i) p[static_cast<std::size_t>(i)] = 1;
    vertices.push_back(std::move(p));
  }
  WeightWalls out;
  for (const auto& c : candidates) {
    AffineDifference d = parabolic_difference(v, c.data, full, k, a);
    bool found = false;
    for (std::size_t j = 0; j < d.constants.size() && !found; ++j) {
      const auto& g = d.gradients[j];
      bool constant = std::all_of(g.begin(), g.end(), [](const Rational& x) { return x == 0; });
      if (constant && d.constants[j] == 0) continue;
      found = true;
      if (constant) {
        out.weight_independent.push_back(c.id);
        break;
      }
      int lo = 0, hi = 0;
      for (const auto& p : vertices) {
        Rational val = d.constants[j];
        for (std::size_t i = 0; i < p.size(); ++i) val += g[i] * p[i];
        lo = std::min(lo, sign(val));
        hi = std::max(hi, sign(val));
      }
      // a hyperplane meets the open simplex iff it separates two vertices strictly
      if (lo < 0 && hi > 0) out.walls.push_back({c.id, static_cast<int>(j) + 1, d.constants[j], g});
    }
    if (!found) out.weight_independent.push_back(c.id);
  }
  return out;
}

std::pair<UniPoly, UniPoly> beta_parabolic_identity(const TwistSetup& setup, const SheafNumerics& e, const Rational& beta) {
  if (beta <= 0 || beta >= 1) throw InputError("beta must lie strictly between 0 and 1");
  NumClass shift = setup.direction * Rational(setup.l);
  ParabolicData data{twist(e, shift), {}, shift * Rational(2)};
  return {beta_poly(setup, e, beta), parabolic_hilbert(*setup.variety, data, WeightVector{{beta}}, setup.center)};
}

}  // namespace stabwalls
