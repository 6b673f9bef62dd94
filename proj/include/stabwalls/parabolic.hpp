#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stabwalls/twist.hpp"

namespace stabwalls {

// Weights 0 < alpha_0 < ... < alpha_k < 1.
struct WeightVector {
  std::vector<Rational> alphas;

  int k() const { return static_cast<int>(alphas.size()) - 1; }
  // eps_i = alpha_i - alpha_{i-1} for i = 1..k and eps_{k+1} = 1 - alpha_k.
  std::vector<Rational> gaps() const;
  void validate() const;
};

// E = F_0 > F_1 > ... > F_k > F_{k+1} = E(-D), given through the quotients E/F_i.
struct ParabolicData {
  SheafNumerics total;
  std::vector<SheafNumerics> quotients;
  NumClass divisor;

  // E/F_{k+1} = E - E(-D)
  SheafNumerics last_quotient() const;
  void validate() const;
};

// P_A(E) - sum_i eps_i P_A(E/F_i)
UniPoly parabolic_hilbert(const VarietyData& v, const ParabolicData& p, const WeightVector& w, const NumClass& a);

struct ParabolicComparison {
  // Sign of P^a(F)/rk F - P^a(E)/rk E, lexicographic from the top.
  int order = 0;
  Verdict verdict = Verdict::no_witness;
};

ParabolicComparison parabolic_compare(const VarietyData& v, const ParabolicData& sub, const ParabolicData& full,
                                      const WeightVector& w, const NumClass& a);

// c + sum_i g_i alpha_i = 0 intersected with the open weight simplex.
struct WeightWall {
  std::string id;
  // Index of the deciding coefficient (1 = highest power of m).
  int coefficient = 0;
  Rational constant;
  std::vector<Rational> gradient;
};

struct ParabolicCandidate {
  std::string id;
  ParabolicData data;
};

struct WeightWalls {
  std::vector<WeightWall> walls;
  // Candidates whose comparison does not depend on the weights.
  std::vector<std::string> weight_independent;
};

// Affine description of the reduced difference coefficients in the weights:
// coefficient j (1 = top) equals constants[j-1] + gradients[j-1] . alpha.
struct AffineDifference {
  std::vector<Rational> constants;
  std::vector<std::vector<Rational>> gradients;
};

AffineDifference parabolic_difference(const VarietyData& v, const ParabolicData& sub, const ParabolicData& full, int k,
                                      const NumClass& a);

WeightWalls weight_walls(const VarietyData& v, const ParabolicData& full, const std::vector<ParabolicCandidate>& candidates,
                         int k, const NumClass& a);

// (beta_poly(E, beta), parabolic Hilbert polynomial of E(lD) > E(-lD) with
// divisor 2lD and alpha_0 = beta). The two agree.
std::pair<UniPoly, UniPoly> beta_parabolic_identity(const TwistSetup& setup, const SheafNumerics& e, const Rational& beta);

}  // namespace stabwalls
