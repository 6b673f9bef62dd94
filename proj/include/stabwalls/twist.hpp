#pragma once

#include <string>
#include <vector>

#include "stabwalls/bipoly.hpp"
#include "stabwalls/walls.hpp"

namespace stabwalls {

// A rational center A of a segment with H1 = A + scale * D and
// H0 = A - scale * D, where D is a primitive integral class and l counts
// twists by D.
struct TwistSetup {
  const VarietyData* variety = nullptr;
  NumClass center;
  NumClass direction;
  Rational scale;
  long l = 1;

  // Midpoint convention: A = (h0 + h1)/2, D proportional to (h1 - h0)/2.
  static TwistSetup from_segment(const VarietyData& v, const Segment& s, long l = 1);
  // The segment A - scale D -> A + scale D.
  Segment segment() const;
};

// (m, l) -> chi(E(lD) (x) A^m)/rk E - chi(F(lD) (x) A^m)/rk F
BiPoly delta_poly(const TwistSetup& setup, const SheafNumerics& f, const SheafNumerics& e);
// Coefficient of m^{n-i} in delta_poly, as a polynomial in l; 1 <= i <= n.
UniPoly delta_coeff(const TwistSetup& setup, const SheafNumerics& f, const SheafNumerics& e, int i);

struct L0Certificate {
  std::string id;
  // delta_i(l) for i = 1..n
  std::vector<UniPoly> coefficients;
  // Cauchy bound of each nonzero delta_i (0 for the zero polynomial).
  std::vector<Rational> root_bounds;
  // Lexicographic signs (E minus F orientation) of the reduced difference at
  // H1 and H0, and of delta(l) and delta(-l) for large l.
  int sign_h1 = 0;
  int sign_h0 = 0;
  int sign_twisted_up = 0;
  int sign_twisted_down = 0;
};

struct L0Result {
  long l0 = 1;
  // Integer above every recorded root bound.
  long certified = 1;
  std::vector<L0Certificate> certificates;
};

// Sign of the first nonzero entry.
int lex_sign(const std::vector<Rational>& coeffs);
// (delta_1(l), ..., delta_n(l))
std::vector<Rational> delta_vector(const L0Certificate& c, const Rational& l);

L0Result find_l0(const TwistSetup& setup, const SheafNumerics& e, const std::vector<Candidate>& candidates);

// (1 - beta) P_A(E(-lD)) + beta P_A(E(lD))
UniPoly beta_poly(const TwistSetup& setup, const SheafNumerics& e, const Rational& beta);

struct BetaWall {
  Rational beta;
  std::vector<std::string> witnesses;
};

struct BetaChamber {
  Rational lo;
  Rational hi;
  Rational sample;
  // Lexicographic signs of P^beta(F)/rk F - P^beta(E)/rk E, candidate order.
  std::vector<int> signs;
  Verdict verdict = Verdict::no_witness;
};

struct BetaWalls {
  std::vector<BetaWall> walls;
  std::vector<BetaChamber> chambers;
  // Candidates whose reduced interpolations agree for every beta.
  std::vector<std::string> identical;
};

// Signs of P^beta(F)/rk F - P^beta(E)/rk E, highest power of m first.
std::vector<int> beta_signs(const TwistSetup& setup, const SheafNumerics& e, const std::vector<Candidate>& candidates,
                            const Rational& beta);

BetaWalls beta_walls(const TwistSetup& setup, const SheafNumerics& e, const std::vector<Candidate>& candidates);

}  // namespace stabwalls
