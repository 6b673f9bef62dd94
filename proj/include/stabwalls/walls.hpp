#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabwalls/algebraic.hpp"
#include "stabwalls/bipoly.hpp"
#include "stabwalls/sheaf.hpp"
#include "stabwalls/variety.hpp"

namespace stabwalls {

struct Candidate {
  std::string id;
  SheafNumerics data;
};

enum class WallKind { slope, gieseker };
enum class Verdict { stable, properly_semistable, unstable, no_witness };

std::string to_string(WallKind k);
std::string to_string(Verdict v);

// Lexicographic sign of the difference P(F)/rk F - P(E)/rk E, highest power
// of m first. sign > 0 means F destabilizes. index is the coefficient that
// decided (1 = slope term), 0 when the whole difference vanishes.
struct Profile {
  int sign = 0;
  int index = 0;
  friend bool operator==(const Profile&, const Profile&) = default;
};

struct WallWitness {
  std::string id;
  WallKind kind = WallKind::slope;
  int defining_index = 1;
  bool sign_change = true;
  // Primitive integer normalization of the vanishing coefficient, and the
  // positive factor dropped by the normalization.
  UniPoly polynomial;
  Rational scale;
};

struct Wall {
  AlgebraicReal position;
  WallKind kind = WallKind::slope;
  bool sign_change = true;
  std::vector<std::string> witnesses;
  int defining_index = 1;
  std::vector<WallWitness> details;
};

struct WallSet {
  std::vector<Wall> walls;
  // Candidates whose reduced difference vanishes identically.
  std::vector<std::string> everywhere_semistable;
  // Walls or witnesses removed by the condition (*) filter.
  std::vector<Wall> pruned;
};

struct CandidateVerdict {
  std::string id;
  Profile profile;
  int slope_sign = 0;
};

struct ChamberEnd {
  AlgebraicReal value;
  bool is_wall = false;
};

struct Chamber {
  ChamberEnd lo;
  ChamberEnd hi;
  Rational sample;
  std::vector<CandidateVerdict> candidates;
  Verdict gieseker = Verdict::no_witness;
  Verdict slope = Verdict::no_witness;
};

struct WallPointVerdict {
  std::size_t wall_index = 0;
  std::vector<CandidateVerdict> candidates;
  Verdict gieseker = Verdict::no_witness;
  Verdict slope = Verdict::no_witness;
};

struct ChamberReport {
  WallSet walls;
  std::vector<Chamber> chambers;
  std::vector<WallPointVerdict> at_walls;
  std::string banner;
};

struct WallOptions {
  bool require_star = false;
  int threads = 1;
};

NumClass xi(const VarietyData& v, const SheafNumerics& f, const SheafNumerics& e);

// (m, t) -> P_{H(t)}(E)(m)/rk E - P_{H(t)}(F)(m)/rk F
BiPoly reduced_difference(const VarietyData& v, const Segment& s, const SheafNumerics& f, const SheafNumerics& e);

// Coefficient polynomials q_k(t), k = 0..n, of m^{n-k} in P(F)/rk F - P(E)/rk E.
std::vector<UniPoly> profile_polynomials(const VarietyData& v, const Segment& s, const SheafNumerics& f,
                                         const SheafNumerics& e);

Profile lex_profile(const std::vector<Rational>& coeffs);
Verdict overall_verdict(const std::vector<int>& signs);

void validate_segment(const VarietyData& v, const Segment& s);
void validate_candidates(const SheafNumerics& e, const std::vector<Candidate>& candidates);

WallSet wall_positions(const VarietyData& v, const Segment& s, const SheafNumerics& e,
                       const std::vector<Candidate>& candidates, const WallOptions& opt = {});

ChamberReport chambers(const VarietyData& v, const Segment& s, const SheafNumerics& e,
                       const std::vector<Candidate>& candidates, const WallOptions& opt = {});

// Verdicts at a rational polarization computed directly from the Hilbert
// polynomials, independently of the wall machinery.
std::vector<CandidateVerdict> verdicts_at(const VarietyData& v, const Segment& s, const SheafNumerics& e,
                                          const std::vector<Candidate>& candidates, const Rational& t);

std::optional<Wall> next_wall(const VarietyData& v, const Segment& s, const SheafNumerics& e,
                              const std::vector<Candidate>& candidates, const Rational& t0, int direction);

struct StarReport {
  bool holds = false;
  bool slope_vanishes = false;
  int sub_discriminant_sign = 0;
  int quotient_discriminant_sign = 0;
  UniPoly sub_discriminant;
  UniPoly quotient_discriminant;
};

StarReport check_star(const VarietyData& v, const Segment& s, const SheafNumerics& f, const SheafNumerics& e,
                      const AlgebraicReal& wall);

struct W1Bound {
  Rational h;
  Rational l;
  Rational k1;
  Rational k2;
  Rational n_bound;
  // False when an optimum sits at an irrational point and k1 (k2) is a
  // rational upper (lower) bound for it.
  bool exact = true;
  UniPoly c2_poly;
  UniPoly c1sq_poly;
};

W1Bound w1_bound(const VarietyData& v, const Segment& s, const SheafNumerics& e);

// Maximum and minimum of p on [a, b]. The boolean is false when the extremum
// is irrational and the returned value is a safe rational bound.
struct Extremum {
  Rational value;
  bool exact = true;
};
Extremum maximize(const UniPoly& p, const Rational& a, const Rational& b);
Extremum minimize(const UniPoly& p, const Rational& a, const Rational& b);

struct WallClassSearch {
  std::vector<NumClass> classes;
  // Points of [0, 1] where x -> -x^2 . H(t)^{n-2} degenerates on the slope
  // kernel (H(t) on the boundary of the ample cone). Every multiple of the
  // kernel direction there would qualify, so walls at these points are excluded.
  std::vector<Rational> degenerate_points;
  Rational n_bound;
  // Half-widths of the scanned box, in units of 1/r!.
  long box0 = 0;
  long box1 = 0;
};

WallClassSearch wall_class_search(const VarietyData& v, const Segment& s, const SheafNumerics& e);
std::vector<NumClass> enumerate_wall_classes(const VarietyData& v, const Segment& s, const SheafNumerics& e);

}  // namespace stabwalls
