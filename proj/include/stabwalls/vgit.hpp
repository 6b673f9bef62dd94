#pragma once

#include <string>
#include <vector>

#include "stabwalls/linalg.hpp"

namespace stabwalls {

struct Summand {
  std::string label;
  int dim = 1;
  std::vector<long> weight;
};

// A torus of rank t acting on a direct sum, by a character on each summand.
struct TorusWeights {
  int rank = 1;
  std::vector<Summand> summands;

  void validate() const;
  // Summands scaled by their own factor of a rank-k torus, the first one fixed:
  // weights 0, e_1, ..., e_k.
  static TorusWeights scaling(int k, int dim = 1);
};

using Character = std::vector<Rational>;
// Indices of the nonzero components of a point, ascending.
using Support = std::vector<int>;

struct SemistabilityResult {
  bool semistable = false;
  // Character in the relative interior of the hull of the support weights.
  bool stable = false;
};

SemistabilityResult is_semistable(const TorusWeights& w, const Character& chi, const Support& s);

// max over the support of <ops, weight>: the fibre weight at the limit z -> infinity.
long mu(const TorusWeights& w, const Support& s, const std::vector<long>& ops);
// The same after twisting the linearization by chi: mu - <ops, chi>.
Rational mu(const TorusWeights& w, const Character& chi, const Support& s, const std::vector<long>& ops);

// Affine hyperplane <normal, x> = offset in character space.
struct CharacterWall {
  std::vector<Rational> normal;
  Rational offset;
};

struct VgitChamber {
  // Dimension of the cell of the wall arrangement (0 = point).
  int dimension = 0;
  Character sample;
  // Semistable supports, lexicographic order.
  std::vector<Support> semistable;
  // Minimal semistable supports; the quotient is the product of their P(W_i).
  std::vector<Support> minimal;
  std::string quotient;
};

struct VgitArrangement {
  std::vector<CharacterWall> walls;
  // Cells with a nonempty quotient.
  std::vector<VgitChamber> chambers;
};

// All nonempty subsets of the summand indices.
std::vector<Support> all_supports(const TorusWeights& w);
std::vector<Support> semistable_supports(const TorusWeights& w, const Character& chi);
std::string quotient_label(const TorusWeights& w, const std::vector<Support>& minimal);

VgitArrangement vgit_chambers(const TorusWeights& w, int threads = 1);

struct Flip {
  Rational position;  // path parameter in (0, 1)
  Character character;
  std::vector<Support> gained;
  std::vector<Support> lost;
};

std::vector<Flip> flip_sequence(const TorusWeights& w, const Character& from, const Character& to);

}  // namespace stabwalls
