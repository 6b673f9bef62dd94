#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "stabwalls/errors.hpp"
#include "stabwalls/linalg.hpp"
#include "stabwalls/multipoly.hpp"
#include "stabwalls/rational.hpp"
#include "stabwalls/unipoly.hpp"

namespace stabwalls {

// A numerical divisor class, coordinates in the variety's chosen basis.
struct NumClass {
  std::vector<Rational> coords;

  NumClass() = default;
  explicit NumClass(std::vector<Rational> c) : coords(std::move(c)) {}
  static NumClass zero(int rank) { return NumClass(std::vector<Rational>(static_cast<std::size_t>(rank))); }
  static NumClass basis(int rank, int index);

  int size() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  const Rational& operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }

  NumClass& operator+=(const NumClass& o);
  NumClass& operator-=(const NumClass& o);
  NumClass& operator*=(const Rational& c);
  friend NumClass operator+(NumClass a, const NumClass& b) { return a += b; }
  friend NumClass operator-(NumClass a, const NumClass& b) { return a -= b; }
  friend NumClass operator-(NumClass a) { return a *= Rational(-1); }
  friend NumClass operator*(const Rational& c, NumClass a) { return a *= c; }
  friend NumClass operator*(NumClass a, const Rational& c) { return a *= c; }
  friend bool operator==(const NumClass& a, const NumClass& b) { return a.coords == b.coords; }

  // "(3/2, -1/2)"
  std::string to_string() const;
};

// Numerical intersection theory of a smooth projective variety: the top
// intersection form on the Picard lattice and the Todd class pairings.
struct VarietyData {
  std::string name;
  int dim = 0;
  int picard_rank = 0;
  std::vector<std::string> basis_labels;
  // Multidegree (exponents over the basis, total dim) -> intersection number.
  std::map<Exponent, Rational> intersection;
  // todd[e] for e = 1..dim, multidegree of total dim - e -> pairing with td_e.
  // todd[0] is unused (td_0 pairs through the intersection form).
  std::vector<std::map<Exponent, Rational>> todd;
  std::vector<NumClass> ample;

  // Pairing of td_e with the basis monomial of multidegree m (|m| = dim - e).
  Rational todd_value(int e, const Exponent& m) const;
  void validate() const;
};

// The polarization segment H(t) = (1 - t) h0 + t h1.
struct Segment {
  NumClass h0;
  NumClass h1;

  NumClass at(const Rational& t) const;
};

Rational intersect(const VarietyData& v, std::span<const NumClass> classes);
Rational pair_todd(const VarietyData& v, int e, std::span<const NumClass> classes);

// t -> x . H(t)^k . rest, a polynomial of degree <= k.
UniPoly segment_form(const VarietyData& v, const Segment& s, const NumClass& x, int k,
                     std::span<const NumClass> rest = {});

// Gram matrix of (x, y) -> x . y . H^{dim - 2} on the basis.
Matrix hodge_matrix(const VarietyData& v, const NumClass& h);
// True iff that form has exactly one positive eigenvalue and no kernel.
bool hodge_index_holds(const VarietyData& v, const NumClass& h);

// Symmetric polynomial in rho variables: y -> sum_e td_e . Y^{n-e} / (n-e)!
// where Y = sum_j y_j B_j. Evaluating at L + D gives chi(O(L + D)).
MultiPoly riemann_roch_polynomial(const VarietyData& v);

// Linear form sum_j c_j x_j in rho variables.
MultiPoly linear_form(const NumClass& c);

}  // namespace stabwalls
