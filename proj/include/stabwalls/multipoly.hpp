#pragma once

#include <map>
#include <span>
#include <vector>

#include "stabwalls/rational.hpp"
#include "stabwalls/unipoly.hpp"

namespace stabwalls {

using Exponent = std::vector<int>;

// Sparse polynomial over Q in a fixed number of variables.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  Rational operator()(std::span<const Rational> point) const;
  MultiPoly homogeneous_part(int degree) const;
  // Substitute each variable i by images[i] (all images share one variable count).
  MultiPoly compose(const std::vector<MultiPoly>& images) const;
  // p(x + shift)
  MultiPoly shifted(std::span<const Rational> shift) const;
  // Univariate polynomial, valid when nvars() == 1.
  UniPoly to_unipoly() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(int k) const;

 private:
  int nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

// All exponent vectors of length nvars with entries summing to degree, in
// lexicographically decreasing order.
std::vector<Exponent> exponents_of_degree(int nvars, int degree);

// k! / prod(e_i!)
Integer multinomial(const Exponent& e);
Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace stabwalls
