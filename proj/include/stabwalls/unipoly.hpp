#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabwalls/rational.hpp"

namespace stabwalls {

// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i;
// the zero polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly identity() { return monomial(Rational(1), 1); }
  // (x - root)
  static UniPoly linear_root(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  UniPoly derivative() const;
  // p(a + b x)
  UniPoly compose_affine(const Rational& a, const Rational& b) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Euclidean division; throws ComputationError on division by zero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

  UniPoly monic() const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  UniPoly primitive() const;
  // The positive factor s with *this == s * primitive().
  Rational primitive_scale() const;
  // Product of the distinct irreducible factors, primitive.
  UniPoly squarefree() const;

  // e.g. "λ² − 4λ + 1"
  std::string to_string(std::string_view var = "λ") const;
  // e.g. "l^2 - 4*l + 1"
  std::string to_ascii(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Rational bounds lo <= p(x) <= hi for every x in [a, b] (Taylor expansion
// at the midpoint with absolute values).
std::pair<Rational, Rational> range_bound(const UniPoly& p, const Rational& a, const Rational& b);

// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace stabwalls
