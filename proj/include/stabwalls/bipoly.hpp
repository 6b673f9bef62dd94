#pragma once

#include <vector>

#include "stabwalls/multipoly.hpp"
#include "stabwalls/rational.hpp"
#include "stabwalls/unipoly.hpp"

namespace stabwalls {

// Polynomial in two variables (m, t). coeff(i, j) multiplies m^i t^j. Rows
// and columns are trimmed so that the zero polynomial has no rows.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<std::vector<Rational>> coeffs);
  // From a MultiPoly in two variables (index 0 = m, index 1 = t).
  static BiPoly from_multi(const MultiPoly& p);

  bool is_zero() const { return coeffs_.empty(); }
  int degree_m() const { return static_cast<int>(coeffs_.size()) - 1; }
  int degree_t() const;
  Rational coeff(int i, int j) const;
  const std::vector<std::vector<Rational>>& rows() const { return coeffs_; }

  // Coefficient of m^i as a polynomial in t.
  UniPoly m_coeff(int i) const;
  // Fix t, polynomial in m.
  UniPoly at_t(const Rational& t) const;
  // Fix m, polynomial in t.
  UniPoly at_m(const Rational& m) const;
  Rational operator()(const Rational& m, const Rational& t) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<std::vector<Rational>> coeffs_;
};

}  // namespace stabwalls
