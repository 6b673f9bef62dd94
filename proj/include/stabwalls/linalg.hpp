#pragma once

#include <optional>
#include <vector>

#include "stabwalls/rational.hpp"
#include "stabwalls/unipoly.hpp"

namespace stabwalls {

using Matrix = std::vector<std::vector<Rational>>;

// Unique solution of a x = b by Gaussian elimination; nullopt if a is singular.
// a may have more rows than columns; the extra equations must be consistent.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

Rational determinant(Matrix a);

// det(x I - a)
UniPoly characteristic_polynomial(const Matrix& a);

// Number of positive, negative and zero eigenvalues of a symmetric matrix,
// read off the characteristic polynomial by Descartes' rule of signs (exact
// for polynomials with only real roots).
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Inertia inertia(const Matrix& symmetric);

// maximize c.x subject to a x = b, x >= 0, by the two-phase simplex method
// with Bland's rule (exact, no cycling).
struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  Rational value;
  std::vector<Rational> x;
};
LpResult maximize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace stabwalls
