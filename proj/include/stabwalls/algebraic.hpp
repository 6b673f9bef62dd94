#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabwalls/errors.hpp"
#include "stabwalls/rational.hpp"
#include "stabwalls/unipoly.hpp"

namespace stabwalls {

// A real root of an integer polynomial, pinned down by an isolating interval.
//
// defining_poly is squarefree and primitive with integer coefficients. For
// irrational roots it carries no rational roots at all, so the polynomial
// never vanishes at a rational bisection point; [lo, hi] contains exactly one
// root of it and the endpoints are not roots. Rational roots use the linear
// polynomial (q x - p) and the degenerate interval [p/q, p/q].
struct AlgebraicReal {
  UniPoly defining_poly;
  Rational lo;
  Rational hi;
  bool is_rational = false;
  std::optional<Rational> rational_value;
  // Present for roots of degree <= 2 defining polynomials, e.g. "(5 − √21)/4".
  std::optional<std::string> closed_form;

  static AlgebraicReal from_rational(const Rational& r);

  double approx() const;
  // Decimal preview (refines a copy to the requested width first).
  std::string decimal(int digits) const;
};

// Raised by sturm_count when an endpoint is a root.
class EndpointRootError : public ComputationError {
 public:
  EndpointRootError(const std::string& what, Rational perturbation)
      : ComputationError(what), perturbation_(std::move(perturbation)) {}
  // Signed shift: moving the offending endpoint to endpoint + shift (outward)
  // puts it off every root without capturing any root other than the endpoint.
  const Rational& suggested_perturbation() const { return perturbation_; }

 private:
  Rational perturbation_;
};

std::vector<UniPoly> sturm_sequence(const UniPoly& p);

// Number of distinct real roots of p in the open interval (a, b).
int sturm_count(const UniPoly& p, const Rational& a, const Rational& b);

// All distinct real roots of p in [a, b], ascending, with disjoint intervals.
std::vector<AlgebraicReal> isolate_roots(const UniPoly& p, const Rational& a, const Rational& b);

// Every real root (search interval from the Cauchy bound).
std::vector<AlgebraicReal> real_roots(const UniPoly& p);

// Same root, interval of width <= width. Nested in the input interval.
AlgebraicReal refine(const AlgebraicReal& r, const Rational& width);

// Exact sign of q at the root.
int sign_at(const UniPoly& q, const AlgebraicReal& r);

// -1, 0, 1 comparing two algebraic reals / an algebraic real with a rational.
int compare(const AlgebraicReal& a, const AlgebraicReal& b);
int compare(const AlgebraicReal& a, const Rational& b);

// Multiplicity of the root r in p (0 if not a root). p must be nonzero.
int multiplicity(const UniPoly& p, const AlgebraicReal& r);

// Strict bound: every complex root z of p satisfies |z| < cauchy_bound(p).
Rational cauchy_bound(const UniPoly& p);

// A rational strictly between a and b (a < b).
Rational rational_between(const AlgebraicReal& a, const AlgebraicReal& b);

// `count` distinct rationals strictly between a and b, ascending, none of them
// equal to any of the points in `avoid`.
std::vector<Rational> rationals_between(const AlgebraicReal& a, const AlgebraicReal& b, int count,
                                        const std::vector<AlgebraicReal>& avoid = {});

}  // namespace stabwalls
