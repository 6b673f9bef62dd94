#include "stabwalls/algebraic.hpp"

#include <algorithm>
#include <functional>

namespace stabwalls {

namespace {

int sign_variations(const std::vector<UniPoly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sign(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// A width d such that no root of q lies within distance d of x (apart from x
// itself) and x +- d are not roots.
Rational clearance(const UniPoly& q, const Rational& x) {
  UniPoly reduced = q.squarefree();
  if (reduced(x) == 0) reduced = UniPoly::divmod(reduced, UniPoly::linear_root(x)).first;
  Rational d(1);
  if (reduced.degree() <= 0) return d;
  while (true) {
    Rational left = x - d, right = x + d;
    if (reduced(left) == 0 || reduced(right) == 0) {
      d /= 2;
      continue;
    }
    auto seq = sturm_sequence(reduced);
    if (sign_variations(seq, left) - sign_variations(seq, right) > 0) {
      d /= 2;
      continue;
    }
    return d;
  }
}

// Isolate roots of a squarefree polynomial s in the open interval (a, b),
// where s(a), s(b) are nonzero. Rational roots hit at bisection points are
// returned as degenerate intervals.
void bisect(const std::vector<UniPoly>& seq, const UniPoly& s, Rational a, Rational b,
            int count, std::vector<std::pair<Rational, Rational>>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(a, b);
    return;
  }
  Rational mid = (a + b) / 2;
  if (s(mid) == 0) {
    out.emplace_back(mid, mid);
    Rational d = clearance(s, mid);
    d = std::min(d, Rational((b - a) / 4));
    Rational left = mid - d, right = mid + d;
    bisect(seq, s, a, left, sign_variations(seq, a) - sign_variations(seq, left), out);
    bisect(seq, s, right, b, sign_variations(seq, right) - sign_variations(seq, b), out);
    return;
  }
  bisect(seq, s, a, mid, sign_variations(seq, a) - sign_variations(seq, mid), out);
  bisect(seq, s, mid, b, sign_variations(seq, mid) - sign_variations(seq, b), out);
}

// Shrinks (lo, hi) around the unique root of squarefree s inside until its width is below `width`.
void shrink(const UniPoly& s, Rational& lo, Rational& hi, const Rational& width) {
  int slo = sign(s(lo));
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int sm = sign(s(mid));
    if (sm == 0) {
      lo = hi = mid;
      return;
    }
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

Integer integer_sqrt_floor(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Closed form of the root of the quadratic a x^2 + b x + c selected by `plus`.
std::string quadratic_closed_form(const UniPoly& q, bool plus) {
  Integer a = q.coeff(2).get_num(), b = q.coeff(1).get_num(), c = q.coeff(0).get_num();
  Integer disc = b * b - 4 * a * c;
  // disc = f^2 g with g squarefree (trial division over small primes, the rest left in g)
  Integer f(1), g = disc;
  for (unsigned long p = 2; p < 100000; ++p) {
    Integer pp = Integer(p) * p;
    if (pp > g) break;
    while (mpz_divisible_p(g.get_mpz_t(), pp.get_mpz_t())) {
      g /= pp;
      f *= p;
    }
  }
  Integer root = integer_sqrt_floor(g);
  if (root * root == g) {
    f *= root;
    g = 1;
  }
  Integer num_a = -b, num_b = f, den = 2 * a;
  if (den < 0) {
    den = -den;
    num_a = -num_a;
    num_b = -num_b;
    plus = !plus;
  }
  Integer common;
  mpz_gcd(common.get_mpz_t(), num_a.get_mpz_t(), num_b.get_mpz_t());
  mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), den.get_mpz_t());
  if (common != 0) {
    num_a /= common;
    num_b /= common;
    den /= common;
  }
  if (num_b < 0) {
    num_b = -num_b;
    plus = !plus;
  }
  std::string radical = (num_b == 1 ? std::string() : num_b.get_str()) + "√" + g.get_str();
  std::string body;
  if (num_a == 0) {
    body = (plus ? "" : "−") + radical;
  } else {
    body = num_a.get_str() + (plus ? " + " : " − ") + radical;
  }
  if (den == 1) return body;
  return "(" + body + ")/" + den.get_str();
}

// If the unique root of primitive squarefree s in [lo, hi] is rational, return it.
// A rational root u/v of an integer polynomial has v | lc, so lc * root is an integer.
std::optional<Rational> rational_root_in(const UniPoly& s, Rational lo, Rational hi) {
  Rational lc = abs(s.leading());
  shrink(s, lo, hi, Rational(1 / (2 * lc)));
  if (lo == hi) return lo;
  Integer k0 = ceil_of(Rational(lo * lc)), k1 = floor_of(Rational(hi * lc));
  for (Integer k = k0; k <= k1; ++k) {
    Rational cand(k, lc.get_num());
    cand.canonicalize();
    if (s(cand) == 0) return cand;
  }
  return std::nullopt;
}

}  // namespace

AlgebraicReal AlgebraicReal::from_rational(const Rational& r) {
  AlgebraicReal a;
  a.defining_poly = UniPoly::linear_root(r).primitive();
  a.lo = r;
  a.hi = r;
  a.is_rational = true;
  a.rational_value = r;
  a.closed_form = to_string(r);
  return a;
}

double AlgebraicReal::approx() const {
  if (is_rational) return rational_value->get_d();
  AlgebraicReal fine = refine(*this, pow10_inv(17));
  return Rational((fine.lo + fine.hi) / 2).get_d();
}

std::string AlgebraicReal::decimal(int digits) const {
  if (is_rational) return to_decimal(*rational_value, digits);
  AlgebraicReal fine = refine(*this, pow10_inv(digits + 2));
  return to_decimal(Rational((fine.lo + fine.hi) / 2), digits);
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UniPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    UniPoly r = UniPoly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    // positive rescaling keeps the sign pattern
    Rational s = abs(r.primitive_scale());
    seq.push_back(-(r * Rational(1 / s)));
  }
  return seq;
}

int sturm_count(const UniPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw ComputationError("indeterminate root count: zero polynomial");
  if (!(a < b)) throw ComputationError("sturm_count requires a < b");
  if (p(a) == 0) {
    Rational d = clearance(p, a);
    throw EndpointRootError("endpoint " + to_string(a) + " is a root; retry with " +
                                to_string(Rational(a - d)) + " (shift by -" + to_string(d) + ")",
                            Rational(-d));
  }
  if (p(b) == 0) {
    Rational d = clearance(p, b);
    throw EndpointRootError("endpoint " + to_string(b) + " is a root; retry with " +
                                to_string(Rational(b + d)) + " (shift by +" + to_string(d) + ")",
                            d);
  }
  auto seq = sturm_sequence(p);
  return sign_variations(seq, a) - sign_variations(seq, b);
}

Rational cauchy_bound(const UniPoly& p) {
  if (p.is_zero()) throw ComputationError("root bound of the zero polynomial");
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.leading())));
  return m + 1;
}

std::vector<AlgebraicReal> isolate_roots(const UniPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw ComputationError("identically zero");
  if (b < a) throw ComputationError("isolate_roots requires a <= b");
  std::vector<AlgebraicReal> result;
  if (p.degree() == 0) return result;
  UniPoly s = p.squarefree();

  // Rational roots of s over all of R: divide them out to get the irrational part.
  Rational bound = cauchy_bound(s);
  std::vector<std::pair<Rational, Rational>> spans;
  {
    auto seq = sturm_sequence(s);
    Rational lo = -bound, hi = bound;
    bisect(seq, s, lo, hi, sign_variations(seq, lo) - sign_variations(seq, hi), spans);
  }
  std::vector<Rational> rational_roots;
  std::vector<std::pair<Rational, Rational>> irrational_spans;
  for (auto& [lo, hi] : spans) {
    if (lo == hi) {
      rational_roots.push_back(lo);
    } else if (auto r = rational_root_in(s, lo, hi)) {
      rational_roots.push_back(*r);
    } else {
      irrational_spans.emplace_back(lo, hi);
    }
  }
  UniPoly irr = s;
  for (const auto& r : rational_roots) irr = UniPoly::divmod(irr, UniPoly::linear_root(r)).first;
  irr = irr.is_zero() || irr.degree() <= 0 ? UniPoly::constant(Rational(1)) : irr.primitive();

  for (const auto& r : rational_roots) {
    if (r >= a && r <= b) result.push_back(AlgebraicReal::from_rational(r));
  }

  for (const auto& [span_lo, span_hi] : irrational_spans) {
    AlgebraicReal root;
    root.defining_poly = irr;
    root.lo = span_lo;
    root.hi = span_hi;
    root.is_rational = false;
    // irrational, so never equal to a or b
    if (compare(root, a) < 0 || compare(root, b) > 0) continue;
    root.lo = std::max(root.lo, a);
    root.hi = std::min(root.hi, b);
    if (irr.degree() == 2) {
      Rational outer = std::max(cauchy_bound(irr), Rational(abs(root.lo) + 1));
      bool larger = sturm_count(irr, -outer, root.lo) == 1;
      root.closed_form = quadratic_closed_form(irr, larger);
    }
    result.push_back(std::move(root));
  }
  std::sort(result.begin(), result.end(),
            [](const AlgebraicReal& x, const AlgebraicReal& y) { return compare(x, y) < 0; });
  // Neighbouring bisection spans may share an endpoint.
  for (std::size_t i = 1; i < result.size(); ++i) {
    while (!(result[i - 1].hi < result[i].lo)) {
      result[i - 1] = refine(result[i - 1], Rational((result[i - 1].hi - result[i - 1].lo) / 2));
      result[i] = refine(result[i], Rational((result[i].hi - result[i].lo) / 2));
    }
  }
  return result;
}

std::vector<AlgebraicReal> real_roots(const UniPoly& p) {
  if (p.is_zero()) throw ComputationError("identically zero");
  if (p.degree() == 0) return {};
  Rational bound = cauchy_bound(p);
  return isolate_roots(p, -bound, bound);
}

AlgebraicReal refine(const AlgebraicReal& r, const Rational& width) {
  if (r.is_rational) return r;
  if (width <= 0) throw ComputationError("refine width must be positive");
  AlgebraicReal out = r;
  shrink(out.defining_poly, out.lo, out.hi, width);
  return out;
}

int sign_at(const UniPoly& q, const AlgebraicReal& r) {
  if (q.is_zero()) return 0;
  if (r.is_rational) return sign(q(*r.rational_value));
  // Common root with the defining polynomial inside the interval means q(r) = 0.
  UniPoly g = gcd(q, r.defining_poly);
  if (g.degree() > 0 && sturm_count(g, r.lo, r.hi) > 0) return 0;
  AlgebraicReal cur = r;
  while (true) {
    if (q(cur.lo) != 0 && q(cur.hi) != 0 && sturm_count(q, cur.lo, cur.hi) == 0) {
      return sign(q(cur.lo));
    }
    cur = refine(cur, Rational((cur.hi - cur.lo) / 4));
  }
}

int compare(const AlgebraicReal& a, const Rational& b) {
  if (a.is_rational) return sign(Rational(*a.rational_value - b));
  if (b < a.lo) return 1;
  if (b > a.hi) return -1;
  // b inside an interval whose endpoints are not roots; a != b since a is irrational.
  int sb = sign(a.defining_poly(b));
  int slo = sign(a.defining_poly(a.lo));
  // root lies in (lo, b) iff the sign flips on that half
  return sb == slo ? 1 : -1;
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational) return -compare(b, *a.rational_value);
  if (b.is_rational) return compare(a, *b.rational_value);
  // Each interval holds exactly one root of its polynomial, so the roots agree
  // iff the gcd has a root in the overlap. Irrational defining polynomials have
  // no rational roots, so the overlap endpoints are never roots of the gcd.
  Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  if (lo < hi) {
    UniPoly g = gcd(a.defining_poly, b.defining_poly);
    if (g.degree() > 0 && sturm_count(g, lo, hi) > 0) return 0;
  }
  AlgebraicReal x = a, y = b;
  while (!(x.hi < y.lo) && !(y.hi < x.lo)) {
    x = refine(x, Rational((x.hi - x.lo) / 2));
    y = refine(y, Rational((y.hi - y.lo) / 2));
  }
  return x.hi < y.lo ? -1 : 1;
}

int multiplicity(const UniPoly& p, const AlgebraicReal& r) {
  if (p.is_zero()) throw ComputationError("multiplicity in the zero polynomial");
  int k = 0;
  UniPoly d = p;
  while (!d.is_zero() && sign_at(d, r) == 0) {
    ++k;
    d = d.derivative();
  }
  return k;
}

Rational rational_between(const AlgebraicReal& a, const AlgebraicReal& b) {
  AlgebraicReal x = a, y = b;
  while (!(x.hi < y.lo)) {
    x = refine(x, Rational((x.hi - x.lo) / 2));
    y = refine(y, Rational((y.hi - y.lo) / 2));
    if (x.is_rational && y.is_rational && !(x.hi < y.lo)) {
      throw ComputationError("rational_between requires a < b");
    }
  }
  return (x.hi + y.lo) / 2;
}

std::vector<Rational> rationals_between(const AlgebraicReal& a, const AlgebraicReal& b, int count,
                                        const std::vector<AlgebraicReal>& avoid) {
  Rational mid = rational_between(a, b);
  AlgebraicReal m = AlgebraicReal::from_rational(mid);
  Rational lo = rational_between(a, m), hi = rational_between(m, b);
  std::vector<Rational> out;
  Rational step = (hi - lo) / (count + 1);
  for (int k = 1; k <= count; ++k) {
    Rational x = lo + step * k;
    // nudge off any avoided point; the nudges stay inside (x - step/2, x + step/2)
    Rational nudge = step / 3;
    bool clash = true;
    while (clash) {
      clash = false;
      for (const auto& p : avoid) {
        if (compare(p, x) == 0) {
          x += nudge;
          nudge /= 2;
          clash = true;
          break;
        }
      }
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace stabwalls
