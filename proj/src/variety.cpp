#include "stabwalls/variety.hpp"

#include <algorithm>
#include <numeric>

#include "stabwalls/errors.hpp"

namespace stabwalls {

NumClass NumClass::basis(int rank, int index) {
  NumClass c = zero(rank);
  c.coords[static_cast<std::size_t>(index)] = 1;
  return c;
}

bool NumClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; });
}

NumClass& NumClass::operator+=(const NumClass& o) {
  if (o.size() != size()) throw ComputationError("class arity mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

NumClass& NumClass::operator-=(const NumClass& o) {
  if (o.size() != size()) throw ComputationError("class arity mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

NumClass& NumClass::operator*=(const Rational& c) {
  for (auto& q : coords) q *= c;
  return *this;
}

std::string NumClass::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += stabwalls::to_string(coords[i]);
  }
  return out + ")";
}

Rational VarietyData::todd_value(int e, const Exponent& m) const {
  if (e == 0) {
    auto it = intersection.find(m);
    return it == intersection.end() ? Rational(0) : it->second;
  }
  if (e < 0 || e > dim) throw ComputationError("Todd degree out of range");
  if (static_cast<std::size_t>(e) >= todd.size()) return Rational(0);
  const auto& table = todd[static_cast<std::size_t>(e)];
  auto it = table.find(m);
  return it == table.end() ? Rational(0) : it->second;
}

void VarietyData::validate() const {
  if (dim < 1) throw InputError("variety dimension must be positive");
  if (picard_rank < 1) throw InputError("Picard rank must be positive");
  if (static_cast<int>(basis_labels.size()) != picard_rank) throw InputError("basis has " + std::to_string(basis_labels.size()) + " labels, expected " + std::to_string(picard_rank));
  auto check_keys = [&](const std::map<Exponent, Rational>& table, int degree, const std::string& what) {
    for (const auto& [e, q] : table) {
      if (static_cast<int>(e.size()) != picard_rank || std::accumulate(e.begin(), e.end(), 0) != degree ||
          std::any_of(e.begin(), e.end(), [](int k) { return k < 0; })) {
        throw InputError(what + ": bad multidegree key");
      }
    }
  };
  check_keys(intersection, dim, "intersection");
  for (std::size_t e = 1; e < todd.size(); ++e) check_keys(todd[e], dim - static_cast<int>(e), "todd " + std::to_string(e));
  for (const auto& h : ample) {
    if (h.size() != picard_rank) throw InputError("ample class has wrong length");
  }
}

NumClass Segment::at(const Rational& t) const { return (Rational(1) - t) * h0 + t * h1; }

MultiPoly linear_form(const NumClass& c) {
  MultiPoly p(c.size());
  for (int j = 0; j < c.size(); ++j) {
    Exponent e(static_cast<std::size_t>(c.size()), 0);
    e[static_cast<std::size_t>(j)] = 1;
    p.add_term(e, c[j]);
  }
  return p;
}

namespace {

// Coefficients of the product of the linear forms, paired against a table.
Rational pair_product(const VarietyData& v, int e, std::span<const NumClass> classes) {
  MultiPoly prod = MultiPoly::constant(v.picard_rank, Rational(1));
  for (const auto& c : classes) {
    if (c.size() != v.picard_rank) throw ComputationError("class has " + std::to_string(c.size()) + " coordinates, expected " + std::to_string(v.picard_rank));
    prod = prod * linear_form(c);
  }
  Rational total(0);
  for (const auto& [m, coeff] : prod.terms()) total += coeff * v.todd_value(e, m);
  return total;
}

}  // namespace

Rational intersect(const VarietyData& v, std::span<const NumClass> classes) {
  if (static_cast<int>(classes.size()) != v.dim) {
    throw ComputationError("intersect needs " + std::to_string(v.dim) + " classes, got " + std::to_string(classes.size()));
  }
  return pair_product(v, 0, classes);
}

Rational pair_todd(const VarietyData& v, int e, std::span<const NumClass> classes) {
  if (e < 0 || e > v.dim) throw ComputationError("Todd degree out of range");
  if (static_cast<int>(classes.size()) != v.dim - e) {
    throw ComputationError("td_" + std::to_string(e) + " pairs with " + std::to_string(v.dim - e) + " classes, got " + std::to_string(classes.size()));
  }
  return pair_product(v, e, classes);
}

UniPoly segment_form(const VarietyData& v, const Segment& s, const NumClass& x, int k, std::span<const NumClass> rest) {
  if (k < 0 || k + static_cast<int>(rest.size()) + 1 != v.dim) throw ComputationError("segment_form arity mismatch");
  std::vector<Rational> ts, vals;
  for (int i = 0; i <= k; ++i) {
    Rational t(i, std::max(k, 1));
    t.canonicalize();
    std::vector<NumClass> classes{x};
    NumClass h = s.at(t);
    for (int j = 0; j < k; ++j) classes.push_back(h);
    classes.insert(classes.end(), rest.begin(), rest.end());
    ts.push_back(t);
    vals.push_back(intersect(v, classes));
  }
  return interpolate(ts, vals);
}

Matrix hodge_matrix(const VarietyData& v, const NumClass& h) {
  if (v.dim < 2) throw ComputationError("the Hodge pairing needs dimension at least 2");
  Matrix m(static_cast<std::size_t>(v.picard_rank), std::vector<Rational>(static_cast<std::size_t>(v.picard_rank)));
  for (int i = 0; i < v.picard_rank; ++i) {
    for (int j = 0; j < v.picard_rank; ++j) {
      std::vector<NumClass> classes{NumClass::basis(v.picard_rank, i), NumClass::basis(v.picard_rank, j)};
      for (int k = 0; k < v.dim - 2; ++k) classes.push_back(h);
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = intersect(v, classes);
    }
  }
  return m;
}

bool hodge_index_holds(const VarietyData& v, const NumClass& h) {
  Inertia in = inertia(hodge_matrix(v, h));
  return in.positive == 1 && in.zero == 0 && in.negative == v.picard_rank - 1;
}

MultiPoly riemann_roch_polynomial(const VarietyData& v) {
  MultiPoly out(v.picard_rank);
  for (int e = 0; e <= v.dim; ++e) {
    int k = v.dim - e;
    Rational inv_fact(Integer(1), factorial(k));
    for (const auto& m : exponents_of_degree(v.picard_rank, k)) {
      Rational value = v.todd_value(e, m);
      if (value == 0) continue;
      out.add_term(m, Rational(value * Rational(multinomial(m)) * inv_fact));
    }
  }
  return out;
}

}  // namespace stabwalls
