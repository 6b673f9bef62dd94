#include "stabwalls/sheaf.hpp"

#include <optional>

#include "stabwalls/errors.hpp"

namespace stabwalls {

SheafNumerics line_bundle_form(const VarietyData& v, const NumClass& l) {
  if (l.size() != v.picard_rank) throw InputError("line bundle class has wrong length");
  SheafNumerics s;
  s.rank = 1;
  s.form = riemann_roch_polynomial(v).shifted(l.coords);
  s.label = "O" + l.to_string();
  return s;
}

SheafNumerics zero_sheaf(const VarietyData& v) {
  SheafNumerics s;
  s.rank = 0;
  s.form = MultiPoly(v.picard_rank);
  s.label = "0";
  return s;
}

SheafNumerics direct_sum(const SheafNumerics& a, const SheafNumerics& b) {
  SheafNumerics s;
  s.rank = a.rank + b.rank;
  s.form = a.form + b.form;
  s.label = a.label + " ⊕ " + b.label;
  s.formal = a.formal || b.formal;
  return s;
}

SheafNumerics extension_middle(const SheafNumerics& sub, const SheafNumerics& quot) {
  SheafNumerics s = direct_sum(sub, quot);
  s.label = "ext(" + sub.label + ", " + quot.label + ")";
  return s;
}

SheafNumerics twist(const SheafNumerics& e, const NumClass& d) {
  SheafNumerics s = e;
  s.form = e.form.shifted(d.coords);
  s.label = e.label + "(" + d.to_string() + ")";
  return s;
}

SheafNumerics formal_difference(const SheafNumerics& plus, const SheafNumerics& minus) {
  SheafNumerics s;
  s.rank = plus.rank - minus.rank;
  s.form = plus.form - minus.form;
  s.label = plus.label + " − " + minus.label;
  s.formal = true;
  return s;
}

SheafNumerics scaled(const SheafNumerics& e, const Rational& k) {
  SheafNumerics s = e;
  s.rank *= k;
  s.form *= k;
  s.label = to_string(k) + "·" + e.label;
  s.formal = e.formal || k < 0;
  return s;
}

Rational hilb_pairing(const VarietyData& v, const SheafNumerics& e, int d, std::span<const NumClass> classes) {
  const int k = v.dim - d;
  if (d < 0 || d > v.dim || static_cast<int>(classes.size()) != k) throw ComputationError("hilb pairing arity mismatch");
  MultiPoly part = e.form.homogeneous_part(k);
  if (k == 0) return part.coeff(Exponent(static_cast<std::size_t>(v.picard_rank), 0));
  // d_j = sum_i t_i M_i[j]; the t_1...t_k coefficient is the multilinear pairing.
  std::vector<MultiPoly> images;
  for (int j = 0; j < v.picard_rank; ++j) {
    MultiPoly img(k);
    for (int i = 0; i < k; ++i) {
      Exponent ex(static_cast<std::size_t>(k), 0);
      ex[static_cast<std::size_t>(i)] = 1;
      img.add_term(ex, classes[static_cast<std::size_t>(i)][j]);
    }
    images.push_back(std::move(img));
  }
  if (part.is_zero()) return Rational(0);
  return part.compose(images).coeff(Exponent(static_cast<std::size_t>(k), 1));
}

Rational rank_of(const VarietyData& v, const SheafNumerics& e) {
  if (v.ample.empty()) throw ComputationError("rank extraction needs a declared ample class");
  std::optional<Rational> rank;
  for (const auto& h : v.ample) {
    std::vector<NumClass> hs(static_cast<std::size_t>(v.dim), h);
    Rational hn = intersect(v, hs);
    if (hn == 0) continue;
    Rational r = hilb_pairing(v, e, 0, hs) / hn;
    if (rank && *rank != r) throw ComputationError("degree-n part not a multiple of the intersection form");
    rank = r;
  }
  if (!rank) throw ComputationError("no declared ample class has positive top self-intersection");
  return *rank;
}

NumClass c1_of(const VarietyData& v, const SheafNumerics& e) {
  // For each basis monomial M of degree n - 1: c1 . M = hilb_1 . M - r td_1 . M.
  Matrix a;
  std::vector<Rational> b;
  for (const auto& m : exponents_of_degree(v.picard_rank, v.dim - 1)) {
    std::vector<NumClass> ms;
    for (int j = 0; j < v.picard_rank; ++j) {
      for (int k = 0; k < m[static_cast<std::size_t>(j)]; ++k) ms.push_back(NumClass::basis(v.picard_rank, j));
    }
    std::vector<Rational> row;
    for (int j = 0; j < v.picard_rank; ++j) {
      std::vector<NumClass> cls{NumClass::basis(v.picard_rank, j)};
      cls.insert(cls.end(), ms.begin(), ms.end());
      row.push_back(intersect(v, cls));
    }
    a.push_back(std::move(row));
    b.push_back(hilb_pairing(v, e, 1, ms) - e.rank * pair_todd(v, 1, ms));
  }
  auto x = solve(a, b);
  if (!x) throw ComputationError("degenerate intersection pairing");
  return NumClass(std::move(*x));
}

Rational ch2_pairing(const VarietyData& v, const SheafNumerics& e, std::span<const NumClass> classes) {
  if (static_cast<int>(classes.size()) != v.dim - 2) throw ComputationError("ch2 pairing arity mismatch");
  NumClass c1 = c1_of(v, e);
  std::vector<NumClass> with_c1{c1};
  with_c1.insert(with_c1.end(), classes.begin(), classes.end());
  return hilb_pairing(v, e, 2, classes) - pair_todd(v, 1, with_c1) - e.rank * pair_todd(v, 2, classes);
}

Rational bogomolov(const VarietyData& v, const SheafNumerics& e, const NumClass& h) {
  if (e.rank <= 0) throw ComputationError("discriminant needs positive rank");
  std::vector<NumClass> hs(static_cast<std::size_t>(v.dim - 2), h);
  NumClass c1 = c1_of(v, e);
  std::vector<NumClass> sq{c1, c1};
  sq.insert(sq.end(), hs.begin(), hs.end());
  return 2 * e.rank * ch2_pairing(v, e, hs) - intersect(v, sq);
}

UniPoly hilbert_polynomial(const SheafNumerics& e, const NumClass& h) {
  std::vector<MultiPoly> images;
  for (int j = 0; j < h.size(); ++j) {
    MultiPoly img(1);
    img.add_term({1}, h[j]);
    images.push_back(std::move(img));
  }
  return e.form.compose(images).to_unipoly();
}

bool integer_valued_on_box(const SheafNumerics& e, int radius) {
  const int rho = e.form.nvars();
  std::vector<Rational> pt(static_cast<std::size_t>(rho), Rational(-radius));
  while (true) {
    Rational val = e.form(pt);
    if (val.get_den() != 1) return false;
    int i = 0;
    while (i < rho && pt[static_cast<std::size_t>(i)] == radius) {
      pt[static_cast<std::size_t>(i)] = -radius;
      ++i;
    }
    if (i == rho) return true;
    pt[static_cast<std::size_t>(i)] += 1;
  }
}

}  // namespace stabwalls
