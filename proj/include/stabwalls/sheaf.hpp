#pragma once

#include <span>
#include <string>

#include "stabwalls/multipoly.hpp"
#include "stabwalls/unipoly.hpp"
#include "stabwalls/variety.hpp"

namespace stabwalls {

// Numerical data of a (possibly formal) sheaf. The Hilbert form is the
// polynomial d -> chi(E(sum d_j B_j)) on the Picard lattice; everything else
// is extracted from it.
struct SheafNumerics {
  Rational rank;
  MultiPoly form;
  std::string label;
  // Set for formal differences, whose rank may be zero or negative.
  bool formal = false;

  Rational chi(const NumClass& d) const { return form(d.coords); }
};

SheafNumerics line_bundle_form(const VarietyData& v, const NumClass& l);
SheafNumerics zero_sheaf(const VarietyData& v);
SheafNumerics direct_sum(const SheafNumerics& a, const SheafNumerics& b);
SheafNumerics extension_middle(const SheafNumerics& sub, const SheafNumerics& quot);
SheafNumerics twist(const SheafNumerics& e, const NumClass& d);
SheafNumerics formal_difference(const SheafNumerics& plus, const SheafNumerics& minus);
SheafNumerics scaled(const SheafNumerics& e, const Rational& k);

// hilb_d(E) . M_1 ... M_{n-d}, read off the degree n-d part of the form by polarization.
Rational hilb_pairing(const VarietyData& v, const SheafNumerics& e, int d, std::span<const NumClass> classes);

Rational rank_of(const VarietyData& v, const SheafNumerics& e);
NumClass c1_of(const VarietyData& v, const SheafNumerics& e);
Rational ch2_pairing(const VarietyData& v, const SheafNumerics& e, std::span<const NumClass> classes);
// (2 r ch_2 - c_1^2) . H^{n-2}
Rational bogomolov(const VarietyData& v, const SheafNumerics& e, const NumClass& h);

// m -> chi(E(m H))
UniPoly hilbert_polynomial(const SheafNumerics& e, const NumClass& h);

// Integer values on the box [-radius, radius]^rho.
bool integer_valued_on_box(const SheafNumerics& e, int radius);

}  // namespace stabwalls
