#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "stabwalls/algebraic.hpp"
#include "stabwalls/bipoly.hpp"
#include "stabwalls/linalg.hpp"
#include "stabwalls/multipoly.hpp"

using namespace stabwalls;

namespace {

UniPoly random_poly(int max_degree, long bound) {
  for (;;) {
    int deg = static_cast<int>(oracle::rand_int(0, max_degree));
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(oracle::rand_int(-bound, bound));
    UniPoly p(c);
    if (!p.is_zero()) return p;
  }
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational(" 7 ") == Rational(7));
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK(to_decimal(Rational(2, 3), 4) == "0.6667");
    CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
  }

  TEST_CASE("unipoly basics and printing") {
    UniPoly p{Rational(-1), Rational(4), Rational(-1)};
    CHECK(p.degree() == 2);
    CHECK(p.primitive() == UniPoly{Rational(1), Rational(-4), Rational(1)});
    CHECK(p.primitive().to_string() == "λ² − 4λ + 1");
    CHECK(p.primitive().to_ascii("x") == "x^2 - 4*x + 1");
    CHECK(p.primitive_scale() == Rational(-1));
    UniPoly half{Rational(-3, 2), Rational(9), Rational(-3)};
    CHECK(half.primitive() == UniPoly{Rational(1), Rational(-6), Rational(2)});
    CHECK(half.primitive_scale() == Rational(-3, 2));
    CHECK(UniPoly().degree() == -1);
    CHECK_THROWS_AS(UniPoly::divmod(p, UniPoly()), ComputationError);
  }

  TEST_CASE("ring laws at random points") {
    for (int trial = 0; trial < 20; ++trial) {
      UniPoly p = random_poly(5, 20), q = random_poly(5, 20);
      Rational x = oracle::rand_rational(50, 17);
      CHECK((p + q)(x) == p(x) + q(x));
      CHECK((p * q)(x) == p(x) * q(x));
      CHECK((p - q)(x) == p(x) - q(x));
      auto [quo, rem] = UniPoly::divmod(p * q + q, q);
      CHECK(rem.is_zero());
      CHECK(quo == p + UniPoly::constant(Rational(1)));
    }
  }

  TEST_CASE("gcd, squarefree and interpolation") {
    UniPoly a = UniPoly::linear_root(Rational(1, 2)) * UniPoly::linear_root(Rational(3));
    UniPoly b = UniPoly::linear_root(Rational(3)) * UniPoly::linear_root(Rational(-2));
    CHECK(gcd(a, b) == UniPoly::linear_root(Rational(3)));
    UniPoly sq = a * a * UniPoly::linear_root(Rational(7));
    CHECK(sq.squarefree() == oracle::naive_squarefree(sq).primitive());
    std::vector<Rational> xs{0, 1, 2, 5}, ys;
    for (const auto& x : xs) ys.push_back(sq(x));
    UniPoly cubic = random_poly(3, 9);
    ys.clear();
    for (const auto& x : xs) ys.push_back(cubic(x));
    CHECK(interpolate(xs, ys) == cubic);
  }

  TEST_CASE("sturm_count examples") {
    UniPoly zb1{Rational(1), Rational(-4), Rational(1)};
    CHECK(sturm_count(zb1, Rational(0), Rational(1)) == 1);
    CHECK(sturm_count(UniPoly::identity(), Rational(1), Rational(2)) == 0);
    CHECK_THROWS_WITH_AS(sturm_count(UniPoly(), Rational(0), Rational(1)), "indeterminate root count: zero polynomial",
                         ComputationError);
    try {
      (void)sturm_count(UniPoly::identity(), Rational(0), Rational(1));
      FAIL("expected an endpoint error");
    } catch (const EndpointRootError& e) {
      Rational d = e.suggested_perturbation();
      CHECK(d < 0);
      CHECK(sturm_count(UniPoly::identity(), d, Rational(1)) == 1);
    }
  }

  TEST_CASE("sturm_count matches the sampling oracle on random polynomials") {
    for (int trial = 0; trial < 100; ++trial) {
      UniPoly p = random_poly(4, 9);
      if (p.degree() < 1) continue;
      Rational a = oracle::rand_rational(50, 7) / 10 - 6, b = oracle::rand_rational(50, 7) / 10 + 6;
      if (p(a) == 0 || p(b) == 0) continue;
      auto cells = oracle::sampled_roots(oracle::naive_squarefree(p), a, b, 2000);
      CHECK_MESSAGE(sturm_count(p, a, b) == static_cast<int>(cells.size()), p.to_ascii());
    }
  }

  TEST_CASE("isolate_roots examples") {
    auto r1 = isolate_roots(UniPoly{Rational(-1), Rational(4), Rational(-1)}, Rational(0), Rational(1));
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].defining_poly == UniPoly{Rational(1), Rational(-4), Rational(1)});
    CHECK_FALSE(r1[0].is_rational);
    CHECK(r1[0].closed_form.value() == "2 − √3");
    CHECK(std::abs(r1[0].approx() - (2 - std::sqrt(3.0))) < 1e-12);

    auto r2 = isolate_roots(UniPoly{Rational(1), Rational(-10), Rational(4)}, Rational(0), Rational(1));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].closed_form.value() == "(5 − √21)/4");
    CHECK(std::abs(r2[0].approx() - (5 - std::sqrt(21.0)) / 4) < 1e-12);

    auto r3 = isolate_roots(UniPoly{Rational(0), Rational(-1), Rational(2)}, Rational(0), Rational(1));
    REQUIRE(r3.size() == 2);
    CHECK(r3[0].is_rational);
    CHECK(*r3[0].rational_value == 0);
    CHECK(*r3[1].rational_value == Rational(1, 2));
    CHECK(r3[1].lo == r3[1].hi);

    CHECK_THROWS_WITH_AS(isolate_roots(UniPoly(), Rational(0), Rational(1)), "identically zero", ComputationError);
    // repeated and mixed factors
    UniPoly mixed = UniPoly{Rational(-2), Rational(0), Rational(1)} * UniPoly{Rational(-2), Rational(0), Rational(1)} *
                    UniPoly::linear_root(Rational(1, 3)) * UniPoly{Rational(-1), Rational(-1), Rational(1), Rational(1)};
    auto r4 = real_roots(mixed);
    REQUIRE(r4.size() == 5);  // -√2, -1, 1/3, 1, √2
    CHECK(r4[1].is_rational);
    CHECK(*r4[1].rational_value == -1);
    CHECK(r4[4].closed_form.value() == "√2");
  }

  TEST_CASE("isolate_roots matches the sampling oracle in count and membership") {
    int checked = 0;
    for (int trial = 0; checked < 100; ++trial) {
      UniPoly p = random_poly(4, 9);
      if (p.degree() < 1) continue;
      ++checked;
      Rational a(-11), b(11);
      auto roots = isolate_roots(p, a, b);
      auto cells = oracle::sampled_roots(oracle::naive_squarefree(p), a, b, 2000);
      REQUIRE_MESSAGE(roots.size() == cells.size(), p.to_ascii());
      for (std::size_t i = 0; i < roots.size(); ++i) {
        CHECK(sturm_count(roots[i].defining_poly, roots[i].lo - pow10_inv(30), roots[i].hi + pow10_inv(30)) == 1);
        if (i > 0) CHECK(roots[i - 1].hi < roots[i].lo);
        // the oracle cell and the isolating interval overlap
        CHECK(roots[i].lo <= cells[i].hi);
        CHECK(cells[i].lo <= roots[i].hi);
        if (roots[i].is_rational) CHECK(p(*roots[i].rational_value) == 0);
      }
    }
  }

  TEST_CASE("refine") {
    auto r = isolate_roots(UniPoly{Rational(1), Rational(-4), Rational(1)}, Rational(0), Rational(1)).front();
    auto fine = refine(r, pow10_inv(6));
    CHECK(fine.hi - fine.lo <= pow10_inv(6));
    Rational approx = parse_rational("0.2679491924311227");
    CHECK(fine.lo <= approx);
    CHECK(approx <= fine.hi);
    auto finer = refine(fine, pow10_inv(6) / 2);
    CHECK(fine.lo <= finer.lo);
    CHECK(finer.hi <= fine.hi);
    auto half = refine(AlgebraicReal::from_rational(Rational(1, 2)), pow10_inv(3));
    CHECK(half.lo == Rational(1, 2));
    CHECK(half.hi == Rational(1, 2));
    CHECK(refine(r, pow10_inv(8)).decimal(8) == "0.26794919");
  }

  TEST_CASE("sign_at and compare") {
    auto r = isolate_roots(UniPoly{Rational(1), Rational(-4), Rational(1)}, Rational(0), Rational(1)).front();
    CHECK(sign_at(UniPoly{Rational(1), Rational(-4), Rational(1)}, r) == 0);
    CHECK(sign_at(UniPoly::linear_root(Rational(1, 4)), r) == 1);
    CHECK(sign_at(UniPoly::linear_root(Rational(3, 10)), r) == -1);
    // 2λ² − 6λ + 1 has root (3 − √7)/2 ≈ 0.177 < 2 − √3
    auto s = isolate_roots(UniPoly{Rational(1), Rational(-6), Rational(2)}, Rational(0), Rational(1)).front();
    CHECK(s.closed_form.value() == "(3 − √7)/2");
    CHECK(compare(s, r) == -1);
    CHECK(compare(r, s) == 1);
    CHECK(compare(r, r) == 0);
    UniPoly scaled = UniPoly{Rational(1), Rational(-4), Rational(1)} * UniPoly::linear_root(Rational(5));
    auto r_again = isolate_roots(scaled, Rational(0), Rational(1)).front();
    CHECK(compare(r, r_again) == 0);
    CHECK(compare(r, Rational(1, 4)) == 1);
    CHECK(multiplicity(UniPoly{Rational(1), Rational(-4), Rational(1)} * UniPoly{Rational(1), Rational(-4), Rational(1)}, r) == 2);
    CHECK(multiplicity(UniPoly::identity(), r) == 0);
    Rational q = rational_between(s, r);
    CHECK(compare(s, q) == -1);
    CHECK(compare(r, q) == 1);
  }

  TEST_CASE("cauchy bound dominates roots") {
    for (int trial = 0; trial < 30; ++trial) {
      UniPoly p = random_poly(4, 30);
      if (p.degree() < 1) continue;
      Rational bound = cauchy_bound(p);
      CHECK(real_roots(p).size() == isolate_roots(p, -bound, bound).size());
      CHECK(p(bound) != 0);
    }
  }

  TEST_CASE("bipoly specialization commutes") {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::vector<Rational>> c(4, std::vector<Rational>(3));
      for (auto& row : c)
        for (auto& v : row) v = oracle::rand_rational(9, 4);
      BiPoly p(c);
      Rational m = oracle::rand_rational(9, 5), t = oracle::rand_rational(9, 5);
      CHECK(p.at_t(t)(m) == p.at_m(m)(t));
      BiPoly q(c);
      q *= Rational(2);
      CHECK((p + p) == q);
      CHECK((p * q)(m, t) == p(m, t) * q(m, t));
    }
  }

  TEST_CASE("multipoly composition and homogeneous parts") {
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    MultiPoly p = (x + y).pow(3) + x * Rational(2) + MultiPoly::constant(2, Rational(5));
    CHECK(p.total_degree() == 3);
    CHECK(p.homogeneous_part(3).coeff({2, 1}) == 3);
    std::vector<Rational> pt{Rational(1, 2), Rational(-3)};
    std::vector<Rational> shift{Rational(2), Rational(1, 3)};
    std::vector<Rational> moved{Rational(5, 2), Rational(-8, 3)};
    CHECK(p.shifted(shift)(pt) == p(moved));
    CHECK(exponents_of_degree(3, 2).size() == 6);
    CHECK(multinomial({2, 1, 1}) == 12);
    CHECK(binomial(5, 2) == 10);
  }

  TEST_CASE("linear algebra") {
    Matrix a{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    auto x = solve(a, {Rational(3), Rational(5)});
    REQUIRE(x);
    CHECK((*x)[0] == Rational(4, 5));
    CHECK((*x)[1] == Rational(7, 5));
    CHECK_FALSE(solve(Matrix{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, {Rational(1), Rational(2)}));
    CHECK(determinant(a) == 5);
    CHECK(characteristic_polynomial(a) == UniPoly{Rational(5), Rational(-5), Rational(1)});
    Inertia hyperbolic = inertia(Matrix{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
    CHECK(hyperbolic.positive == 1);
    CHECK(hyperbolic.negative == 1);
  }
}
