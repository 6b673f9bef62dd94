#include "doctest.h"
#include "oracles.hpp"
#include "stabwalls/variety.hpp"

using namespace stabwalls;

namespace {

NumClass cls(long a, long b) { return NumClass({Rational(a), Rational(b)}); }

NumClass random_class() { return NumClass({oracle::rand_rational(9, 4), oracle::rand_rational(9, 4)}); }

const NumClass H0 = cls(1, 0), H1 = cls(0, 1);

}  // namespace

TEST_SUITE("variety") {
  TEST_CASE("bundled files load") {
    CHECK(oracle::zb1().dim == 3);
    CHECK(oracle::zb2().picard_rank == 2);
    CHECK(oracle::zb2().basis_labels == std::vector<std::string>{"H0", "H1"});
    auto roundtrip = variety_from_json(variety_to_json(oracle::zb2()));
    CHECK(roundtrip.intersection == oracle::zb2().intersection);
  }

  TEST_CASE("intersect examples") {
    std::vector<NumClass> a{H0, H0, H1};
    CHECK(intersect(oracle::zb1(), a) == 1);
    CHECK(intersect(oracle::zb2(), a) == 3);
    std::vector<NumClass> z{H0, NumClass::zero(2), H1};
    CHECK(intersect(oracle::zb2(), z) == 0);
    std::vector<NumClass> two{H0, H1};
    CHECK_THROWS_AS(intersect(oracle::zb1(), two), ComputationError);
  }

  TEST_CASE("intersect matches brute-force expansion, symmetric and multilinear") {
    for (const auto* v : {&oracle::zb1(), &oracle::zb2()}) {
      for (int trial = 0; trial < 20; ++trial) {
        NumClass x = random_class(), y = random_class(), z = random_class(), w = random_class();
        std::vector<NumClass> xyz{x, y, z}, zxy{z, x, y}, yzx{y, x, z};
        Rational val = intersect(*v, xyz);
        CHECK(val == oracle::brute_intersect(*v, {x.coords, y.coords, z.coords}));
        CHECK(val == intersect(*v, zxy));
        CHECK(val == intersect(*v, yzx));
        Rational c = oracle::rand_rational(7, 3);
        std::vector<NumClass> lin{x + c * w, y, z}, wyz{w, y, z};
        CHECK(intersect(*v, lin) == val + c * intersect(*v, wyz));
      }
    }
  }

  TEST_CASE("pair_todd examples") {
    std::vector<NumClass> h0h0{H0, H0};
    CHECK(pair_todd(oracle::zb2(), 1, h0h0) == 0);
    std::vector<NumClass> d{cls(3, -1)};
    CHECK(pair_todd(oracle::zb2(), 2, d) == 6);
    std::vector<NumClass> zeros{NumClass::zero(2)};
    CHECK(pair_todd(oracle::zb1(), 2, zeros) == 0);
    std::vector<NumClass> none;
    CHECK(pair_todd(oracle::zb1(), 3, none) == 1);
    CHECK(pair_todd(oracle::zb2(), 3, none) == 0);
    std::vector<NumClass> three{H0, H0, H1};
    CHECK(pair_todd(oracle::zb2(), 0, three) == 3);
    CHECK_THROWS_AS(pair_todd(oracle::zb2(), 2, three), ComputationError);
  }

  TEST_CASE("segment_form examples") {
    Segment s{H0, H1};
    CHECK(segment_form(oracle::zb1(), s, cls(2, -1), 2) == UniPoly{Rational(-1), Rational(4), Rational(-1)});
    NumClass xi({Rational(3, 2), Rational(-1, 2)});
    CHECK(segment_form(oracle::zb2(), s, xi, 2) ==
          UniPoly{Rational(-1), Rational(6), Rational(-2)} * Rational(3, 2));
    CHECK(segment_form(oracle::zb2(), s, NumClass::zero(2), 2).is_zero());
  }

  TEST_CASE("segment_form endpoint values") {
    for (int trial = 0; trial < 10; ++trial) {
      Segment s{random_class(), random_class()};
      NumClass x = random_class(), r = random_class();
      std::vector<NumClass> rest{r};
      UniPoly f = segment_form(oracle::zb2(), s, x, 1, rest);
      std::vector<NumClass> at0{x, s.h0, r}, at1{x, s.h1, r};
      CHECK(f(Rational(0)) == intersect(oracle::zb2(), at0));
      CHECK(f(Rational(1)) == intersect(oracle::zb2(), at1));
      UniPoly g = segment_form(oracle::zb1(), s, x, 2);
      CHECK(g(Rational(1)) == oracle::brute_intersect(oracle::zb1(), {x.coords, s.h1.coords, s.h1.coords}));
    }
  }

  TEST_CASE("Hodge index signature at declared ample classes") {
    for (const auto* v : {&oracle::zb1(), &oracle::zb2()}) {
      for (const auto& h : v->ample) CHECK(hodge_index_holds(*v, h));
    }
  }

  TEST_CASE("Riemann-Roch polynomial matches the Koszul oracle") {
    for (int trial = 0; trial < 25; ++trial) {
      long p = oracle::rand_int(-6, 6), q = oracle::rand_int(-6, 6);
      std::vector<Rational> pt{Rational(p), Rational(q)};
      CHECK(riemann_roch_polynomial(oracle::zb1())(pt) == oracle::koszul_chi(1, 1, Rational(p), Rational(q)));
      CHECK(riemann_roch_polynomial(oracle::zb2())(pt) == oracle::koszul_chi(3, 3, Rational(p), Rational(q)));
    }
  }

  TEST_CASE("malformed variety input") {
    Json bad = variety_to_json(oracle::zb1());
    bad["intersection"]["3,0,1"] = "1";
    CHECK_THROWS_AS(variety_from_json(bad), InputError);
    Json bad2 = variety_to_json(oracle::zb1());
    bad2["intersection"]["2,1"] = 0.5;
    CHECK_THROWS_AS(variety_from_json(bad2), InputError);
    Json bad3 = variety_to_json(oracle::zb1());
    bad3.erase("dim");
    CHECK_THROWS_AS(variety_from_json(bad3), InputError);
  }
}
