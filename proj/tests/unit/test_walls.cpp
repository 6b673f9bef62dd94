#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "stabwalls/walls.hpp"

using namespace stabwalls;

namespace {

NumClass cls(long a, long b) { return NumClass({Rational(a), Rational(b)}); }

const Segment kSeg{cls(1, 0), cls(0, 1)};

SheafNumerics lb(const VarietyData& v, long a, long b) { return line_bundle_form(v, cls(a, b)); }

struct Example {
  const VarietyData* v;
  SheafNumerics e;
  std::vector<Candidate> candidates;
};

Example zb1_example() {
  const auto& v = oracle::zb1();
  return {&v, direct_sum(lb(v, 2, -1), lb(v, -2, 1)), {{"O(-2,1)", lb(v, -2, 1)}, {"O(2,-1)", lb(v, 2, -1)}}};
}

Example zb2_example() {
  const auto& v = oracle::zb2();
  return {&v, extension_middle(lb(v, 3, 0), lb(v, 0, 1)), {{"O(-1,1)", lb(v, -1, 1)}, {"O(3,0)", lb(v, 3, 0)}}};
}

// Random rank-2 or rank-3 sums of line bundles with all their line-bundle summands as candidates.
Example random_example() {
  const auto* v = oracle::rand_int(0, 1) ? &oracle::zb1() : &oracle::zb2();
  int parts = static_cast<int>(oracle::rand_int(2, 3));
  Example ex{v, zero_sheaf(*v), {}};
  for (int i = 0; i < parts; ++i) {
    long a = oracle::rand_int(-4, 4), b = oracle::rand_int(-4, 4);
    SheafNumerics l = lb(*v, a, b);
    ex.e = i == 0 ? l : direct_sum(ex.e, l);
    ex.candidates.push_back({"L" + std::to_string(i), l});
  }
  return ex;
}

}  // namespace

TEST_SUITE("walls") {
  TEST_CASE("xi classes") {
    auto ex = zb2_example();
    CHECK(xi(*ex.v, lb(*ex.v, -1, 1), ex.e) == NumClass({Rational(-5, 2), Rational(1, 2)}));
    CHECK(xi(*ex.v, lb(*ex.v, 3, 0), ex.e) == NumClass({Rational(3, 2), Rational(-1, 2)}));
    SheafNumerics same = direct_sum(lb(*ex.v, 1, 1), lb(*ex.v, 1, 1));
    CHECK(xi(*ex.v, lb(*ex.v, 1, 1), same).is_zero());
  }

  TEST_CASE("reduced difference") {
    auto ex = zb1_example();
    BiPoly d = reduced_difference(*ex.v, kSeg, lb(*ex.v, 2, -1), ex.e);
    // coefficient of m^{n-1}: -xi . H^2 / 2!
    CHECK(d.m_coeff(2) == UniPoly{Rational(1, 2), Rational(-2), Rational(1, 2)});
    CHECK(d.m_coeff(3).is_zero());
    SheafNumerics twice = direct_sum(lb(*ex.v, 1, 2), lb(*ex.v, 1, 2));
    CHECK(reduced_difference(*ex.v, kSeg, lb(*ex.v, 1, 2), twice).is_zero());
    // specialization at t = 1/2 against the direct Hilbert polynomials at the midpoint
    NumClass a = kSeg.at(Rational(1, 2));
    UniPoly direct = hilbert_polynomial(ex.e, a) * Rational(1, 2) - hilbert_polynomial(lb(*ex.v, 2, -1), a);
    CHECK(d.at_t(Rational(1, 2)) == direct);
  }

  TEST_CASE("slope coefficient proportional to the xi polynomial") {
    for (int trial = 0; trial < 10; ++trial) {
      auto ex = random_example();
      for (const auto& c : ex.candidates) {
        UniPoly slope = reduced_difference(*ex.v, kSeg, c.data, ex.e).m_coeff(ex.v->dim - 1);
        UniPoly xi_poly = segment_form(*ex.v, kSeg, xi(*ex.v, c.data, ex.e), ex.v->dim - 1);
        CHECK(slope == xi_poly * Rational(-1, 2));
      }
    }
  }

  TEST_CASE("zb1 walls") {
    auto ex = zb1_example();
    std::vector<Candidate> one{ex.candidates[1]};
    WallSet ws = wall_positions(*ex.v, kSeg, ex.e, one);
    REQUIRE(ws.walls.size() == 1);
    const Wall& w = ws.walls[0];
    CHECK(w.kind == WallKind::slope);
    CHECK(w.sign_change);
    CHECK_FALSE(w.position.is_rational);
    CHECK(w.position.defining_poly == UniPoly{Rational(1), Rational(-4), Rational(1)});
    CHECK(w.details[0].polynomial.to_string() == "λ² − 4λ + 1");
    CHECK(std::abs(w.position.approx() - (2 - std::sqrt(3.0))) < 1e-12);
    CHECK(wall_positions(*ex.v, kSeg, ex.e, {}).walls.empty());
  }

  TEST_CASE("zb1 chambers") {
    auto ex = zb1_example();
    ChamberReport rep = chambers(*ex.v, kSeg, ex.e, ex.candidates);
    REQUIRE(rep.walls.walls.size() == 1);
    CHECK(rep.walls.walls[0].witnesses == std::vector<std::string>{"O(-2,1)", "O(2,-1)"});
    REQUIRE(rep.chambers.size() == 2);
    for (const auto& ch : rep.chambers) {
      CHECK(ch.slope == Verdict::unstable);
      CHECK(ch.gieseker == Verdict::unstable);
    }
    CHECK(rep.chambers[0].candidates[0].profile.sign == 1);  // O(-2,1) on the H0 side
    CHECK(rep.chambers[1].candidates[1].profile.sign == 1);
    REQUIRE(rep.at_walls.size() == 1);
    CHECK(rep.at_walls[0].slope == Verdict::properly_semistable);
    CHECK_FALSE(rep.banner.empty());
  }

  TEST_CASE("zb2 walls and chambers") {
    auto ex = zb2_example();
    ChamberReport rep = chambers(*ex.v, kSeg, ex.e, ex.candidates);
    REQUIRE(rep.walls.walls.size() == 2);
    CHECK(rep.walls.walls[0].position.defining_poly == UniPoly{Rational(1), Rational(-10), Rational(4)});
    CHECK(rep.walls.walls[0].position.closed_form.value() == "(5 − √21)/4");
    CHECK(rep.walls.walls[0].witnesses == std::vector<std::string>{"O(-1,1)"});
    CHECK(rep.walls.walls[1].position.defining_poly == UniPoly{Rational(1), Rational(-6), Rational(2)});
    CHECK(rep.walls.walls[1].position.closed_form.value() == "(3 − √7)/2");
    CHECK(rep.walls.walls[1].witnesses == std::vector<std::string>{"O(3,0)"});
    for (const auto& w : rep.walls.walls) {
      CHECK(w.kind == WallKind::slope);
      CHECK_FALSE(w.position.is_rational);
    }
    REQUIRE(rep.chambers.size() == 3);
    CHECK(rep.chambers[0].slope == Verdict::unstable);
    CHECK(rep.chambers[1].slope == Verdict::stable);
    CHECK(rep.chambers[1].gieseker == Verdict::stable);
    CHECK(rep.chambers[2].slope == Verdict::unstable);
    CHECK(rep.chambers[2].candidates[1].id == "O(3,0)");
    CHECK(rep.chambers[2].candidates[1].profile.sign == 1);
    CHECK(rep.chambers[2].candidates[0].profile.sign == -1);
    CHECK(rep.at_walls[1].slope == Verdict::properly_semistable);
  }

  TEST_CASE("no candidates") {
    auto ex = zb2_example();
    ChamberReport rep = chambers(*ex.v, kSeg, ex.e, {});
    REQUIRE(rep.chambers.size() == 1);
    CHECK(rep.chambers[0].gieseker == Verdict::no_witness);
  }

  TEST_CASE("everywhere semistable witness") {
    const auto& v = oracle::zb2();
    SheafNumerics e = direct_sum(lb(v, 1, 1), lb(v, 1, 1));
    ChamberReport rep = chambers(v, kSeg, e, {{"same", lb(v, 1, 1)}});
    CHECK(rep.walls.walls.empty());
    CHECK(rep.walls.everywhere_semistable == std::vector<std::string>{"same"});
    CHECK(rep.chambers[0].gieseker == Verdict::properly_semistable);
  }

  TEST_CASE("Gieseker walls when the slope term vanishes identically") {
    // F = O(1,0) twisted line bundle data inside E = O(1,0) + O(1,0) shifted by a formal ch2 change:
    // take E = O(a) + O(b) with a + b = 2c and F = O(c), so slopes agree everywhere.
    const auto& v = oracle::zb2();
    SheafNumerics e = direct_sum(lb(v, 2, 0), lb(v, 0, 2));
    std::vector<Candidate> cands{{"O(1,1)", lb(v, 1, 1)}};
    auto q = profile_polynomials(v, kSeg, lb(v, 1, 1), e);
    CHECK(q[1].is_zero());
    CHECK_FALSE(q[2].is_zero());
    WallSet ws = wall_positions(v, kSeg, e, cands);
    for (const auto& w : ws.walls) {
      CHECK(w.kind == WallKind::gieseker);
      CHECK(w.defining_index == 2);
    }
    // oracle: the t -> ch2-level coefficient, computed from line-bundle intersections directly
    // q_2(t) = (F^2/2 - (A^2 + B^2)/4) . H(t) for td_1 = 0
    for (int k = 0; k <= 4; ++k) {
      Rational t(k, 4);
      t.canonicalize();
      NumClass h = kSeg.at(t);
      Rational expect = oracle::brute_intersect(v, {{1, 1}, {1, 1}, h.coords}) / 2 -
                        (oracle::brute_intersect(v, {{2, 0}, {2, 0}, h.coords}) +
                         oracle::brute_intersect(v, {{0, 2}, {0, 2}, h.coords})) / 4;
      CHECK(q[2](t) == expect);
    }
  }

  TEST_CASE("candidate validation") {
    auto ex = zb2_example();
    std::vector<Candidate> bad{{"big", ex.e}};
    CHECK_THROWS_AS(wall_positions(*ex.v, kSeg, ex.e, bad), InputError);
    std::vector<Candidate> dup{ex.candidates[0], ex.candidates[0]};
    CHECK_THROWS_AS(wall_positions(*ex.v, kSeg, ex.e, dup), InputError);
    CHECK_THROWS_AS(wall_positions(*ex.v, Segment{cls(1, 1), cls(1, 1)}, ex.e, ex.candidates), InputError);
  }

  TEST_CASE("next_wall") {
    auto ex = zb2_example();
    auto w = next_wall(*ex.v, kSeg, ex.e, ex.candidates, Rational(1, 8), 1);
    REQUIRE(w);
    CHECK(w->position.closed_form.value() == "(3 − √7)/2");
    CHECK_FALSE(next_wall(*ex.v, kSeg, ex.e, ex.candidates, Rational(1, 2), 1));
    auto back = next_wall(*ex.v, kSeg, ex.e, ex.candidates, Rational(1, 8), -1);
    REQUIRE(back);
    CHECK(back->position.closed_form.value() == "(5 − √21)/4");
    CHECK_FALSE(next_wall(*ex.v, kSeg, ex.e, ex.candidates, Rational(0), -1));
  }

  TEST_CASE("condition (*)") {
    auto ex2 = zb2_example();
    WallSet ws2 = wall_positions(*ex2.v, kSeg, ex2.e, ex2.candidates);
    StarReport r = check_star(*ex2.v, kSeg, lb(*ex2.v, 3, 0), ex2.e, ws2.walls[1].position);
    CHECK(r.holds);
    CHECK(r.sub_discriminant_sign == 0);
    CHECK(r.quotient_discriminant_sign == 0);
    StarReport off = check_star(*ex2.v, kSeg, lb(*ex2.v, 3, 0), ex2.e, ws2.walls[0].position);
    CHECK_FALSE(off.holds);
    CHECK_FALSE(off.slope_vanishes);

    auto ex1 = zb1_example();
    WallSet ws1 = wall_positions(*ex1.v, kSeg, ex1.e, ex1.candidates);
    CHECK(check_star(*ex1.v, kSeg, lb(*ex1.v, 2, -1), ex1.e, ws1.walls[0].position).holds);
    CHECK_THROWS_WITH_AS(check_star(*ex1.v, kSeg, ex1.e, ex1.e, ws1.walls[0].position), "quotient rank not positive",
                         ComputationError);
    // both zb1 witnesses satisfy (*) at their wall
    CHECK(check_star(*ex1.v, kSeg, lb(*ex1.v, -2, 1), ex1.e, ws1.walls[0].position).holds);
    // For O(-1,1) in zb2 the formal quotient E - O(-1,1) is not a line bundle:
    // its discriminant (2 ch2 - c1^2) . H(t) is 6 - 24t by direct expansion,
    // positive at (5 - sqrt 21)/4, so (*) fails there.
    StarReport other = check_star(*ex2.v, kSeg, lb(*ex2.v, -1, 1), ex2.e, ws2.walls[0].position);
    CHECK(other.slope_vanishes);
    CHECK(other.quotient_discriminant == UniPoly{Rational(6), Rational(-24)});
    CHECK(other.quotient_discriminant_sign == 1);
    CHECK_FALSE(other.holds);
  }

  TEST_CASE("require_star prunes failing witnesses") {
    // A rank-2 sub of a rank-3 sum whose discriminant is positive somewhere.
    const auto& v = oracle::zb1();
    SheafNumerics sub = direct_sum(lb(v, 3, -3), lb(v, -3, 3));
    SheafNumerics e = direct_sum(sub, lb(v, 1, -1));
    std::vector<Candidate> cands{{"sub", sub}, {"L", lb(v, 1, -1)}};
    WallSet plain = wall_positions(v, kSeg, e, cands);
    WallSet strict = wall_positions(v, kSeg, e, cands, {true, 1});
    std::size_t before = 0, after = 0, pruned = 0;
    for (const auto& w : plain.walls) before += w.witnesses.size();
    for (const auto& w : strict.walls) after += w.witnesses.size();
    for (const auto& w : strict.pruned) pruned += w.witnesses.size();
    CHECK(before == after + pruned);
    for (const auto& w : strict.walls) {
      for (const auto& id : w.witnesses) {
        const auto& data = id == "sub" ? sub : lb(v, 1, -1);
        CHECK(check_star(v, kSeg, data, e, w.position).holds);
      }
    }
  }

  TEST_CASE("chamber constancy and coherence on random examples") {
    for (int trial = 0; trial < 15; ++trial) {
      auto ex = random_example();
      ChamberReport rep = chambers(*ex.v, kSeg, ex.e, ex.candidates);
      std::vector<AlgebraicReal> avoid;
      for (const auto& w : rep.walls.walls) avoid.push_back(w.position);
      for (const auto& ch : rep.chambers) {
        for (const auto& t : rationals_between(ch.lo.value, ch.hi.value, 5, avoid)) {
          auto direct = verdicts_at(*ex.v, kSeg, ex.e, ex.candidates, t);
          for (std::size_t c = 0; c < direct.size(); ++c) {
            CHECK(direct[c].profile == ch.candidates[c].profile);
            CHECK(direct[c].slope_sign == ch.candidates[c].slope_sign);
          }
        }
      }
    }
  }

  TEST_CASE("parallel evaluation gives the same walls") {
    auto ex = random_example();
    WallSet a = wall_positions(*ex.v, kSeg, ex.e, ex.candidates);
    WallSet b = wall_positions(*ex.v, kSeg, ex.e, ex.candidates, {false, 4});
    REQUIRE(a.walls.size() == b.walls.size());
    for (std::size_t i = 0; i < a.walls.size(); ++i) {
      CHECK(compare(a.walls[i].position, b.walls[i].position) == 0);
      CHECK(a.walls[i].witnesses == b.walls[i].witnesses);
    }
  }

  TEST_CASE("polynomial optimization against sampling") {
    for (int trial = 0; trial < 50; ++trial) {
      UniPoly p{oracle::rand_rational(20, 3), oracle::rand_rational(20, 3), oracle::rand_rational(20, 3)};
      Extremum mx = maximize(p, Rational(0), Rational(1)), mn = minimize(p, Rational(0), Rational(1));
      Rational sampled_max = p(Rational(0)), sampled_min = p(Rational(0));
      for (int k = 1; k <= 1000; ++k) {
        Rational t(k, 1000);
        t.canonicalize();
        sampled_max = std::max(sampled_max, p(t));
        sampled_min = std::min(sampled_min, p(t));
      }
      CHECK(mx.value >= sampled_max);
      CHECK(mn.value <= sampled_min);
      // the sampled grid hits within 1/2000 of the optimum; quadratic error is tiny
      CHECK(mx.value - sampled_max < Rational(1, 100));
      CHECK(sampled_min - mn.value < Rational(1, 100));
      CHECK(mx.exact);  // quadratics have rational critical points
    }
    UniPoly cubic{Rational(0), Rational(-2), Rational(0), Rational(1)};  // x^3 - 2x, min at sqrt(2/3)
    Extremum m = minimize(cubic, Rational(0), Rational(1));
    CHECK_FALSE(m.exact);
    double exact = std::pow(2.0 / 3.0, 1.5) - 2 * std::sqrt(2.0 / 3.0);
    CHECK(std::abs(m.value.get_d() - exact) < 1e-9);
    CHECK(m.value.get_d() <= exact + 1e-15);
  }

  TEST_CASE("w1 bound") {
    auto ex = zb1_example();
    W1Bound b = w1_bound(*ex.v, kSeg, ex.e);
    CHECK(b.h == 0);
    CHECK(b.l == Rational(1, 4));
    CHECK(b.k2 == 0);
    CHECK(b.k1 == 3);
    CHECK(b.n_bound == 12);
    CHECK(b.exact);
    const auto& v = oracle::zb1();
    SheafNumerics r3 = direct_sum(direct_sum(lb(v, 1, 0), lb(v, 0, 1)), lb(v, 1, 1));
    W1Bound b3 = w1_bound(v, kSeg, r3);
    CHECK(b3.h == Rational(1, 4));
    CHECK(b3.l == Rational(1, 3));
    CHECK_THROWS_AS(w1_bound(v, kSeg, lb(v, 1, 0)), ComputationError);
  }

  TEST_CASE("wall class enumeration") {
    auto ex = zb1_example();
    auto classes = enumerate_wall_classes(*ex.v, kSeg, ex.e);
    auto has = [&](const NumClass& x) { return std::find(classes.begin(), classes.end(), x) != classes.end(); };
    CHECK(has(cls(2, -1)));
    CHECK(has(cls(-2, 1)));
    for (const auto& x : classes) CHECK(has(-x));
    // brute-force oracle at resolution 1/2 in a generous box
    std::size_t count = 0;
    UniPoly l0 = segment_form(*ex.v, kSeg, cls(1, 0), 2), l1 = segment_form(*ex.v, kSeg, cls(0, 1), 2);
    for (long a = -60; a <= 60; ++a) {
      for (long b = -60; b <= 60; ++b) {
        if (a == 0 && b == 0) continue;
        NumClass x({Rational(a, 2), Rational(b, 2)});
        x.coords[0].canonicalize();
        x.coords[1].canonicalize();
        UniPoly f = segment_form(*ex.v, kSeg, x, 2);
        bool hit = false;
        for (const auto& r : isolate_roots(f, Rational(0), Rational(1))) {
          // -x^2 . H(t) <= 12 at the root, sampled through a fine rational
          Rational t = refine(r, pow10_inv(12)).lo;
          Rational val = -oracle::brute_intersect(*ex.v, {x.coords, x.coords, kSeg.at(t).coords});
          if (val > 0 && val <= 12) hit = true;
        }
        if (hit) {
          ++count;
          CHECK_MESSAGE(has(x), x.to_string());
        }
      }
    }
    CHECK(count == classes.size());
    // feeding the classes back as slope data reproduces the irrational wall
    bool irrational_seen = false;
    for (const auto& x : classes) {
      for (const auto& r : isolate_roots(segment_form(*ex.v, kSeg, x, 2), Rational(0), Rational(1))) {
        if (!r.is_rational && r.defining_poly == UniPoly{Rational(1), Rational(-4), Rational(1)}) irrational_seen = true;
      }
    }
    CHECK(irrational_seen);
    // (1,-1) has slope polynomial 2t - 1 and -x^2 . H(1/2) = 1, so rational walls also occur
    CHECK(has(cls(1, -1)));
    auto search = wall_class_search(*ex.v, kSeg, ex.e);
    CHECK(search.degenerate_points == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK_FALSE(has(cls(1, 0)));
    CHECK(search.box0 <= 60);
    CHECK(search.box1 <= 60);
    // N = 0 for E = O + O: no class qualifies
    const auto& v = oracle::zb1();
    CHECK(enumerate_wall_classes(v, kSeg, direct_sum(lb(v, 0, 0), lb(v, 0, 0))).empty());
    VarietyData three = v;
    three.picard_rank = 3;
    CHECK_THROWS_AS(enumerate_wall_classes(three, kSeg, ex.e), ComputationError);
  }
}
