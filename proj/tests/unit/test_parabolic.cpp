#include <array>

#include "doctest.h"
#include "oracles.hpp"
#include "stabwalls/errors.hpp"
#include "stabwalls/parabolic.hpp"

using namespace stabwalls;

namespace {

NumClass cls(long a, long b) { return NumClass({Rational(a), Rational(b)}); }
SheafNumerics lb(const VarietyData& v, long a, long b) { return line_bundle_form(v, cls(a, b)); }

const NumClass kA = cls(1, 1);

WeightVector weights(std::initializer_list<Rational> a) { return WeightVector{std::vector<Rational>(a)}; }

// E = L1 + L2 with F_1 = L1 + L2(-D), so E/F_1 = L2 - L2(-D).
ParabolicData split_data(const VarietyData& v, const NumClass& l1, const NumClass& l2, const NumClass& d) {
  SheafNumerics a = line_bundle_form(v, l1), b = line_bundle_form(v, l2);
  return {direct_sum(a, b), {formal_difference(b, twist(b, -d))}, d};
}

NumClass random_class() { return cls(oracle::rand_int(-3, 3), oracle::rand_int(-3, 3)); }

UniPoly eval_sub(const VarietyData& v, const ParabolicData& p, const Rational& a, const Rational& b) {
  return parabolic_hilbert(v, p, WeightVector{{a, b}}, kA);
}

std::vector<Rational> top_first(const UniPoly& p, int n) {
  std::vector<Rational> out;
  for (int i = n; i >= 0; --i) out.push_back(p.coeff(i));
  return out;
}

}  // namespace

TEST_SUITE("parabolic") {
  TEST_CASE("weight vectors") {
    auto w = weights({Rational(1, 4), Rational(1, 2)});
    CHECK(w.gaps() == std::vector<Rational>{Rational(1, 4), Rational(1, 2)});
    w.validate();
    CHECK_THROWS_AS(weights({Rational(0)}).validate(), InputError);
    CHECK_THROWS_AS(weights({Rational(1, 2), Rational(1, 2)}).validate(), InputError);
    CHECK_THROWS_AS(weights({Rational(1, 2), Rational(1)}).validate(), InputError);
    CHECK_THROWS_AS(WeightVector{}.validate(), InputError);
  }

  TEST_CASE("k = 0 mixes E and E(-D)") {
    const auto& v = oracle::zb2();
    SheafNumerics e = extension_middle(lb(v, 3, 0), lb(v, 0, 1));
    NumClass d = cls(1, 0);
    ParabolicData p{e, {}, d};
    for (const Rational& a0 : {Rational(1, 3), Rational(1, 2), Rational(5, 6)}) {
      UniPoly expected = hilbert_polynomial(e, kA) * a0 + hilbert_polynomial(twist(e, -d), kA) * Rational(1 - a0);
      CHECK(parabolic_hilbert(v, p, weights({a0}), kA) == expected);
    }
    CHECK_THROWS_AS(parabolic_hilbert(v, p, weights({Rational(1, 3), Rational(1, 2)}), kA), InputError);
  }

  TEST_CASE("trivial filtration") {
    const auto& v = oracle::zb1();
    SheafNumerics e = direct_sum(lb(v, 1, 0), lb(v, 0, 2));
    ParabolicData p{e, {zero_sheaf(v)}, cls(0, 0)};
    CHECK(parabolic_hilbert(v, p, weights({Rational(1, 5), Rational(2, 3)}), kA) == hilbert_polynomial(e, kA));
    ParabolicData bad{e, {scaled(e, Rational(3))}, cls(0, 0)};
    CHECK_THROWS_AS(parabolic_hilbert(v, bad, weights({Rational(1, 5), Rational(2, 3)}), kA), InputError);
  }

  TEST_CASE("affine in the weights") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto& v = oracle::rand_int(0, 1) ? oracle::zb1() : oracle::zb2();
      ParabolicData p = split_data(v, random_class(), random_class(), random_class());
      auto eval = [&](const Rational& a, const Rational& b) { return parabolic_hilbert(v, p, weights({a, b}), kA); };
      Rational a0(1, 7), b0(1, 2), a1(1, 3), b1(4, 5);
      CHECK(eval((a0 + a1) / 2, (b0 + b1) / 2) == (eval(a0, b0) + eval(a1, b1)) * Rational(1, 2));
      // the affine decomposition reproduces the direct comparison polynomial
      ParabolicData sub{line_bundle_form(v, random_class()), {zero_sheaf(v)}, p.divisor};
      AffineDifference aff = parabolic_difference(v, sub, p, 1, kA);
      UniPoly direct = eval_sub(v, sub, a1, b1) - eval(a1, b1) * Rational(1, 2);
      for (std::size_t j = 0; j < aff.constants.size(); ++j) {
        Rational val = aff.constants[j] + aff.gradients[j][0] * a1 + aff.gradients[j][1] * b1;
        CHECK(val == direct.coeff(v.dim - static_cast<int>(j)));
      }
    }
  }

  TEST_CASE("comparison") {
    const auto& v = oracle::zb2();
    SheafNumerics e = direct_sum(lb(v, 3, 0), lb(v, 0, 1));
    NumClass d = cls(1, 0);
    ParabolicData full{e, {}, d};
    ParabolicData sub{lb(v, 3, 0), {}, d};
    auto w = weights({Rational(1, 2)});
    CHECK(parabolic_compare(v, full, full, w, kA).order == 0);
    CHECK(parabolic_compare(v, full, full, w, kA).verdict == Verdict::properly_semistable);
    // distinct slopes at A: the ordering is the plain Gieseker one
    int plain = lex_sign(top_first(hilbert_polynomial(lb(v, 3, 0), kA) - hilbert_polynomial(e, kA) * Rational(1, 2), 3));
    CHECK(plain == 1);
    auto c = parabolic_compare(v, sub, full, w, kA);
    CHECK(c.order == plain);
    CHECK(c.verdict == Verdict::unstable);
    // doubling both sides
    ParabolicData sub2{scaled(sub.total, Rational(2)), {}, d};
    ParabolicData full2{scaled(e, Rational(2)), {}, d};
    CHECK(parabolic_compare(v, sub2, full2, w, kA).order == c.order);
    CHECK_THROWS_AS(parabolic_compare(v, ParabolicData{zero_sheaf(v), {}, d}, full, w, kA), InputError);
  }

  TEST_CASE("weight walls for k = 0") {
    int seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
      const auto& v = oracle::rand_int(0, 1) ? oracle::zb1() : oracle::zb2();
      // equal slopes at A = (1,1) on both varieties: the classes differ by (k, -k)
      NumClass d = random_class();
      NumClass ca = random_class();
      long k = oracle::rand_int(1, 3);
      SheafNumerics a = line_bundle_form(v, ca), b = line_bundle_form(v, ca + cls(k, -k));
      ParabolicData full{direct_sum(a, b), {}, d};
      ParabolicData sub{a, {}, d};
      auto ww = weight_walls(v, full, {{"sub", sub}}, 0, kA);
      for (const auto& w : ww.walls) {
        REQUIRE(w.gradient.size() == 1);
        Rational root = -w.constant / w.gradient[0];
        CHECK(root > 0);
        CHECK(root < 1);
        // comparison flips across the root
        Rational eps(1, 1000000);
        int lo = parabolic_compare(v, sub, full, weights({root - eps}), kA).order;
        int hi = parabolic_compare(v, sub, full, weights({root + eps}), kA).order;
        CHECK(lo == -hi);
        ++seen;
      }
    }
    CHECK(seen > 0);
    // weight-independent difference
    const auto& v = oracle::zb1();
    SheafNumerics e = direct_sum(lb(v, 1, 0), lb(v, 0, 1));
    ParabolicData full{e, {}, cls(0, 0)};
    auto ww = weight_walls(v, full, {{"L", {lb(v, 1, 0), {}, cls(0, 0)}}}, 0, kA);
    CHECK(ww.walls.empty());
    CHECK(ww.weight_independent == std::vector<std::string>{"L"});
    CHECK_THROWS_AS(weight_walls(v, full, {}, 3, kA), InputError);
  }

  TEST_CASE("weight walls for k = 1 against a grid") {
    int walls_seen = 0;
    for (int trial = 0; trial < 12; ++trial) {
      const auto& v = oracle::rand_int(0, 1) ? oracle::zb1() : oracle::zb2();
      NumClass l1 = random_class(), l2 = random_class(), d = random_class();
      ParabolicData full = split_data(v, l1, l2, d);
      // sub = L1 with induced F_1 = L1, so its quotient is zero
      ParabolicData sub{line_bundle_form(v, l1), {zero_sheaf(v)}, d};
      auto ww = weight_walls(v, full, {{"L1", sub}}, 1, kA);
      // oracle: P^a = P(X) - (a1 - a0) P(X/F_1) - (1 - a1) P(X/F_2), from Hilbert polynomials of the pieces
      auto pieces = [&](const ParabolicData& x) {
        return std::array<UniPoly, 3>{hilbert_polynomial(x.total, kA), hilbert_polynomial(x.quotients[0], kA),
                                      hilbert_polynomial(formal_difference(x.total, twist(x.total, -d)), kA)};
      };
      auto ps = pieces(sub), pf = pieces(full);
      auto order = [&](long i, long j) {
        Rational e1(j - i, 100), e2(100 - j, 100);
        auto mix = [&](const std::array<UniPoly, 3>& q) { return q[0] - q[1] * e1 - q[2] * e2; };
        return lex_sign(top_first(mix(ps) - mix(pf) * Rational(1, 2), 3));
      };
      auto side = [&](const WeightWall& w, long i, long j) {
        return sign(w.constant + w.gradient[0] * Rational(i, 100) + w.gradient[1] * Rational(j, 100));
      };
      for (long i = 1; i < 99; ++i) {
        for (long j = i + 1; j < 99; ++j) {
          int here = order(i, j);
          for (auto [ni, nj] : {std::pair{i + 1, j}, std::pair{i, j + 1}}) {
            if (ni >= nj || nj >= 100) continue;
            if (order(ni, nj) == here) continue;
            bool explained = std::any_of(ww.walls.begin(), ww.walls.end(),
                                         [&](const WeightWall& w) { return side(w, i, j) != side(w, ni, nj); });
            CHECK(explained);
          }
        }
      }
      // conversely the decisive coefficient's sign is the ordering off the wall
      for (const auto& w : ww.walls) {
        ++walls_seen;
        for (long i = 1; i < 99; i += 7) {
          for (long j = i + 1; j < 99; j += 5) {
            int s = side(w, i, j);
            if (s != 0) CHECK(order(i, j) == s);
            WeightVector wv{{Rational(i, 100), Rational(j, 100)}};
            CHECK(parabolic_compare(v, sub, full, wv, kA).order == order(i, j));
          }
        }
      }
    }
    CHECK(walls_seen > 0);
  }

  TEST_CASE("beta and parabolic polynomials agree") {
    const auto& v = oracle::zb2();
    auto setup = TwistSetup::from_segment(v, Segment{cls(3, 1), cls(1, 3)}, 2);
    SheafNumerics e = extension_middle(lb(v, 3, 0), lb(v, 0, 1));
    auto [b, p] = beta_parabolic_identity(setup, e, Rational(1, 2));
    CHECK(b == p);
    // at 1/2 swapping D and -D changes nothing
    TwistSetup flipped = setup;
    flipped.direction = -setup.direction;
    CHECK(beta_poly(flipped, e, Rational(1, 2)) == b);
    CHECK_THROWS_AS(beta_parabolic_identity(setup, e, Rational(0)), InputError);
    CHECK_THROWS_AS(beta_parabolic_identity(setup, e, Rational(1)), InputError);
    for (int trial = 0; trial < 50; ++trial) {
      const auto& vv = oracle::rand_int(0, 1) ? oracle::zb1() : oracle::zb2();
      auto s = TwistSetup::from_segment(vv, Segment{cls(oracle::rand_int(1, 4), 1), cls(1, oracle::rand_int(2, 5))},
                                        oracle::rand_int(1, 5));
      SheafNumerics ee = direct_sum(line_bundle_form(vv, random_class()), line_bundle_form(vv, random_class()));
      Rational beta(oracle::rand_int(1, 98), 99);
      beta.canonicalize();
      auto [x, y] = beta_parabolic_identity(s, ee, beta);
      CHECK(x == y);
    }
  }
}
