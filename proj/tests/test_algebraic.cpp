#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kahler3/algebraic.hpp"

using namespace kahler3;

static IntPoly P(std::initializer_list<long> v) { return IntPoly::from_longs(v); }

static RealAlgebraic sqrt_of(long n) {
  return algebraic_root(P({-n, 0, 1}), Rat(0), Rat(n < 4 ? 2 : n));
}

TEST_CASE("construction and validation") {
  RealAlgebraic r2 = sqrt_of(2);
  CHECK(!r2.is_rational());
  CHECK(r2.degree() == 2);
  CHECK_THROWS_AS(algebraic_root(P({-2, 0, 1}), Rat(-2), Rat(2)), k3_error);  // two roots
  CHECK_THROWS_AS(algebraic_root(P({-2, 0, 1}), Rat(2), Rat(3)), k3_error);   // none
  RealAlgebraic half = from_rational(Rat(1, 2));
  CHECK(half.is_rational());
  CHECK(half.rational_value() == Rat(1, 2));
  CHECK(half.minpoly == P({-1, 2}));
}

TEST_CASE("select_root picks the right factor") {
  IntPoly p = mul(P({-2, 0, 1}), P({-2, 1}));  // (T^2-2)(T-2)
  RealAlgebraic x = select_root(p, Rat(1), Rat(3, 2));
  CHECK(x.minpoly == P({-2, 0, 1}));
  RealAlgebraic y = select_root(p, Rat(19, 10), Rat(21, 10));
  CHECK(y.is_rational());
  CHECK(y.rational_value() == 2);
  CHECK_THROWS_AS(select_root(p, Rat(0), Rat(3)), k3_error);
}

TEST_CASE("comparison") {
  RealAlgebraic r2 = sqrt_of(2), r3 = sqrt_of(3);
  CHECK(compare(r2, r3) < 0);
  CHECK(compare(r3, r2) > 0);
  RealAlgebraic r2b = algebraic_root(P({-2, 0, 1}), Rat(1), Rat(3, 2));
  CHECK(algebraic_equal(r2, r2b));
  CHECK(compare(r2, Rat(3, 2)) < 0);
  CHECK(compare(r2, Rat(7, 5)) > 0);
  CHECK(sign(r2) == 1);
  RealAlgebraic neg = algebraic_neg(r2);
  CHECK(sign(neg) == -1);
  CHECK(compare(neg, r2) < 0);
  CHECK(!algebraic_equal(neg, r2));
  CHECK(algebraic_equal(from_rational(Rat(2)), from_rational(Rat(4, 2))));
}

TEST_CASE("powers") {
  RealAlgebraic r2 = sqrt_of(2);
  RealAlgebraic sq = algebraic_pow(r2, 2);
  CHECK(sq.is_rational());
  CHECK(sq.rational_value() == 2);
  RealAlgebraic invsq = algebraic_pow(r2, -2);
  CHECK(invsq.rational_value() == Rat(1, 2));
  CHECK(algebraic_pow(r2, 0).rational_value() == 1);
  RealAlgebraic phi = algebraic_root(P({-1, -1, 1}), Rat(1), Rat(2));
  RealAlgebraic phi2 = algebraic_pow(phi, 2);
  CHECK(phi2.minpoly == P({1, -3, 1}));
  RealAlgebraic phinv = algebraic_pow(phi, -1);
  CHECK(phinv.minpoly == P({-1, 1, 1}));
  CHECK(compare(phinv, Rat(1)) < 0);
  CHECK(sign(phinv) == 1);
  // rational base
  CHECK(algebraic_pow(from_rational(Rat(3, 2)), 3).rational_value() == Rat(27, 8));
  CHECK_THROWS_AS(algebraic_pow(from_rational(Rat(0)), -1), k3_error);
}

TEST_CASE("products") {
  RealAlgebraic r2 = sqrt_of(2), r3 = sqrt_of(3);
  RealAlgebraic r6 = algebraic_mul(r2, r3);
  CHECK(r6.minpoly == P({-6, 0, 1}));
  CHECK(algebraic_equal(r6, sqrt_of(6)));
  RealAlgebraic two = algebraic_mul(r2, r2);
  CHECK(two.is_rational());
  CHECK(two.rational_value() == 2);
  RealAlgebraic scaled = algebraic_mul(from_rational(Rat(-3)), r2);
  CHECK(sign(scaled) == -1);
  CHECK(algebraic_equal(algebraic_pow(scaled, 2), from_rational(Rat(18))));
  // product against a power: sqrt(2)^3 = 2*sqrt(2)
  CHECK(algebraic_equal(algebraic_pow(r2, 3), algebraic_mul(from_rational(Rat(2)), r2)));
}

TEST_CASE("roots listing") {
  IntPoly p = mul(P({-2, 0, 1}), P({-1, 1}));
  auto roots = real_roots_of(mul(p, P({-1, 1})));  // (T^2-2)(T-1)^2
  REQUIRE(roots.size() == 3);
  CHECK(sign(roots[0].first) == -1);
  CHECK(roots[1].first.rational_value() == 1);
  CHECK(roots[1].second == 2);
  CHECK(algebraic_equal(roots[2].first, sqrt_of(2)));
}

TEST_CASE("numeric rendering") {
  RealAlgebraic r2 = sqrt_of(2);
  double d = to_double(r2);
  CHECK(d > 1.41421356);
  CHECK(d < 1.41421357);
  CHECK(to_double(from_rational(Rat(1, 3))) == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(algebraic_to_string(from_rational(Rat(3, 4))) == "3/4");
}

TEST_CASE("separation bound positive") {
  Rat s = root_separation_bound(P({-2, 0, 1}));
  CHECK(s > 0);
  CHECK(s < 1);
}
