#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kahler3/poly.hpp"

using namespace kahler3;

static IntPoly P(std::initializer_list<long> v) { return IntPoly::from_longs(v); }

TEST_CASE("string round trips") {
  CHECK(int_to_string(int_from_string("-123456789012345678901234567890")) ==
        "-123456789012345678901234567890");
  CHECK(rat_to_string(rat_from_string("6/4")) == "3/2");
  CHECK(rat_to_string(rat_from_string("-7")) == "-7");
  CHECK_THROWS_AS(int_from_string("12x"), k3_error);
  CHECK_THROWS_AS(rat_from_string("1/0"), k3_error);
}

TEST_CASE("basic arithmetic") {
  IntPoly a = P({-1, 1});  // T - 1
  IntPoly b = P({1, 1});   // T + 1
  CHECK(mul(a, b) == P({-1, 0, 1}));
  CHECK(add(a, b) == P({0, 2}));
  CHECK(sub(a, a).is_zero());
  CHECK(pow_poly(b, 2) == P({1, 2, 1}));
  CHECK(shift_up(b, 2) == P({0, 0, 1, 1}));
  CHECK(P({2, 4, 6}).content() == 2);
  CHECK(P({0, 0, -2}).primitive() == P({0, 0, 1}));
}

TEST_CASE("evaluation and derivative") {
  IntPoly p = P({1, -3, 0, 2});  // 2T^3 - 3T + 1
  CHECK(eval_int(p, Int(2)) == 11);
  CHECK(eval_rat(p, Rat(1, 2)) == Rat(-1, 4));
  CHECK(derivative(p) == P({-3, 0, 6}));
  CHECK(reverse_poly(p) == P({2, 0, -3, 1}));
}

TEST_CASE("division") {
  RatPoly a(P({-1, 0, 0, 1}));  // T^3 - 1
  RatPoly b(P({-1, 1}));        // T - 1
  auto [q, r] = divrem(a, b);
  CHECK(r.is_zero());
  CHECK(q == RatPoly(P({1, 1, 1})));
  CHECK(div_exact(P({-1, 0, 0, 1}), P({-1, 1})) == P({1, 1, 1}));
  CHECK(divides(P({-1, 1}), P({-1, 0, 0, 1})));
  CHECK(!divides(P({1, 1}), P({-1, 0, 0, 1})));
  CHECK_THROWS_AS(div_exact(P({1, 0, 1}), P({-1, 1})), k3_error);
}

TEST_CASE("gcd and squarefree structure") {
  IntPoly f = mul(P({-1, 1}), P({1, 0, 1}));  // (T-1)(T^2+1)
  IntPoly g = mul(P({-1, 1}), P({2, 1}));     // (T-1)(T+2)
  CHECK(gcd_poly(f, g) == P({-1, 1}));
  IntPoly h = mul(mul(P({-1, 1}), P({-1, 1})), P({2, 1}));  // (T-1)^2 (T+2)
  CHECK(squarefree_part(h) == mul(P({-1, 1}), P({2, 1})));
  auto dec = squarefree_decomposition(h);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first == P({2, 1}));
  CHECK(dec[0].second == 1);
  CHECK(dec[1].first == P({-1, 1}));
  CHECK(dec[1].second == 2);
}

TEST_CASE("resultant and discriminant") {
  CHECK(resultant(P({-2, 0, 1}), P({-3, 0, 1})) == 1);
  CHECK(discriminant(P({-2, 0, 1})) == 8);
  IntPoly cubic = mul(mul(P({-1, 1}), P({-2, 1})), P({-3, 1}));
  CHECK(discriminant(cubic) == 4);
  CHECK(resultant(P({-1, 1}), P({-1, 1})) == 0);
}

TEST_CASE("real root isolation") {
  IntPoly p = mul(mul(P({-2, 0, 1}), P({-1, 1})), P({-1, 1}));  // (T^2-2)(T-1)^2
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].mult == 1);
  CHECK(roots[1].mult == 2);
  CHECK(roots[2].mult == 1);
  CHECK(roots[1].lo == Rat(1));
  CHECK(roots[1].hi == Rat(1));
  CHECK(roots[0].hi < roots[1].lo);
  CHECK(roots[1].hi < roots[2].lo);
  // sqrt(2) in the third interval
  Rat lo = roots[2].lo, hi = roots[2].hi;
  refine_root(P({-2, 0, 1}), lo, hi, Rat(1, 1000));
  CHECK(lo < Rat(1414214, 1000000));
  CHECK(hi > Rat(1414213, 1000000));
  CHECK(count_real_roots(P({1, 0, 1})) == 0);
  CHECK(count_real_roots(p) == 3);
  CHECK(sturm_count(P({-2, 0, 1}), Rat(0), Rat(2)) == 1);
  CHECK(sturm_count(P({-2, 0, 1}), Rat(-2), Rat(2)) == 2);
}

TEST_CASE("power sums") {
  IntPoly p = P({6, -5, 1});  // roots 2, 3
  auto s = power_sums(p, 4);
  CHECK(s[0] == 5);
  CHECK(s[1] == 13);
  CHECK(s[2] == 35);
  CHECK(s[3] == 97);
  RatPoly back = poly_from_power_sums({Rat(5), Rat(13)});
  CHECK(back == RatPoly(p));
}

TEST_CASE("power roots") {
  CHECK(power_roots_poly(P({-2, 0, 1}), 2) == P({4, -4, 1}));
  CHECK(power_roots_poly(P({2, -3, 1}), -1) == P({1, -3, 2}));
  CHECK(power_roots_poly(P({-2, 0, 1}), 1) == P({-2, 0, 1}));
  // Graeffe-type doubling twice: roots 2 -> 16, i.e. fourth powers
  CHECK(power_roots_poly(P({-2, 1}), 4) == P({-16, 1}));
}

TEST_CASE("composed products") {
  IntPoly f = P({-2, 0, 1});  // roots +-sqrt(2)
  IntPoly g = P({-3, 0, 1});  // roots +-sqrt(3)
  IntPoly expect = P({36, 0, -12, 0, 1});  // (T^2-6)^2
  CHECK(composed_product(f, g) == expect);
  CHECK(composed_product_powersums(f, g) == expect);
  IntPoly a = P({-1, -1, 1});
  IntPoly b = P({-2, 0, 0, 1});
  CHECK(composed_product(a, b) == composed_product_powersums(a, b));
  // zero roots multiply in as zeros of the product
  IntPoly with_zero = P({0, -1, 1});  // T(T-1)
  IntPoly r = composed_product(with_zero, P({-2, 1}));
  CHECK(r == P({0, -2, 1}));  // roots {0, 2}
}

TEST_CASE("cyclotomic recognition") {
  CHECK(cyclotomic_order(P({-1, 1})) == 1);
  CHECK(cyclotomic_order(P({1, 1})) == 2);
  CHECK(cyclotomic_order(P({1, 1, 1})) == 3);
  CHECK(cyclotomic_order(P({1, -1, 1})) == 6);
  CHECK(cyclotomic_order(P({1, 0, -1, 0, 1})) == 12);
  CHECK(!cyclotomic_order(P({-2, 0, 1})).has_value());
  CHECK(!cyclotomic_order(P({2, 1})).has_value());
}

TEST_CASE("poly printing") {
  CHECK(poly_to_string(P({-2, 0, 1})) == "T^2 - 2");
  CHECK(poly_to_string(P({1, 0, -1, 1, 0, -1, 1})) == "T^6 - T^5 + T^3 - T^2 + 1");
  CHECK(poly_to_string(IntPoly::zero()) == "0");
  CHECK(poly_to_string(P({-5, 2, 0, -1})) == "-T^3 + 2T - 5");
}
