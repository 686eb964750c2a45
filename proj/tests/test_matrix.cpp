#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kahler3/matrix.hpp"

using namespace kahler3;

static IntPoly P(std::initializer_list<long> v) { return IntPoly::from_longs(v); }

TEST_CASE("shape and products") {
  RatMatrix a = RatMatrix::from_longs({{1, 2}, {3, 4}});
  RatMatrix i = RatMatrix::identity(2);
  CHECK(mul(a, i) == a);
  CHECK(mul(i, a) == a);
  CHECK(transpose(transpose(a)) == a);
  CHECK(add(a, sub(i, i)) == a);
  CHECK_THROWS_AS(mul(a, RatMatrix(3, 3)), k3_error);
  CHECK(matrix_power(a, 0) == i);
  CHECK(matrix_power(a, 2) == mul(a, a));
  CHECK(matrix_power(a, 5) == mul(a, mul(a, mul(a, mul(a, a)))));
}

TEST_CASE("determinant and rank") {
  CHECK(det(RatMatrix::from_longs({{2, 1}, {1, 1}})) == 1);
  CHECK(det(RatMatrix::from_longs({{1, 2}, {2, 4}})) == 0);
  RatMatrix h(2, 2);
  h.at(0, 0) = 1;
  h.at(0, 1) = Rat(1, 2);
  h.at(1, 0) = Rat(1, 3);
  h.at(1, 1) = Rat(1, 4);
  CHECK(det(h) == Rat(1, 12));
  CHECK(rank(RatMatrix::from_longs({{1, 2}, {2, 4}})) == 1);
  CHECK(nullity(RatMatrix::from_longs({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(RatMatrix::identity(4)) == 4);
  // zero pivot forces a row swap
  CHECK(det(RatMatrix::from_longs({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("inverse") {
  RatMatrix a = RatMatrix::from_longs({{2, 1}, {1, 1}});
  CHECK(mul(a, inverse(a)) == RatMatrix::identity(2));
  CHECK_THROWS_AS(inverse(RatMatrix::from_longs({{1, 2}, {2, 4}})), k3_error);
}

TEST_CASE("characteristic polynomial") {
  RatMatrix d = RatMatrix::from_longs({{1, 0}, {0, 2}});
  CHECK(charpoly(d) == RatPoly(P({2, -3, 1})));
  IntPoly p = P({5, -2, 0, 1});  // T^3 - 2T + 5
  CHECK(charpoly(companion(p)) == RatPoly(p));
  // Cayley-Hamilton
  RatMatrix a = RatMatrix::from_longs({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}});
  RatMatrix z = eval_poly(charpoly(a), a);
  CHECK(z == RatMatrix(3, 3));
  // constant term is (-1)^n det
  CHECK(charpoly(a).c[0] == -det(a));
}

TEST_CASE("kronecker") {
  RatMatrix a = RatMatrix::from_longs({{1, 2}, {3, 4}});
  RatMatrix b = RatMatrix::from_longs({{0, 1}, {1, 0}});
  RatMatrix k = kronecker(a, b);
  CHECK(k.rows == 4);
  CHECK(k.at(0, 1) == 1);
  CHECK(k.at(0, 3) == 2);
  CHECK(k.at(3, 0) == 3);
  CHECK(kronecker(RatMatrix::identity(2), RatMatrix::identity(3)) == RatMatrix::identity(6));
  // trace is multiplicative
  CHECK(trace(k) == trace(a) * trace(b));
}

TEST_CASE("subset indexing") {
  for (size_t r = 0; r < 15; ++r) CHECK(subset_rank(subset_unrank(r, 6, 2), 6) == r);
  for (size_t r = 0; r < 20; ++r) CHECK(subset_rank(subset_unrank(r, 6, 3), 6) == r);
  CHECK(subset_unrank(0, 6, 2) == std::vector<unsigned>{0, 1});
  CHECK(subset_unrank(14, 6, 2) == std::vector<unsigned>{4, 5});
  CHECK(binomial(6, 3) == 20);
}

TEST_CASE("exterior powers") {
  RatMatrix d = RatMatrix::from_longs({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}});
  RatMatrix w = exterior_power(d, 2);
  CHECK(w.rows == 3);
  CHECK(w.at(0, 0) == 6);   // {0,1}
  CHECK(w.at(1, 1) == 10);  // {0,2}
  CHECK(w.at(2, 2) == 15);  // {1,2}
  RatMatrix a = RatMatrix::from_longs({{1, 1, 0}, {1, 2, 1}, {0, 1, 1}});
  CHECK(exterior_power(a, 1) == a);
  CHECK(exterior_power(a, 3).at(0, 0) == det(a));
  CHECK(exterior_power(a, 0) == RatMatrix::identity(1));
  // det of the second exterior power of a 3x3 matrix is det^2
  CHECK(det(exterior_power(a, 2)) == det(a) * det(a));
}

TEST_CASE("companion shape") {
  RatMatrix c = companion(P({-7, 2, 0, 1}));
  CHECK(c.at(1, 0) == 1);
  CHECK(c.at(2, 1) == 1);
  CHECK(c.at(0, 2) == 7);
  CHECK(c.at(1, 2) == -2);
  CHECK(c.at(0, 0) == 0);
  CHECK_THROWS_AS(companion(P({1, 2, 2})), k3_error);
  CHECK(is_integer_matrix(c));
}
