#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <vector>

#include "kahler3/jordan.hpp"
#include "kahler3/torus.hpp"
#include "fixture_expected.hpp"

using namespace kahler3;

namespace {

RatMatrix mat3_from_fixture(const int (&m)[3][3]) {
  RatMatrix out(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) out.at(i, j) = m[i][j];
  return out;
}

RatMatrix mat9_from_fixture(const int (&m)[9][9]) {
  RatMatrix out(9, 9);
  for (size_t i = 0; i < 9; ++i)
    for (size_t j = 0; j < 9; ++j) out.at(i, j) = m[i][j];
  return out;
}

IntPoly poly_from_fixture(const fx::PolyFixture& f) {
  std::vector<long> v(f.coeffs, f.coeffs + 7);
  return IntPoly::from_longs(v);
}

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const k3_error& e) {
    return e.code();
  }
  return errc::unsupported;  // sentinel: no throw
}

std::vector<int> sizes_from_fixture(const int* data, int n) {
  return std::vector<int>(data, data + n);
}

// Block-diagonal assembly of square matrices.
RatMatrix direct_sum(const std::vector<RatMatrix>& parts) {
  size_t n = 0;
  for (const auto& p : parts) n += p.rows;
  RatMatrix out(n, n);
  size_t off = 0;
  for (const auto& p : parts) {
    for (size_t i = 0; i < p.rows; ++i)
      for (size_t j = 0; j < p.cols; ++j) out.at(off + i, off + j) = p.at(i, j);
    off += p.rows;
  }
  return out;
}

RatMatrix jordan_block(const Rat& value, size_t n) {
  RatMatrix out(n, n);
  for (size_t i = 0; i < n; ++i) {
    out.at(i, i) = value;
    if (i + 1 < n) out.at(i, i + 1) = 1;
  }
  return out;
}

}  // namespace

TEST_CASE("block structure of the unipotent fixtures matches the recorded tables") {
  for (int i = 0; i < fx::kNumMatrix3Fixtures; ++i) {
    const auto& f = fx::kMatrix3Fixtures[i];
    CAPTURE(f.name);
    const TorusSpec t = torus_from_matrix3(mat3_from_fixture(f.m));

    const JordanReport r9 = jordan_structure(t.h11_action);
    REQUIRE(r9.factors.size() == 1);
    CHECK(r9.factors[0].poly == IntPoly::from_longs({-1, 1}));  // T - 1
    CHECK(r9.all_blocks() == sizes_from_fixture(f.blocks9, f.n_blocks9));

    const JordanReport r15 = jordan_structure(induced_action(t, 2));
    CHECK(r15.all_blocks() == sizes_from_fixture(f.blocks15, f.n_blocks15));
    CHECK(r15.dimension == 15);
    CHECK(r9.max_block == f.blocks9[0]);
    CHECK(r15.max_block == f.blocks15[0]);
  }
}

TEST_CASE("the recorded companion of the second unipotent fixture has its own blocks") {
  const auto& f = fx::kMatrix3Fixtures[1];
  REQUIRE(!f.printed_matches_kron);
  const JordanReport r = jordan_structure(mat9_from_fixture(f.printed));
  CHECK(r.all_blocks() == sizes_from_fixture(f.printed_blocks, f.n_printed_blocks));
}

TEST_CASE("semisimple and diagonal inputs produce size-one blocks only") {
  const JordanReport id4 = jordan_structure(RatMatrix::identity(4));
  REQUIRE(id4.factors.size() == 1);
  CHECK(id4.factors[0].blocks == std::vector<std::pair<int, int>>{{1, 4}});
  CHECK(id4.max_block == 1);

  // irreducible characteristic polynomial: one size-1 block per root
  const JordanReport comp = jordan_structure(companion(poly_from_fixture(fx::kPolyFixtures[0])));
  REQUIRE(comp.factors.size() == 1);
  CHECK(comp.factors[0].degree == 6);
  CHECK(comp.factors[0].blocks == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(comp.all_blocks() == std::vector<int>(6, 1));
}

TEST_CASE("mixed nilpotency across two eigenvalues is split per factor") {
  const RatMatrix m = direct_sum({jordan_block(Rat(2), 2), jordan_block(Rat(1), 3)});
  const JordanReport r = jordan_structure(m);
  REQUIRE(r.factors.size() == 2);
  // factors sorted by degree then lexicographically: T - 2 and T - 1
  for (const auto& fb : r.factors) {
    REQUIRE(fb.degree == 1);
    const bool is_two = fb.poly == IntPoly::from_longs({-2, 1});
    if (is_two)
      CHECK(fb.blocks == std::vector<std::pair<int, int>>{{2, 1}});
    else
      CHECK(fb.blocks == std::vector<std::pair<int, int>>{{3, 1}});
  }
  CHECK(r.all_blocks() == std::vector<int>{3, 2});
  CHECK(r.max_block == 3);
}

TEST_CASE("degree-4 blocks agree with the inverse-transpose of the degree-2 blocks") {
  // Poincare duality pairs the degree-4 action with the contragredient of
  // the degree-2 action, so the block multisets must coincide.
  std::vector<RatMatrix> h1s;
  h1s.push_back(torus_from_poly(poly_from_fixture(fx::kPolyFixtures[1])).h1_action);
  for (int i = 0; i < fx::kNumMatrix3Fixtures; ++i)
    h1s.push_back(torus_from_matrix3(mat3_from_fixture(fx::kMatrix3Fixtures[i].m)).h1_action);

  for (const auto& h1 : h1s) {
    const RatMatrix a4 = exterior_power(h1, 4);
    const RatMatrix a2_dual = transpose(inverse(exterior_power(h1, 2)));
    CHECK(jordan_structure(a4).all_blocks() == jordan_structure(a2_dual).all_blocks());
  }
}

TEST_CASE("multiplicative decomposition of a single off-diagonal block") {
  const ChevalleyPair p = chevalley_decompose(jordan_block(Rat(2), 2));
  RatMatrix s(2, 2), u(2, 2);
  s.at(0, 0) = 2;
  s.at(1, 1) = 2;
  u.at(0, 0) = 1;
  u.at(0, 1) = Rat(1, 2);
  u.at(1, 1) = 1;
  CHECK(p.semisimple == s);
  CHECK(p.unipotent == u);
  CHECK(p.semisimple_denominator_lcm == 1);
  CHECK(p.unipotent_denominator_lcm == 2);  // the parts need not be integral
}

TEST_CASE("semisimple inputs decompose trivially") {
  const RatMatrix m = companion(IntPoly::from_longs({1, -3, 1}));
  const ChevalleyPair p = chevalley_decompose(m);
  CHECK(p.semisimple == m);
  CHECK(p.unipotent == RatMatrix::identity(2));
  CHECK(p.semisimple_denominator_lcm == 1);
  CHECK(p.unipotent_denominator_lcm == 1);
}

TEST_CASE("decomposition splits eigenvalues from nilpotency factor by factor") {
  const RatMatrix m = direct_sum({jordan_block(Rat(2), 2), jordan_block(Rat(1), 3)});
  const ChevalleyPair p = chevalley_decompose(m);
  RatMatrix s(5, 5);
  s.at(0, 0) = 2;
  s.at(1, 1) = 2;
  s.at(2, 2) = 1;
  s.at(3, 3) = 1;
  s.at(4, 4) = 1;
  CHECK(p.semisimple == s);
  CHECK(mul(p.semisimple, p.unipotent) == m);
  CHECK(mul(p.unipotent, p.semisimple) == m);
  CHECK(p.unipotent.at(0, 1) == Rat(1, 2));
  CHECK(p.unipotent.at(2, 3) == 1);
}

TEST_CASE("fully unipotent inputs keep an identity semisimple part") {
  const auto& f = fx::kMatrix3Fixtures[0];
  const RatMatrix h11 = torus_from_matrix3(mat3_from_fixture(f.m)).h11_action;
  const ChevalleyPair p = chevalley_decompose(h11);
  CHECK(p.semisimple == RatMatrix::identity(9));
  CHECK(p.unipotent == h11);
  CHECK(p.semisimple_denominator_lcm == 1);
  CHECK(p.unipotent_denominator_lcm == 1);
}

TEST_CASE("decomposition validates its input") {
  RatMatrix singular(2, 2);
  singular.at(0, 0) = 1;  // rank 1
  CHECK(code_of([&] { chevalley_decompose(singular); }) == errc::domain_error);
  CHECK(code_of([] { chevalley_decompose(RatMatrix(2, 3)); }) == errc::dimension_mismatch);
}

TEST_CASE("power order to reach a unipotent matrix") {
  CHECK(unipotency_order(mul_scalar(RatMatrix::identity(4), Rat(-1))) == 2);
  CHECK(unipotency_order(RatMatrix::identity(3)) == 1);

  const auto& f = fx::kMatrix3Fixtures[0];
  const RatMatrix h11 = torus_from_matrix3(mat3_from_fixture(f.m)).h11_action;
  CHECK(unipotency_order(h11) == 1);  // already unipotent

  // sixth root of unity mixed with -1: lcm of the factor orders
  const RatMatrix mixed = direct_sum(
      {companion(IntPoly::from_longs({1, 1, 1})), mul_scalar(RatMatrix::identity(1), Rat(-1))});
  CHECK(unipotency_order(mixed) == 6);

  // irrational eigenvalue moduli: no unipotent power
  CHECK(!unipotency_order(companion(poly_from_fixture(fx::kPolyFixtures[0]))));

  // non-integer eigenvalue: characteristic polynomial is not integral
  RatMatrix half(1, 1);
  half.at(0, 0) = Rat(1, 2);
  CHECK(!unipotency_order(half));

  CHECK(code_of([] { unipotency_order(RatMatrix(2, 3)); }) == errc::dimension_mismatch);
}

TEST_CASE("growth prediction: unipotent spectra give polynomial growth degrees") {
  const GrowthPrediction id = predicted_growth(RatMatrix::identity(5));
  CHECK(id.method == GrowthMethod::cyclotomic);
  CHECK(id.rho.is_rational());
  CHECK(id.rho.rational_value() == 1);
  CHECK(id.k == 0);

  for (int i = 0; i < fx::kNumMatrix3Fixtures; ++i) {
    const auto& f = fx::kMatrix3Fixtures[i];
    CAPTURE(f.name);
    const TorusSpec t = torus_from_matrix3(mat3_from_fixture(f.m));
    const GrowthPrediction g9 = predicted_growth(t.h11_action);
    CHECK(g9.method == GrowthMethod::cyclotomic);
    CHECK(g9.rho.rational_value() == 1);
    CHECK(g9.k == f.growth_exponent9);
    const GrowthPrediction g15 = predicted_growth(induced_action(t, 2));
    CHECK(g15.rho.rational_value() == 1);
    CHECK(g15.k == f.growth_exponent15);
  }
}

TEST_CASE("growth prediction: a dominant real eigenvalue is certified and returned exactly") {
  // non-semisimple at the dominant eigenvalue
  const RatMatrix m = direct_sum({jordan_block(Rat(2), 2), jordan_block(Rat(2), 1),
                                  jordan_block(Rat(1), 1)});
  const GrowthPrediction g = predicted_growth(m);
  CHECK(g.method == GrowthMethod::dominant_real);
  CHECK(g.rho.is_rational());
  CHECK(g.rho.rational_value() == 2);
  CHECK(g.k == 1);

  // irrational dominant root next to a smaller complex pair
  const RatMatrix mm = direct_sum(
      {companion(IntPoly::from_longs({1, -3, 1})), companion(IntPoly::from_longs({2, 0, 1}))});
  const GrowthPrediction gg = predicted_growth(mm);
  CHECK(gg.method == GrowthMethod::dominant_real);
  CHECK(gg.rho.minpoly == IntPoly::from_longs({1, -3, 1}));
  CHECK(gg.k == 0);

  // the dominant modulus may be reached by a negative real eigenvalue
  const RatMatrix nn = direct_sum({jordan_block(Rat(-3), 2), jordan_block(Rat(2), 1)});
  const GrowthPrediction gn = predicted_growth(nn);
  CHECK(gn.rho.rational_value() == 3);
  CHECK(gn.k == 1);
}

TEST_CASE("growth prediction on the degree-2 actions of the torus corpus") {
  for (const auto* name : {"S15", "grado9"}) {
    const fx::PolyFixture* f = nullptr;
    for (const auto& cand : fx::kPolyFixtures)
      if (std::string_view(cand.name) == name) f = &cand;
    REQUIRE(f != nullptr);
    CAPTURE(f->name);
    const TorusSpec t = torus_from_poly(poly_from_fixture(*f));
    const GrowthPrediction g = predicted_growth(induced_action(t, 2));
    CHECK(g.method == GrowthMethod::dominant_real);
    CHECK(g.k == 0);  // simple dominant eigenvalue
    const double want = std::strtod(f->lambda1, nullptr);
    CHECK(to_double(g.rho) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("growth prediction identifies complex moduli exactly when no real root dominates") {
  // conjugate pair of modulus sqrt(2): no real eigenvalue at all
  const GrowthPrediction g = predicted_growth(companion(IntPoly::from_longs({2, -1, 1})));
  CHECK(g.method == GrowthMethod::composed_exact);
  CHECK(g.k == 0);
  const RealAlgebraic two = from_rational(Rat(2));
  CHECK(algebraic_equal(algebraic_pow(g.rho, 2), two));

  // degree-1 action of a torus: the dominant modulus is a conjugate pair
  const auto& f = fx::kPolyFixtures[0];  // S15
  const TorusSpec t = torus_from_poly(poly_from_fixture(f));
  const GrowthPrediction g1 = predicted_growth(t.h1_action);
  CHECK(g1.method == GrowthMethod::composed_exact);
  CHECK(g1.k == 0);
  // |beta_1|^2 equals the leading dynamical degree of the squared action
  const double want = std::strtod(f.lambda1, nullptr);
  CHECK(to_double(algebraic_pow(g1.rho, 2)) == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("growth prediction validates its input") {
  CHECK(code_of([] { predicted_growth(RatMatrix(2, 3)); }) == errc::dimension_mismatch);
  CHECK(code_of([] { predicted_growth(RatMatrix(2, 2)); }) == errc::domain_error);
}
