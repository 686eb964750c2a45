#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kahler3/torus.hpp"
#include "fixture_expected.hpp"

using namespace kahler3;

namespace {

IntPoly poly_from_fixture(const fx::PolyFixture& f) {
  std::vector<long> v(f.coeffs, f.coeffs + 7);
  return IntPoly::from_longs(v);
}

RatMatrix mat3_from_fixture(const int (&m)[3][3]) {
  RatMatrix out(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) out.at(i, j) = m[i][j];
  return out;
}

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const k3_error& e) {
    return e.code();
  }
  return errc::unsupported;  // sentinel: no throw
}

// Random products of elementary matrices give unimodular integer matrices.
RatMatrix random_unimodular(size_t n, std::mt19937& rng, int steps = 12) {
  RatMatrix m = RatMatrix::identity(n);
  std::uniform_int_distribution<size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    int c = coef(rng);
    for (size_t k = 0; k < n; ++k) m.at(i, k) += Rat(c) * m.at(j, k);
  }
  return m;
}

}  // namespace

TEST_CASE("poly validation rejects each malformed input with its own code") {
  // non-monic
  CHECK(code_of([] { torus_from_poly(IntPoly::from_longs({1, 0, 0, 0, 0, 0, 2})); }) ==
        errc::validation_not_monic);
  // wrong degree
  CHECK(code_of([] { torus_from_poly(IntPoly::from_longs({1, 0, 0, 0, 1})); }) ==
        errc::validation_wrong_degree);
  // constant term
  CHECK(code_of([] { torus_from_poly(IntPoly::from_longs({-1, 0, 0, 0, 0, 0, 1})); }) ==
        errc::validation_constant_term);
  CHECK(code_of([] { torus_from_poly(IntPoly::from_longs({2, 0, 0, 0, 0, 0, 1})); }) ==
        errc::validation_constant_term);
  // repeated roots: (T^3+T+1)^2 has constant 1... use (T^2+T+1)^2*(T^2+T+1)... simpler:
  // (T^2+1)^2 * (T^2+T+1) = degree 6, constant 1, repeated non-real roots
  {
    IntPoly a = mul(IntPoly::from_longs({1, 0, 1}), IntPoly::from_longs({1, 0, 1}));
    IntPoly p = mul(a, IntPoly::from_longs({1, 1, 1}));
    CHECK(p.degree() == 6);
    CHECK(p.c[0] == 1);
    CHECK(code_of([&] { torus_from_poly(p); }) == errc::validation_repeated_roots);
  }
  // real roots, squarefree, constant term 1: T^6 - 3T + 1 has sign changes
  CHECK(code_of([] { torus_from_poly(IntPoly::from_longs({1, -3, 0, 0, 0, 0, 1})); }) ==
        errc::validation_real_root);
}

TEST_CASE("fixture polynomials are accepted and degree-1 action has the right charpoly") {
  for (int i = 0; i < fx::kNumPolyFixtures; ++i) {
    const auto& f = fx::kPolyFixtures[i];
    IntPoly p = poly_from_fixture(f);
    TorusSpec t = torus_from_poly(p);
    CHECK(t.source == TorusSource::poly);
    CHECK(charpoly(t.h1_action).primitive_int() == p);
    CHECK(det(t.h1_action) == Rat(1));  // constant term 1 and even degree
  }
}

TEST_CASE("graded action dimensions and endpoints") {
  TorusSpec t = torus_from_poly(poly_from_fixture(fx::kPolyFixtures[0]));
  const size_t dims[7] = {1, 6, 15, 20, 15, 6, 1};
  for (unsigned k = 0; k <= 6; ++k) {
    const RatMatrix& m = induced_action(t, k);
    CHECK(m.rows == dims[k]);
    CHECK(m.cols == dims[k]);
  }
  CHECK(induced_action(t, 0) == RatMatrix::identity(1));
  CHECK(induced_action(t, 6).at(0, 0) == det(t.h1_action));
  CHECK_THROWS_AS((void)induced_action(t, 7), k3_error);
}

TEST_CASE("degree-2 charpoly matches the frozen table") {
  for (int i = 0; i < fx::kNumPolyFixtures; ++i) {
    const auto& f = fx::kPolyFixtures[i];
    TorusSpec t = torus_from_poly(poly_from_fixture(f));
    IntPoly q2 = charpoly(induced_action(t, 2)).primitive_int();
    REQUIRE(q2.degree() == 15);
    for (int d = 0; d <= 15; ++d) {
      CHECK(q2.c[d] == Int(static_cast<long>(f.q2[d])));
    }
  }
}

TEST_CASE("matrix3 fixtures reproduce the recorded degree-(1,1) actions") {
  for (int i = 0; i < fx::kNumMatrix3Fixtures; ++i) {
    const auto& f = fx::kMatrix3Fixtures[i];
    TorusSpec t = torus_from_matrix3(mat3_from_fixture(f.m));
    CHECK(t.source == TorusSource::matrix3);
    REQUIRE(t.h11_action.rows == 9);
    bool match_kron = true, match_printed = true;
    for (size_t r = 0; r < 9; ++r)
      for (size_t c = 0; c < 9; ++c) {
        if (t.h11_action.at(r, c) != Rat(f.h11[r][c])) match_kron = false;
        if (t.h11_action.at(r, c) != Rat(f.printed[r][c])) match_printed = false;
      }
    CHECK(match_kron);
    CHECK(match_printed == f.printed_matches_kron);
  }
}

TEST_CASE("matrix3 validation") {
  CHECK(code_of([] { torus_from_matrix3({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }) ==
        errc::validation_not_unimodular);
  RatMatrix bad(3, 3);
  bad.at(0, 0) = Rat(1, 2);
  CHECK(code_of([&] { torus_from_matrix3(bad); }) == errc::validation_not_unimodular);
  RatMatrix two(2, 2);
  CHECK(code_of([&] { torus_from_matrix3(two); }) == errc::validation_wrong_degree);
  // determinant -1 accepted
  TorusSpec t = torus_from_matrix3({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK(det(t.matrix3) == Rat(-1));
  // identity
  TorusSpec id = torus_from_matrix3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(id.h1_action == RatMatrix::identity(6));
}

TEST_CASE("degree-1 block structure for matrix3 tori") {
  TorusSpec t = torus_from_matrix3({{1, 2, 0}, {0, 1, 0}, {3, 0, 1}});
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      CHECK(t.h1_action.at(2 * i, 2 * j) == t.matrix3.at(i, j));
      CHECK(t.h1_action.at(2 * i + 1, 2 * j + 1) == t.matrix3.at(i, j));
      CHECK(t.h1_action.at(2 * i, 2 * j + 1) == Rat(0));
      CHECK(t.h1_action.at(2 * i + 1, 2 * j) == Rat(0));
    }
}

TEST_CASE("duality reversal holds on the corpus") {
  for (int i = 0; i < fx::kNumPolyFixtures; ++i) {
    TorusSpec t = torus_from_poly(poly_from_fixture(fx::kPolyFixtures[i]));
    CHECK(verify_poincare_duality(t));
  }
  for (int i = 0; i < fx::kNumMatrix3Fixtures; ++i) {
    TorusSpec t = torus_from_matrix3(mat3_from_fixture(fx::kMatrix3Fixtures[i].m));
    CHECK(verify_poincare_duality(t));
  }
  TorusSpec id = torus_from_matrix3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(verify_poincare_duality(id));
}

TEST_CASE("wedge pairing transforms by the degree-6 determinant") {
  TorusSpec id = torus_from_matrix3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(wedge_pairing_invariance(id));
  // grado9 fixture
  TorusSpec t = torus_from_poly(poly_from_fixture(fx::kPolyFixtures[1]));
  CHECK(wedge_pairing_invariance(t));
  // random unimodular 3x3 inputs, both determinant signs
  std::mt19937 rng(20260818);
  for (int trial = 0; trial < 4; ++trial) {
    RatMatrix m = random_unimodular(3, rng);
    if (trial % 2 == 1)
      for (size_t k = 0; k < 3; ++k) m.at(0, k) = -m.at(0, k);  // det -1
    TorusSpec s = torus_from_matrix3(m);
    CHECK(wedge_pairing_invariance(s));
  }
}

TEST_CASE("exterior-square functoriality on random unimodular products") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 5; ++trial) {
    RatMatrix a = random_unimodular(6, rng);
    RatMatrix b = random_unimodular(6, rng);
    RatMatrix lhs = exterior_power(mul(a, b), 2);
    RatMatrix rhs = mul(exterior_power(a, 2), exterior_power(b, 2));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("intersection-form signatures on the rational Hodge blocks") {
  TorusSpec t = torus_from_matrix3(mat3_from_fixture(fx::kMatrix3Fixtures[0].m));
  HodgeSignature s = hodge_form_signature(t);
  CHECK(s.block11.pos == fx::kHodgeSig11[0]);
  CHECK(s.block11.neg == fx::kHodgeSig11[1]);
  CHECK(s.block11.zero == fx::kHodgeSig11[2]);
  CHECK(s.block20.pos == fx::kHodgeSig20[0]);
  CHECK(s.block20.neg == fx::kHodgeSig20[1]);
  CHECK(s.block20.zero == fx::kHodgeSig20[2]);
  CHECK(s.orthogonal == fx::kHodgeOrthogonal);
  // total signature of the degree-2 form: (1, 14)
  CHECK(s.block11.pos + s.block20.pos == 1);
  CHECK(s.block11.neg + s.block20.neg == 14);

  // does not depend on the automorphism chosen
  TorusSpec u = torus_from_matrix3(mat3_from_fixture(fx::kMatrix3Fixtures[1].m));
  HodgeSignature s2 = hodge_form_signature(u);
  CHECK(s2.block11 == s.block11);
  CHECK(s2.block20 == s.block20);

  TorusSpec p = torus_from_poly(poly_from_fixture(fx::kPolyFixtures[0]));
  CHECK(code_of([&] { hodge_form_signature(p); }) == errc::unsupported);
}

TEST_CASE("inertia is a congruence invariant") {
  std::mt19937 rng(11);
  RatMatrix s(5, 5);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = i; j < 5; ++j) {
      s.at(i, j) = coef(rng);
      s.at(j, i) = s.at(i, j);
    }
  Inertia base = signature_of_symmetric(s);
  CHECK(base.pos + base.neg + base.zero == 5);
  for (int trial = 0; trial < 3; ++trial) {
    RatMatrix u = random_unimodular(5, rng);
    RatMatrix congruent = mul(mul(transpose(u), s), u);
    CHECK(signature_of_symmetric(congruent) == base);
  }
}

TEST_CASE("split spectra of poly tori: sizes, pairing, and moduli") {
  TorusSpec t = torus_from_poly(poly_from_fixture(fx::kPolyFixtures[0]));
  HodgeSpectra hs = hodge_spectra(t);
  CHECK(hs.h1_roots.size() == 6);
  CHECK(hs.h20.size() == 3);
  CHECK(hs.h11.size() == 9);
  CHECK(hs.h02.size() == 3);
  // pairing is a fixed-point-free involution (no real roots)
  for (size_t i = 0; i < 6; ++i) {
    CHECK(hs.conj_pair[i] != i);
    CHECK(hs.conj_pair[hs.conj_pair[i]] == i);
  }
  // every designated plane root has positive imaginary part
  for (int r : hs.plane_root) {
    REQUIRE(r >= 0);
    CHECK(hs.h1_roots[r].im > hs.h1_roots[r].rad);
  }
  // |det| of the degree-2 action is 1, so the product of all 15 moduli^2
  // enclosures must allow 1
  Rat lo(1), hi(1);
  for (const auto* block : {&hs.h20, &hs.h11, &hs.h02})
    for (const SpectrumEntry& e : *block) {
      lo *= ball_mod2_lower(e.value);
      hi *= ball_mod2_upper(e.value);
    }
  CHECK(lo <= Rat(1));
  CHECK(hi >= Rat(1));
}

TEST_CASE("split spectra moduli cover the degree-2 eigenvalue moduli") {
  // The multiset of |.|^2 over h20+h11+h02 must agree with the squared
  // moduli of the roots of the degree-2 charpoly: compare by interval
  // intersection against certified enclosures of those roots.
  const auto& f = fx::kPolyFixtures[1];  // grado9
  TorusSpec t = torus_from_poly(poly_from_fixture(f));
  HodgeSpectra hs = hodge_spectra(t);
  IntPoly q2 = charpoly(induced_action(t, 2)).primitive_int();
  std::vector<ComplexBall> q2roots = certified_roots(squarefree_part(q2));
  size_t covered = 0;
  for (const auto* block : {&hs.h20, &hs.h11, &hs.h02})
    for (const SpectrumEntry& e : *block) {
      bool hit = false;
      for (const ComplexBall& r : q2roots) {
        Rat dre = e.value.re - r.re, dim = e.value.im - r.im;
        Rat rs = e.value.rad + r.rad;
        if (dre * dre + dim * dim <= rs * rs) hit = true;
      }
      if (hit) ++covered;
    }
  CHECK(covered == 15);
}

TEST_CASE("matrix3 spectra fall back to the 3x3 data") {
  TorusSpec t = torus_from_matrix3(mat3_from_fixture(fx::kMatrix3Fixtures[0].m));
  HodgeSpectra hs = hodge_spectra(t);
  CHECK(hs.h20.size() == 3);
  CHECK(hs.h11.size() == 9);
  CHECK(hs.h02.size() == 3);
  // unipotent: every eigenvalue encloses 1
  for (const auto* block : {&hs.h20, &hs.h11, &hs.h02})
    for (const SpectrumEntry& e : *block) {
      Rat dre = e.value.re - 1;
      CHECK(dre * dre + e.value.im * e.value.im <= e.value.rad * e.value.rad);
    }
}
