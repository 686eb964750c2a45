#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "kahler3/algebraic.hpp"
#include "kahler3/growth.hpp"
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

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const k3_error& e) {
    return e.code();
  }
  return errc::unsupported;  // sentinel: no throw
}

}  // namespace

TEST_CASE("fits reproduce the frozen reference values on the plane-action corpus") {
  for (int i = 0; i < fx::kNumMatrix3Fixtures; ++i) {
    const auto& f = fx::kMatrix3Fixtures[i];
    CAPTURE(f.name);
    const TorusSpec t = torus_from_matrix3(mat3_from_fixture(f.m));
    const GrowthFit fit9 = growth_fit(t.h11_action, 500);
    CHECK(std::abs(fit9.rho_fit - f.fit9_rho) < 1e-6);
    CHECK(std::abs(fit9.k_fit - f.fit9_k) < 1e-6);
    const GrowthFit fit15 = growth_fit(induced_action(t, 2), 500);
    CHECK(std::abs(fit15.rho_fit - f.fit15_rho) < 1e-6);
    CHECK(std::abs(fit15.k_fit - f.fit15_k) < 1e-6);

    // The numeric route agrees with the exact Jordan-structure prediction.
    const GrowthPrediction pred = predicted_growth(induced_action(t, 2));
    CHECK(std::abs(fit15.rho_fit - to_double(pred.rho)) <= 1e-6 * to_double(pred.rho));
    CHECK(std::abs(fit15.k_fit - pred.k) <= 0.2);
  }
}

TEST_CASE("exponential regime locks onto the dominant eigenvalue") {
  // Fibonacci-style 2x2: rho = (3 + sqrt(5))/2, simple, k = 0.
  RatMatrix g(2, 2);
  g.at(0, 0) = 2;
  g.at(0, 1) = 1;
  g.at(1, 0) = 1;
  g.at(1, 1) = 1;
  const GrowthFit fit = growth_fit(g, 500);
  const double rho = (3.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(fit.rho_fit - rho) <= 1e-9 * rho);
  CHECK(std::abs(fit.k_fit) <= 0.05);

  // A defective eigenvalue 2 with a size-2 block: k = 1.
  RatMatrix j(2, 2);
  j.at(0, 0) = 2;
  j.at(0, 1) = 1;
  j.at(1, 1) = 2;
  const GrowthFit jfit = growth_fit(j, 500);
  CHECK(std::abs(jfit.rho_fit - 2.0) <= 1e-9 * 2.0);
  CHECK(std::abs(jfit.k_fit - 1.0) <= 0.05);
}

TEST_CASE("degenerate samples and input validation") {
  const GrowthFit id_fit = growth_fit(RatMatrix::identity(4), 500);
  CHECK(id_fit.rho_fit == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(id_fit.k_fit) < 1e-9);

  // Nilpotent: powers vanish, so there is no growth to fit.
  RatMatrix nil(3, 3);
  nil.at(0, 1) = 1;
  nil.at(1, 2) = 1;
  const GrowthFit nil_fit = growth_fit(nil, 500);
  CHECK(nil_fit.rho_fit == 0.0);
  CHECK(nil_fit.k_fit == 0.0);

  CHECK(code_of([&] { (void)growth_fit(RatMatrix::identity(2), 49); }) == errc::domain_error);
  CHECK(code_of([&] { (void)growth_fit(RatMatrix::identity(2), 500, 0.0); }) ==
        errc::domain_error);
  CHECK(code_of([&] { (void)growth_fit(RatMatrix::identity(2), 500, 1.0); }) ==
        errc::domain_error);
  RatMatrix rect(2, 3);
  CHECK(code_of([&] { (void)growth_fit(rect, 500); }) == errc::dimension_mismatch);
}
