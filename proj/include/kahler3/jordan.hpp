#ifndef KAHLER3_JORDAN_HPP
#define KAHLER3_JORDAN_HPP

#include <optional>
#include <utility>
#include <vector>

#include "kahler3/algebraic.hpp"
#include "kahler3/matrix.hpp"

namespace kahler3 {

// Jordan block structure attached to one irreducible rational factor of the
// characteristic polynomial. `blocks` lists (size, count) per root of the
// factor, largest size first; every root of one factor has the same counts.
struct FactorBlocks {
  IntPoly poly;
  int degree = 0;
  std::vector<std::pair<int, int>> blocks;
  int max_block = 0;
};

struct JordanReport {
  std::vector<FactorBlocks> factors;
  int dimension = 0;
  int max_block = 0;

  // Every block size with multiplicity, over all complex roots (each factor
  // contributes degree copies of its per-root list), sorted descending.
  std::vector<int> all_blocks() const;
};

// Exact per-factor block structure from kernel dimensions of P_i(m)^k.
JordanReport jordan_structure(const RatMatrix& m);

// Multiplicative Jordan-Chevalley decomposition m = S * U = U * S with S
// semisimple, U unipotent, both polynomials in m over Q. The denominator
// lcms record how far from integral the parts are (1 = integer entries).
struct ChevalleyPair {
  RatMatrix semisimple;
  RatMatrix unipotent;
  Int semisimple_denominator_lcm{1};
  Int unipotent_denominator_lcm{1};
};
ChevalleyPair chevalley_decompose(const RatMatrix& m);

// lcm of the cyclotomic orders of the charpoly factors: the smallest N with
// m^N unipotent. nullopt when some factor is not cyclotomic. Requires
// integer entries and invertibility.
std::optional<unsigned long> unipotency_order(const RatMatrix& m);

// How the prediction was reached:
//   cyclotomic      - every factor cyclotomic, spectral radius exactly 1;
//   dominant_real   - a real eigenvalue certifiably dominates all complex
//                     moduli (strict ball comparison);
//   composed_exact  - all moduli identified exactly as algebraic numbers
//                     through per-factor pair-product polynomials.
enum class GrowthMethod { cyclotomic, dominant_real, composed_exact };

// Growth of ||m^n|| ~ c * n^k * rho^n: rho is the spectral radius as an
// exact real algebraic number; k is (largest Jordan block among eigenvalues
// of modulus rho) - 1. Throws `undecided` when moduli cannot be separated
// within the degree and precision budgets.
struct GrowthPrediction {
  RealAlgebraic rho;
  int k = 0;
  GrowthMethod method = GrowthMethod::cyclotomic;
};
GrowthPrediction predicted_growth(const RatMatrix& m);

}  // namespace kahler3

#endif
