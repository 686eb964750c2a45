#ifndef KAHLER3_GROWTH_HPP
#define KAHLER3_GROWTH_HPP

// Numeric growth-rate fit for matrix powers, independent of the exact
// Jordan-structure route: fits ||m^n|| ~ c * n^k * rho^n from the actual
// powers of the matrix, so the two answers can be compared.

#include "kahler3/matrix.hpp"

namespace kahler3 {

struct GrowthFit {
  double rho_fit = 0.0;  // fitted exponential base
  double k_fit = 0.0;    // fitted polynomial degree of the subexponential part
};

// Fits the sup-norm growth of m^n over n = 1..n_max. Powers are computed in
// exact rational arithmetic (no overflow at any size); only the logarithms
// are floated. Two regimes, selected by a wide-window estimate of log(rho):
//
//   * polynomial growth (rho == 1): the doubling differences
//     d_n = (log P_{2n} - log P_n)/n are extrapolated to n -> infinity
//     through a three-node solve in powers of 1/n, eliminating the
//     subexponential drift to third order;
//   * exponential growth: a telescoped endpoint ratio over the trailing
//     window, with the k*log(n) drift removed exactly by scanning the
//     integer k whose residuals are smallest.
//
// k_fit is then the least-squares slope of log(P_n / rho^n) against log n
// over the trailing `window` fraction of the samples. A zero power of a
// nilpotent matrix short-circuits to {0, 0}.
//
// Throws domain_error when n_max < 50 or window is not in (0, 1).
GrowthFit growth_fit(const RatMatrix& m, int n_max = 500, double window = 0.4);

}  // namespace kahler3

#endif
