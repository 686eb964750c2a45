#include "kahler3/growth.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "kahler3/base.hpp"

namespace kahler3 {

namespace {

// log of a positive rational, evaluated in 128-bit floating point and
// rounded to double. Handles magnitudes far outside the double exponent
// range, which matrix powers reach quickly.
double log_of_rat(const Rat& q) {
  mpfr_t t;
  mpfr_init2(t, 128);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  const double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

double det3(const double m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

GrowthFit growth_fit(const RatMatrix& m, int n_max, double window) {
  if (!m.is_square() || m.rows == 0)
    throw k3_error(errc::dimension_mismatch, "growth fit needs a nonempty square matrix");
  if (n_max < 50)
    throw k3_error(errc::domain_error, "growth fit needs at least 50 samples");
  if (!(window > 0.0) || !(window < 1.0))
    throw k3_error(errc::domain_error, "trailing window fraction must lie in (0, 1)");

  const size_t dim = m.rows;
  const int N = n_max;

  // Exact powers; only log(max |entry|) is kept per step.
  std::vector<double> logp(static_cast<size_t>(N) + 1, 0.0);
  RatMatrix cur = RatMatrix::identity(dim);
  for (int s = 1; s <= N; ++s) {
    cur = mul(cur, m);
    Rat mx(0);
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j) {
        Rat a = cur.at(i, j);
        if (sgn(a) < 0) a = -a;
        if (a > mx) mx = a;
      }
    if (sgn(mx) == 0) return GrowthFit{0.0, 0.0};
    logp[static_cast<size_t>(s)] = log_of_rat(mx);
  }

  const int start = static_cast<int>(N * (1.0 - window));
  std::vector<int> win;
  for (int s = start; s <= N; ++s) win.push_back(s);
  std::vector<double> xs;
  xs.reserve(win.size());
  for (int s : win) xs.push_back(std::log(static_cast<double>(s)));

  // Wide-window estimate of log(rho) by extrapolating the doubling
  // differences through the model L + a/n + b/n^2.
  const int nodes[3] = {N / 8, N / 4, N / 2};
  double A[3][3];
  double b[3];
  for (int i = 0; i < 3; ++i) {
    const double nd = nodes[i];
    A[i][0] = 1.0;
    A[i][1] = 1.0 / nd;
    A[i][2] = 1.0 / (nd * nd);
    b[i] = (logp[static_cast<size_t>(2 * nodes[i])] - logp[static_cast<size_t>(nodes[i])]) / nd;
  }
  double A0[3][3];
  for (int i = 0; i < 3; ++i) {
    A0[i][0] = b[i];
    A0[i][1] = A[i][1];
    A0[i][2] = A[i][2];
  }
  const double l_wide = det3(A0) / det3(A);

  double L;
  if (std::fabs(l_wide) < 0.05) {
    L = l_wide;
  } else {
    // Exponential regime: telescoped endpoint ratio, drift removed by the
    // best integer k over the trailing window.
    const int W = N / 5;
    const double D = (logp[static_cast<size_t>(N)] - logp[static_cast<size_t>(N - W)]) / W;
    std::optional<double> best_rss;
    double best_l = D;
    const int k_cap = static_cast<int>(std::min<size_t>(dim, 9));
    for (int kc = 0; kc < k_cap; ++kc) {
      const double lk =
          D - kc * std::log(static_cast<double>(N) / static_cast<double>(N - W)) / W;
      double c = 0.0;
      std::vector<double> res;
      res.reserve(win.size());
      for (size_t i = 0; i < win.size(); ++i) {
        const double r = logp[static_cast<size_t>(win[i])] - lk * win[i] - kc * xs[i];
        res.push_back(r);
        c += r;
      }
      c /= static_cast<double>(res.size());
      double rss = 0.0;
      for (double r : res) rss += (r - c) * (r - c);
      if (!best_rss || rss < *best_rss) {
        best_rss = rss;
        best_l = lk;
      }
    }
    L = best_l;
  }

  // Least-squares slope of log(P_n) - n*L against log n.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < win.size(); ++i) {
    const double y = logp[static_cast<size_t>(win[i])] - win[i] * L;
    sx += xs[i];
    sy += y;
    sxx += xs[i] * xs[i];
    sxy += xs[i] * y;
  }
  const double nw = static_cast<double>(win.size());
  GrowthFit out;
  out.rho_fit = std::exp(L);
  out.k_fit = (nw * sxy - sx * sy) / (nw * sxx - sx * sx);
  return out;
}

}  // namespace kahler3
