#include "kahler3/matrix.hpp"

#include <algorithm>

namespace kahler3 {

RatMatrix RatMatrix::identity(size_t n) {
  RatMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_longs(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols)
      throw k3_error(errc::dimension_mismatch, "ragged matrix literal");
    for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = Rat(rows[i][j]);
  }
  return m;
}

static void require_same_shape(const RatMatrix& x, const RatMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw k3_error(errc::dimension_mismatch, "matrix shapes differ");
}

RatMatrix add(const RatMatrix& x, const RatMatrix& y) {
  require_same_shape(x, y);
  RatMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

RatMatrix sub(const RatMatrix& x, const RatMatrix& y) {
  require_same_shape(x, y);
  RatMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

RatMatrix mul(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols != y.rows) throw k3_error(errc::dimension_mismatch, "matrix product shapes");
  RatMatrix r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      const Rat& xv = x.at(i, k);
      if (xv == 0) continue;
      for (size_t j = 0; j < y.cols; ++j) {
        const Rat& yv = y.at(k, j);
        if (yv == 0) continue;
        r.at(i, j) += xv * yv;
      }
    }
  return r;
}

RatMatrix mul_scalar(const RatMatrix& x, const Rat& s) {
  RatMatrix r = x;
  for (Rat& v : r.a) v *= s;
  return r;
}

RatMatrix transpose(const RatMatrix& x) {
  RatMatrix r(x.cols, x.rows);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

RatMatrix matrix_power(const RatMatrix& x, unsigned long e) {
  if (!x.is_square()) throw k3_error(errc::dimension_mismatch, "power of non-square matrix");
  RatMatrix acc = RatMatrix::identity(x.rows);
  RatMatrix base = x;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    if (e >>= 1) base = mul(base, base);
  }
  return acc;
}

Rat trace(const RatMatrix& x) {
  if (!x.is_square()) throw k3_error(errc::dimension_mismatch, "trace of non-square matrix");
  Rat t(0);
  for (size_t i = 0; i < x.rows; ++i) t += x.at(i, i);
  return t;
}

// Clear denominators to an integer matrix plus the scale that was removed.
static std::pair<std::vector<std::vector<Int>>, Int> clear_denominators(const RatMatrix& x) {
  Int den(1);
  for (const Rat& v : x.a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<std::vector<Int>> m(x.rows, std::vector<Int>(x.cols));
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) {
      Rat scaled = x.at(i, j) * Rat(den);
      m[i][j] = scaled.get_num();
    }
  return {std::move(m), den};
}

Rat det(const RatMatrix& x) {
  if (!x.is_square()) throw k3_error(errc::dimension_mismatch, "determinant of non-square matrix");
  size_t n = x.rows;
  if (n == 0) return Rat(1);
  auto [m, den] = clear_denominators(x);
  // Bareiss fraction-free elimination.
  Int prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return Rat(0);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Int d = sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
  Rat result(d, pow_int(den, static_cast<unsigned long>(n)));
  result.canonicalize();
  return result;
}

// Row echelon over Q; returns (rank, echelon form) and optionally records
// pivot columns.
static size_t echelon(RatMatrix& m, std::vector<size_t>* pivot_cols = nullptr,
                      size_t pivot_col_limit = SIZE_MAX) {
  size_t r = 0;
  size_t limit = std::min(pivot_col_limit, m.cols);
  for (size_t c = 0; c < limit && r < m.rows; ++c) {
    size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    Rat inv = 1 / m.at(r, c);
    for (size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

size_t rank(const RatMatrix& x) {
  RatMatrix m = x;
  return echelon(m);
}

size_t nullity(const RatMatrix& x) { return x.cols - rank(x); }

RatMatrix inverse(const RatMatrix& x) {
  if (!x.is_square()) throw k3_error(errc::dimension_mismatch, "inverse of non-square matrix");
  size_t n = x.rows;
  RatMatrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = x.at(i, j);
    aug.at(i, n + i) = 1;
  }
  if (echelon(aug, nullptr, n) != n) throw k3_error(errc::domain_error, "matrix is singular");
  RatMatrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

RatPoly charpoly(const RatMatrix& x) {
  if (!x.is_square())
    throw k3_error(errc::dimension_mismatch, "characteristic polynomial of non-square matrix");
  size_t n = x.rows;
  // Trace of x^k for k = 1..n equals the k-th power sum of the eigenvalues;
  // Newton's identities then rebuild the monic characteristic polynomial.
  std::vector<Rat> s(n);
  RatMatrix p = x;
  for (size_t k = 0; k < n; ++k) {
    s[k] = trace(p);
    if (k + 1 < n) p = mul(p, x);
  }
  return poly_from_power_sums(s);
}

RatMatrix eval_poly(const RatPoly& p, const RatMatrix& x) {
  if (!x.is_square()) throw k3_error(errc::dimension_mismatch, "polynomial of non-square matrix");
  RatMatrix acc(x.rows, x.cols);
  for (size_t i = p.c.size(); i-- > 0;) {
    acc = mul(acc, x);
    if (p.c[i] != 0)
      for (size_t d = 0; d < x.rows; ++d) acc.at(d, d) += p.c[i];
  }
  return acc;
}

RatMatrix eval_poly(const IntPoly& p, const RatMatrix& x) { return eval_poly(RatPoly(p), x); }

RatMatrix kronecker(const RatMatrix& x, const RatMatrix& y) {
  RatMatrix r(x.rows * y.rows, x.cols * y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) {
      const Rat& v = x.at(i, j);
      if (v == 0) continue;
      for (size_t k = 0; k < y.rows; ++k)
        for (size_t l = 0; l < y.cols; ++l)
          r.at(i * y.rows + k, j * y.cols + l) = v * y.at(k, l);
    }
  return r;
}

unsigned long binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b.get_ui();
}

size_t subset_rank(const std::vector<unsigned>& subset, unsigned n) {
  // Position of an increasing k-subset in lexicographic order.
  size_t r = 0;
  unsigned k = static_cast<unsigned>(subset.size());
  unsigned prev = 0;
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned v = prev; v < subset[i]; ++v)
      r += binomial(n - v - 1, k - i - 1);
    prev = subset[i] + 1;
  }
  return r;
}

std::vector<unsigned> subset_unrank(size_t r, unsigned n, unsigned k) {
  std::vector<unsigned> subset;
  subset.reserve(k);
  unsigned v = 0;
  for (unsigned i = 0; i < k; ++i) {
    while (true) {
      unsigned long block = binomial(n - v - 1, k - i - 1);
      if (r < block) break;
      r -= block;
      ++v;
    }
    subset.push_back(v);
    ++v;
  }
  return subset;
}

static Rat minor_det(const RatMatrix& x, const std::vector<unsigned>& rows,
                     const std::vector<unsigned>& cols) {
  size_t k = rows.size();
  RatMatrix m(k, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) m.at(i, j) = x.at(rows[i], cols[j]);
  return det(m);
}

RatMatrix exterior_power(const RatMatrix& x, unsigned k) {
  if (!x.is_square()) throw k3_error(errc::dimension_mismatch, "exterior power of non-square matrix");
  unsigned n = static_cast<unsigned>(x.rows);
  if (k > n) throw k3_error(errc::domain_error, "exterior power index exceeds dimension");
  size_t dim = binomial(n, k);
  RatMatrix r(dim, dim);
  if (k == 0) {
    r.at(0, 0) = 1;
    return r;
  }
  std::vector<std::vector<unsigned>> subsets(dim);
  for (size_t i = 0; i < dim; ++i) subsets[i] = subset_unrank(i, n, k);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) r.at(i, j) = minor_det(x, subsets[i], subsets[j]);
  return r;
}

RatMatrix companion(const IntPoly& p) {
  if (p.degree() < 1) throw k3_error(errc::domain_error, "companion matrix needs degree >= 1");
  if (!p.is_monic()) throw k3_error(errc::validation_not_monic, "companion matrix needs a monic polynomial");
  size_t n = static_cast<size_t>(p.degree());
  RatMatrix m(n, n);
  for (size_t i = 1; i < n; ++i) m.at(i, i - 1) = 1;
  for (size_t i = 0; i < n; ++i) m.at(i, n - 1) = Rat(-p.c[i]);
  return m;
}

bool is_integer_matrix(const RatMatrix& x) {
  for (const Rat& v : x.a)
    if (v.get_den() != 1) return false;
  return true;
}

Inertia signature_of_symmetric(const RatMatrix& s) {
  if (!s.is_square()) throw k3_error(errc::dimension_mismatch, "inertia needs a square matrix");
  size_t n = s.rows;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (s.at(i, j) != s.at(j, i))
        throw k3_error(errc::validation_bad_form, "inertia needs a symmetric matrix");
  RatMatrix w = s;
  std::vector<bool> done(n, false);
  Inertia out;
  for (;;) {
    // Prefer a nonzero diagonal pivot among the active rows.
    size_t piv = n;
    for (size_t i = 0; i < n && piv == n; ++i)
      if (!done[i] && sgn(w.at(i, i)) != 0) piv = i;
    if (piv == n) {
      // No diagonal pivot: borrow one by a congruence row/column addition
      // (the resulting diagonal entry is 2*w[i][j] != 0).
      size_t bi = n, bj = n;
      for (size_t i = 0; i < n && bi == n; ++i)
        if (!done[i])
          for (size_t j = i + 1; j < n; ++j)
            if (!done[j] && sgn(w.at(i, j)) != 0) {
              bi = i;
              bj = j;
              break;
            }
      if (bi == n) break;  // the active block is zero
      for (size_t k = 0; k < n; ++k) w.at(bi, k) += w.at(bj, k);
      for (size_t k = 0; k < n; ++k) w.at(k, bi) += w.at(k, bj);
      piv = bi;
    }
    const Rat d = w.at(piv, piv);
    if (sgn(d) > 0)
      ++out.pos;
    else
      ++out.neg;
    done[piv] = true;
    for (size_t j = 0; j < n; ++j) {
      if (done[j] || sgn(w.at(j, piv)) == 0) continue;
      Rat f = w.at(j, piv) / d;
      for (size_t k = 0; k < n; ++k) w.at(j, k) -= f * w.at(piv, k);
      for (size_t k = 0; k < n; ++k) w.at(k, j) -= f * w.at(k, piv);
    }
  }
  out.zero = static_cast<int>(n) - out.pos - out.neg;
  return out;
}

}  // namespace kahler3
