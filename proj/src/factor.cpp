#include "kahler3/factor.hpp"

#include <algorithm>
#include <cstdint>

namespace kahler3 {

IntPoly FactorList::product() const {
  IntPoly acc = IntPoly::constant(unit);
  for (const Factor& f : factors)
    acc = mul(acc, pow_poly(f.poly, static_cast<unsigned>(f.multiplicity)));
  return acc;
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p < 2^31, coefficients in [0, p).

namespace {

using FpPoly = std::vector<uint64_t>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

uint64_t fp_mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t fp_powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = fp_mulmod(r, a, p);
    a = fp_mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t fp_inv(uint64_t a, uint64_t p) { return fp_powmod(a, p - 2, p); }

FpPoly fp_from_int(const IntPoly& f, uint64_t p) {
  FpPoly a(f.c.size());
  Int pp(static_cast<unsigned long>(p));
  for (size_t i = 0; i < f.c.size(); ++i) {
    Int r = f.c[i] % pp;
    if (r < 0) r += pp;
    a[i] = r.get_ui();
  }
  fp_trim(a);
  return a;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, uint64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t x = i < a.size() ? a[i] : 0;
    uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_scale(const FpPoly& a, uint64_t s, uint64_t p) {
  FpPoly r = a;
  for (uint64_t& x : r) x = fp_mulmod(x, s, p);
  fp_trim(r);
  return r;
}

FpPoly fp_monic(const FpPoly& a, uint64_t p) {
  if (a.empty()) return a;
  return fp_scale(a, fp_inv(a.back(), p), p);
}

// Remainder of a by b; b need not be monic.
FpPoly fp_mod(FpPoly a, const FpPoly& b, uint64_t p) {
  if (b.empty()) throw k3_error(errc::domain_error, "mod by zero polynomial");
  uint64_t inv = fp_inv(b.back(), p);
  while (fp_deg(a) >= fp_deg(b)) {
    uint64_t coef = fp_mulmod(a.back(), inv, p);
    size_t k = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[i + k] = (a[i + k] + p - fp_mulmod(coef, b[i], p)) % p;
    fp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

std::pair<FpPoly, FpPoly> fp_divrem(FpPoly a, const FpPoly& b, uint64_t p) {
  if (b.empty()) throw k3_error(errc::domain_error, "division by zero polynomial");
  if (fp_deg(a) < fp_deg(b)) return {{}, a};
  FpPoly q(a.size() - b.size() + 1, 0);
  uint64_t inv = fp_inv(b.back(), p);
  while (fp_deg(a) >= fp_deg(b)) {
    uint64_t coef = fp_mulmod(a.back(), inv, p);
    size_t k = a.size() - b.size();
    q[k] = coef;
    for (size_t i = 0; i < b.size(); ++i)
      a[i + k] = (a[i + k] + p - fp_mulmod(coef, b[i], p)) % p;
    fp_trim(a);
    if (a.empty()) break;
  }
  fp_trim(q);
  return {q, a};
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

FpPoly fp_derivative(const FpPoly& a, uint64_t p) {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = fp_mulmod(a[i], i % p, p);
  fp_trim(r);
  return r;
}

// Extended Euclid: returns (s, t) with s*a + t*b = 1; gcd(a, b) must be 1.
std::pair<FpPoly, FpPoly> fp_bezout(const FpPoly& a, const FpPoly& b, uint64_t p) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = {1}, s1 = {};
  FpPoly t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = fp_divrem(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (fp_deg(r0) != 0)
    throw k3_error(errc::invariant_violation, "bezout inputs are not coprime");
  uint64_t inv = fp_inv(r0[0], p);
  return {fp_scale(s0, inv, p), fp_scale(t0, inv, p)};
}

// x^(p^i) mod f for i = 0..n-1 drives the Berlekamp matrix.
FpPoly fp_xpow_p_mod(const FpPoly& f, uint64_t p) {
  FpPoly result = {1};
  FpPoly base = {0, 1};
  base = fp_mod(base, f, p);
  uint64_t e = p;
  while (e) {
    if (e & 1) result = fp_mod(fp_mul(result, base, p), f, p);
    base = fp_mod(fp_mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

// Kernel basis of an n x n matrix over F_p (column vectors).
std::vector<std::vector<uint64_t>> fp_kernel(std::vector<std::vector<uint64_t>> m, uint64_t p) {
  size_t n = m.size();
  std::vector<long> pivot_of_col(n, -1);
  size_t row = 0;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t piv = row;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[row], m[piv]);
    uint64_t inv = fp_inv(m[row][col], p);
    for (size_t j = 0; j < n; ++j) m[row][j] = fp_mulmod(m[row][j], inv, p);
    for (size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      uint64_t c = m[i][col];
      for (size_t j = 0; j < n; ++j)
        m[i][j] = (m[i][j] + p - fp_mulmod(c, m[row][j], p)) % p;
    }
    pivot_of_col[col] = static_cast<long>(row);
    ++row;
  }
  std::vector<std::vector<uint64_t>> basis;
  for (size_t col = 0; col < n; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<uint64_t> v(n, 0);
    v[col] = 1;
    for (size_t c2 = 0; c2 < n; ++c2)
      if (pivot_of_col[c2] >= 0) {
        uint64_t val = m[static_cast<size_t>(pivot_of_col[c2])][col];
        v[c2] = val == 0 ? 0 : p - val;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<FpPoly> berlekamp(const FpPoly& f, uint64_t p) {
  size_t n = static_cast<size_t>(fp_deg(f));
  if (n == 1) return {f};
  FpPoly xp = fp_xpow_p_mod(f, p);
  std::vector<std::vector<uint64_t>> q(n, std::vector<uint64_t>(n, 0));
  FpPoly cur = {1};
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < cur.size(); ++j) q[j][i] = cur[j];
    if (i + 1 < n) cur = fp_mod(fp_mul(cur, xp, p), f, p);
  }
  for (size_t i = 0; i < n; ++i) q[i][i] = (q[i][i] + p - 1) % p;
  auto basis = fp_kernel(std::move(q), p);
  size_t r = basis.size();
  if (r == 1) return {f};
  std::vector<FpPoly> factors = {f};
  for (const auto& vec : basis) {
    if (factors.size() == r) break;
    FpPoly v(vec);
    fp_trim(v);
    if (fp_deg(v) <= 0) continue;
    for (uint64_t c = 0; c < p && factors.size() < r; ++c) {
      FpPoly vc = v;
      if (vc.empty()) vc.push_back(0);
      vc[0] = (vc[0] + p - c % p) % p;
      fp_trim(vc);
      std::vector<FpPoly> next;
      for (FpPoly& h : factors) {
        if (fp_deg(h) <= 1) {
          next.push_back(std::move(h));
          continue;
        }
        FpPoly g = fp_gcd(h, vc, p);
        if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(h)) {
          next.push_back(fp_divrem(h, g, p).first);
          next.push_back(std::move(g));
        } else {
          next.push_back(std::move(h));
        }
      }
      factors = std::move(next);
    }
  }
  for (FpPoly& h : factors) h = fp_monic(h, p);
  return factors;
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic mod m (m an arbitrary positive Int), coefficients
// normalized into [0, m). Divisors are always monic here.

IntPoly pm_red(IntPoly a, const Int& m) {
  for (Int& x : a.c) {
    x %= m;
    if (x < 0) x += m;
  }
  a.trim();
  return a;
}

IntPoly pm_mul(const IntPoly& a, const IntPoly& b, const Int& m) {
  return pm_red(mul(a, b), m);
}

IntPoly pm_sub(const IntPoly& a, const IntPoly& b, const Int& m) {
  return pm_red(sub(a, b), m);
}

IntPoly pm_add(const IntPoly& a, const IntPoly& b, const Int& m) {
  return pm_red(add(a, b), m);
}

std::pair<IntPoly, IntPoly> pm_divrem_monic(IntPoly a, const IntPoly& b, const Int& m) {
  if (b.is_zero() || b.lc() != 1)
    throw k3_error(errc::invariant_violation, "modular division requires monic divisor");
  a = pm_red(std::move(a), m);
  if (a.degree() < b.degree()) return {IntPoly::zero(), a};
  IntPoly q;
  q.c.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Int(0));
  while (!a.is_zero() && a.degree() >= b.degree()) {
    size_t k = static_cast<size_t>(a.degree() - b.degree());
    Int coef = a.lc();
    q.c[k] = coef;
    for (size_t i = 0; i < b.c.size(); ++i) {
      Int& t = a.c[i + k];
      t = (t - coef * b.c[i]) % m;
      if (t < 0) t += m;
    }
    a.trim();
  }
  q.trim();
  return {q, a};
}

// Symmetric representative: coefficients mapped into (-m/2, m/2].
IntPoly pm_symmetric(IntPoly a, const Int& m) {
  Int half = m / 2;
  for (Int& x : a.c) {
    x %= m;
    if (x < 0) x += m;
    if (x > half) x -= m;
  }
  a.trim();
  return a;
}

IntPoly fp_to_int(const FpPoly& a) {
  IntPoly r;
  r.c.reserve(a.size());
  for (uint64_t x : a) r.c.emplace_back(static_cast<unsigned long>(x));
  r.trim();
  return r;
}

struct LiftPair {
  IntPoly f, g, s, t;  // F = f*g and s*f + t*g = 1, all mod m
};

// One quadratic Hensel step: valid mod m in, valid mod m^2 out.
LiftPair hensel_step(const IntPoly& F, const LiftPair& in, const Int& m) {
  Int m2 = m * m;
  IntPoly e = pm_sub(F, mul(in.f, in.g), m2);
  auto [q, r] = pm_divrem_monic(pm_mul(in.s, e, m2), in.g, m2);
  IntPoly fstar = pm_add(in.f, pm_add(pm_mul(in.t, e, m2), pm_mul(q, in.f, m2), m2), m2);
  IntPoly gstar = pm_add(in.g, r, m2);
  if (!pm_sub(F, mul(fstar, gstar), m2).is_zero())
    throw k3_error(errc::invariant_violation, "hensel factor step failed");
  IntPoly b = pm_sub(pm_add(pm_mul(in.s, fstar, m2), pm_mul(in.t, gstar, m2), m2),
                     IntPoly::constant(1), m2);
  auto [c, d] = pm_divrem_monic(pm_mul(in.s, b, m2), gstar, m2);
  IntPoly sstar = pm_sub(in.s, d, m2);
  IntPoly tstar = pm_sub(pm_sub(in.t, pm_mul(in.t, b, m2), m2), pm_mul(c, fstar, m2), m2);
  if (pm_sub(pm_add(pm_mul(sstar, fstar, m2), pm_mul(tstar, gstar, m2), m2),
             IntPoly::constant(1), m2)
          .degree() >= 0)
    throw k3_error(errc::invariant_violation, "hensel bezout step failed");
  return {fstar, gstar, sstar, tstar};
}

// Lift a mod-p factorization of monic F to modulus `target` (a power of p)
// by recursive balanced splitting.
std::vector<IntPoly> lift_factors(const IntPoly& F, const std::vector<FpPoly>& mod_factors,
                                  uint64_t p, const Int& target) {
  if (mod_factors.size() == 1) return {pm_red(F, target)};
  size_t half = mod_factors.size() / 2;
  std::vector<FpPoly> left(mod_factors.begin(), mod_factors.begin() + static_cast<long>(half));
  std::vector<FpPoly> right(mod_factors.begin() + static_cast<long>(half), mod_factors.end());
  FpPoly f0 = {1}, g0 = {1};
  for (const auto& h : left) f0 = fp_mul(f0, h, p);
  for (const auto& h : right) g0 = fp_mul(g0, h, p);
  auto [s0, t0] = fp_bezout(f0, g0, p);
  LiftPair pair{fp_to_int(f0), fp_to_int(g0), fp_to_int(s0), fp_to_int(t0)};
  Int m(static_cast<unsigned long>(p));
  while (m < target) {
    pair = hensel_step(pm_red(F, m * m), pair, m);
    m *= m;
  }
  IntPoly fl = pm_red(pair.f, target);
  IntPoly gl = pm_red(pair.g, target);
  std::vector<IntPoly> out = lift_factors(fl, left, p, target);
  std::vector<IntPoly> rest = lift_factors(gl, right, p, target);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool is_small_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Subset recombination of lifted modular factors into true factors of the
// monic polynomial F. Searching subsets by increasing size makes every
// emitted factor irreducible.
std::vector<IntPoly> zassenhaus_recombine(IntPoly F, std::vector<IntPoly> lifted,
                                          const Int& modulus) {
  std::vector<IntPoly> out;
  std::vector<size_t> active(lifted.size());
  for (size_t i = 0; i < active.size(); ++i) active[i] = i;
  size_t size = 1;
  while (2 * size <= active.size()) {
    std::vector<size_t> idx(size);
    for (size_t i = 0; i < size; ++i) idx[i] = i;
    bool found = false;
    while (true) {
      IntPoly cand = IntPoly::constant(1);
      for (size_t i : idx) cand = pm_mul(cand, lifted[active[i]], modulus);
      cand = pm_symmetric(cand, modulus);
      bool ok = !cand.is_zero();
      if (ok) {
        Int f0 = F.is_zero() ? Int(0) : F.c[0];
        if (f0 != 0 && cand.c[0] != 0 && !mpz_divisible_p(f0.get_mpz_t(), cand.c[0].get_mpz_t()))
          ok = false;
        if (ok) {
          Int f1 = eval_int(F, Int(1));
          Int c1 = eval_int(cand, Int(1));
          if (f1 != 0 && (c1 == 0 || !mpz_divisible_p(f1.get_mpz_t(), c1.get_mpz_t()))) ok = false;
        }
      }
      if (ok && divides(cand, F)) {
        out.push_back(cand);
        F = div_exact(F, cand);
        std::vector<size_t> next;
        for (size_t i = 0, k = 0; i < active.size(); ++i) {
          if (k < idx.size() && idx[k] == i) {
            ++k;
            continue;
          }
          next.push_back(active[i]);
        }
        active = std::move(next);
        found = true;
        break;
      }
      // next combination
      size_t i = size;
      while (i > 0) {
        --i;
        if (idx[i] != i + active.size() - size) {
          ++idx[i];
          for (size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = SIZE_MAX;
          break;
        }
      }
      if (i == SIZE_MAX) break;
    }
    if (!found) ++size;
  }
  if (F.degree() > 0) out.push_back(F);
  return out;
}

// Factor a primitive squarefree polynomial of degree >= 1 into irreducible
// primitive factors.
std::vector<IntPoly> factor_squarefree(const IntPoly& g) {
  if (g.degree() == 1) return {g};
  // Replace g by the monic polynomial lc^(d-1) g(x/lc); its factors map back.
  const Int& lc = g.lc();
  IntPoly F = g;
  if (lc != 1) {
    size_t d = g.c.size() - 1;
    F.c[d] = 1;
    Int power(1);
    for (size_t i = d; i-- > 0;) {
      F.c[i] = g.c[i] * power;
      power *= lc;
    }
  }
  // Smallest usable prime: p >= 5, p prime to lc, reduction squarefree.
  uint64_t p = 0;
  for (uint64_t cand = 5;; ++cand) {
    if (!is_small_prime(cand)) continue;
    Int pc(static_cast<unsigned long>(cand));
    if (mpz_divisible_p(lc.get_mpz_t(), pc.get_mpz_t())) continue;
    FpPoly fm = fp_from_int(F, cand);
    if (fp_deg(fm) != F.degree()) continue;
    FpPoly d = fp_derivative(fm, cand);
    if (d.empty()) continue;
    if (fp_deg(fp_gcd(fm, d, cand)) != 0) continue;
    p = cand;
    break;
  }
  FpPoly fm = fp_monic(fp_from_int(F, p), p);
  std::vector<FpPoly> mod_factors = berlekamp(fm, p);
  std::vector<IntPoly> monic_factors;
  if (mod_factors.size() == 1) {
    monic_factors = {F};
  } else {
    // Coefficients of any monic divisor are below 2^d * ||F||_2; lift the
    // factorization past twice that so symmetric representatives are exact.
    Int norm2(0);
    for (const Int& c : F.c) norm2 += c * c;
    Int bound_sq = norm2;
    mpz_mul_2exp(bound_sq.get_mpz_t(), bound_sq.get_mpz_t(),
                 2 * static_cast<mp_bitcnt_t>(F.degree()) + 2);
    Int modulus(static_cast<unsigned long>(p));
    while (modulus * modulus <= bound_sq) modulus *= static_cast<unsigned long>(p);
    std::vector<IntPoly> lifted = lift_factors(F, mod_factors, p, modulus);
    monic_factors = zassenhaus_recombine(F, lifted, modulus);
  }
  if (lc == 1) return monic_factors;
  // Map factors of lc^(d-1) g(x/lc) back to factors of g.
  std::vector<IntPoly> out;
  out.reserve(monic_factors.size());
  for (const IntPoly& h : monic_factors) {
    IntPoly back = h;
    Int power(1);
    for (size_t i = 0; i < back.c.size(); ++i) {
      back.c[i] *= power;
      power *= lc;
    }
    out.push_back(back.primitive());
  }
  return out;
}

}  // namespace

FactorList factor_over_Z(const IntPoly& p) {
  if (p.is_zero()) throw k3_error(errc::domain_error, "cannot factor the zero polynomial");
  if (p.degree() > 40)
    throw k3_error(errc::unsupported, "factorization capped at degree 40");
  FactorList out;
  Int cont = p.content();
  if (sgn(p.lc()) < 0) cont = -cont;
  out.unit = cont;
  IntPoly prim = p.primitive();
  if (prim.degree() == 0) return out;
  for (auto& [sf, mult] : squarefree_decomposition(prim)) {
    for (IntPoly& irr : factor_squarefree(sf)) {
      Factor f;
      f.poly = irr.primitive();
      f.multiplicity = mult;
      out.factors.push_back(std::move(f));
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    for (size_t i = 0; i < a.poly.c.size(); ++i) {
      int c = cmp(a.poly.c[i], b.poly.c[i]);
      if (c != 0) return c < 0;
    }
    return a.multiplicity < b.multiplicity;
  });
  if (out.product() != p)
    throw k3_error(errc::invariant_violation, "factorization does not reproduce its input");
  return out;
}

bool is_irreducible(const IntPoly& p) {
  if (p.degree() < 1) return false;
  FactorList f = factor_over_Z(p);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

std::optional<unsigned long> root_of_unity_order(const IntPoly& p) {
  // Cyclotomic polynomials are the only irreducible monic candidates.
  return cyclotomic_order(p.primitive());
}

bool is_product_of_cyclotomics(const IntPoly& p) {
  if (p.is_zero()) return false;
  IntPoly q = p.primitive();
  if (q.degree() == 0) return true;
  if (!q.is_monic()) return false;
  for (const Factor& f : factor_over_Z(q).factors)
    if (!cyclotomic_order(f.poly)) return false;
  return true;
}

}  // namespace kahler3
