#include "kahler3/floating.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace kahler3 {

unsigned precision_cap() {
  static unsigned cap = [] {
    const char* env = std::getenv("KAHLER3_PRECISION_CAP");
    if (!env) return 4096u;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v < 128) return 4096u;
    return static_cast<unsigned>(std::min<unsigned long>(v, 1u << 24));
  }();
  return cap;
}

namespace {

// Minimal copyable MPFR value for use in containers.
class BF {
 public:
  explicit BF(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BF(const BF& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BF& operator=(const BF& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~BF() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct CF {
  BF re, im;
  explicit CF(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
};

Rat rat_from_mpfr(mpfr_srcptr x) {
  if (!mpfr_number_p(x)) throw k3_error(errc::precision_exhausted, "non-finite approximation");
  Rat q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

// z <- z - p(z) / prod_{j != i} (z - z_j): one Durand-Kerner sweep.
void dk_sweep(std::vector<CF>& z, const std::vector<BF>& coeff, mpfr_prec_t prec) {
  size_t n = z.size();
  CF num(prec), den(prec), t(prec), diff(prec);
  BF d2(prec), tr(prec), ti(prec);
  for (size_t i = 0; i < n; ++i) {
    // num = p(z_i), Horner
    mpfr_set(num.re.get(), coeff.back().get(), MPFR_RNDN);
    mpfr_set_zero(num.im.get(), 1);
    for (size_t k = coeff.size() - 1; k-- > 0;) {
      mpfr_mul(tr.get(), num.re.get(), z[i].re.get(), MPFR_RNDN);
      mpfr_mul(t.re.get(), num.im.get(), z[i].im.get(), MPFR_RNDN);
      mpfr_sub(tr.get(), tr.get(), t.re.get(), MPFR_RNDN);
      mpfr_mul(ti.get(), num.re.get(), z[i].im.get(), MPFR_RNDN);
      mpfr_mul(t.im.get(), num.im.get(), z[i].re.get(), MPFR_RNDN);
      mpfr_add(ti.get(), ti.get(), t.im.get(), MPFR_RNDN);
      mpfr_add(num.re.get(), tr.get(), coeff[k].get(), MPFR_RNDN);
      mpfr_set(num.im.get(), ti.get(), MPFR_RNDN);
    }
    // den = prod_{j != i} (z_i - z_j)
    mpfr_set_ui(den.re.get(), 1, MPFR_RNDN);
    mpfr_set_zero(den.im.get(), 1);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      mpfr_sub(diff.re.get(), z[i].re.get(), z[j].re.get(), MPFR_RNDN);
      mpfr_sub(diff.im.get(), z[i].im.get(), z[j].im.get(), MPFR_RNDN);
      mpfr_mul(tr.get(), den.re.get(), diff.re.get(), MPFR_RNDN);
      mpfr_mul(t.re.get(), den.im.get(), diff.im.get(), MPFR_RNDN);
      mpfr_sub(tr.get(), tr.get(), t.re.get(), MPFR_RNDN);
      mpfr_mul(ti.get(), den.re.get(), diff.im.get(), MPFR_RNDN);
      mpfr_mul(t.im.get(), den.im.get(), diff.re.get(), MPFR_RNDN);
      mpfr_add(ti.get(), ti.get(), t.im.get(), MPFR_RNDN);
      mpfr_set(den.re.get(), tr.get(), MPFR_RNDN);
      mpfr_set(den.im.get(), ti.get(), MPFR_RNDN);
    }
    // z_i -= num / den
    mpfr_mul(d2.get(), den.re.get(), den.re.get(), MPFR_RNDN);
    mpfr_mul(t.re.get(), den.im.get(), den.im.get(), MPFR_RNDN);
    mpfr_add(d2.get(), d2.get(), t.re.get(), MPFR_RNDN);
    if (mpfr_zero_p(d2.get())) continue;  // coincident iterates; next sweep separates
    mpfr_mul(tr.get(), num.re.get(), den.re.get(), MPFR_RNDN);
    mpfr_mul(t.re.get(), num.im.get(), den.im.get(), MPFR_RNDN);
    mpfr_add(tr.get(), tr.get(), t.re.get(), MPFR_RNDN);
    mpfr_div(tr.get(), tr.get(), d2.get(), MPFR_RNDN);
    mpfr_mul(ti.get(), num.im.get(), den.re.get(), MPFR_RNDN);
    mpfr_mul(t.im.get(), num.re.get(), den.im.get(), MPFR_RNDN);
    mpfr_sub(ti.get(), ti.get(), t.im.get(), MPFR_RNDN);
    mpfr_div(ti.get(), ti.get(), d2.get(), MPFR_RNDN);
    mpfr_sub(z[i].re.get(), z[i].re.get(), tr.get(), MPFR_RNDN);
    mpfr_sub(z[i].im.get(), z[i].im.get(), ti.get(), MPFR_RNDN);
  }
}

// Exact complex evaluation of an integer polynomial at a rational point.
std::pair<Rat, Rat> eval_complex_exact(const IntPoly& p, const Rat& re, const Rat& im) {
  Rat ar(0), ai(0);
  for (size_t k = p.c.size(); k-- > 0;) {
    Rat nr = ar * re - ai * im + Rat(p.c[k]);
    Rat ni = ar * im + ai * re;
    ar = nr;
    ai = ni;
  }
  return {ar, ai};
}

std::optional<std::vector<ComplexBall>> try_certify(const IntPoly& p,
                                                    const std::vector<CF>& z) {
  size_t n = z.size();
  IntPoly dp = derivative(p);
  std::vector<ComplexBall> balls(n);
  for (size_t i = 0; i < n; ++i) {
    Rat cre = rat_from_mpfr(z[i].re.get());
    Rat cim = rat_from_mpfr(z[i].im.get());
    auto [pr, pi] = eval_complex_exact(p, cre, cim);
    auto [dr, di] = eval_complex_exact(dp, cre, cim);
    Rat p2 = pr * pr + pi * pi;
    Rat d2 = dr * dr + di * di;
    if (d2 == 0) return std::nullopt;
    // |z - root| <= n |p(z)/p'(z)| for some root
    Rat rad2 = Rat(static_cast<long>(n * n)) * p2 / d2;
    balls[i] = ComplexBall{cre, cim, rat_sqrt_upper(rad2)};
  }
  // Disjointness: |c_i - c_j| > r_i + r_j.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Rat dre = balls[i].re - balls[j].re;
      Rat dim = balls[i].im - balls[j].im;
      Rat dist2 = dre * dre + dim * dim;
      Rat rsum = balls[i].rad + balls[j].rad;
      if (dist2 <= rsum * rsum) return std::nullopt;
    }
  return balls;
}

}  // namespace

namespace {

// Shift making floor(q * 4^s) carry roughly 2k significant bits, so the
// isqrt-based bounds below have ~k bits of relative precision.
unsigned sqrt_shift(const Rat& q) {
  constexpr long k = 48;
  long qbits = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2)) -
               static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
  long s = k - qbits / 2 + 2;
  return s < 0 ? 0u : static_cast<unsigned>(s);
}

}  // namespace

Rat rat_sqrt_upper(const Rat& q) {
  if (q < 0) throw k3_error(errc::domain_error, "square root of negative rational");
  if (q == 0) return Rat(0);
  // With N = floor(q*4^s) and r = isqrt(N): q*4^s < N+1 <= (r+1)^2,
  // hence sqrt(q) < (r+1)/2^s.
  unsigned s = sqrt_shift(q);
  Int scaled = (q.get_num() << (2 * s)) / q.get_den();
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Rat r(root + 1, Int(1) << s);
  r.canonicalize();
  return r;
}

Rat rat_sqrt_lower(const Rat& q) {
  if (q < 0) throw k3_error(errc::domain_error, "square root of negative rational");
  if (q == 0) return Rat(0);
  // r^2 <= floor(q*4^s) <= q*4^s, hence r/2^s <= sqrt(q).
  unsigned s = sqrt_shift(q);
  Int scaled = (q.get_num() << (2 * s)) / q.get_den();
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Rat r(root, Int(1) << s);
  r.canonicalize();
  return r;
}

Rat ball_mod2_lower(const ComplexBall& b) {
  Rat re_min = abs(b.re) - b.rad;
  Rat im_min = abs(b.im) - b.rad;
  if (re_min < 0) re_min = 0;
  if (im_min < 0) im_min = 0;
  return re_min * re_min + im_min * im_min;
}

Rat ball_mod2_upper(const ComplexBall& b) {
  Rat re_max = abs(b.re) + b.rad;
  Rat im_max = abs(b.im) + b.rad;
  return re_max * re_max + im_max * im_max;
}

std::vector<ComplexBall> certified_roots(const IntPoly& squarefree, unsigned start_prec,
                                         unsigned target_prec) {
  const IntPoly& p = squarefree;
  if (p.degree() < 1) throw k3_error(errc::domain_error, "no roots to enclose");
  if (p.degree() == 1) {
    Rat v(-p.c[0], p.c[1]);
    v.canonicalize();
    return {ComplexBall{v, Rat(0), Rat(0)}};
  }
  size_t n = static_cast<size_t>(p.degree());
  double rb = std::min(root_bound(p).get_d(), 1e12);
  for (unsigned prec = std::max(start_prec, 64u);; prec *= 2) {
    if (prec > precision_cap())
      throw k3_error(errc::precision_exhausted, "root enclosure exceeded the precision cap");
    std::vector<BF> coeff;
    coeff.reserve(p.c.size());
    for (const Int& c : p.c) {
      BF b(prec);
      mpfr_set_z(b.get(), c.get_mpz_t(), MPFR_RNDN);
      coeff.push_back(b);
    }
    std::vector<CF> z;
    z.reserve(n);
    for (size_t k = 0; k < n; ++k) {
      CF c(prec);
      double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.37;
      mpfr_set_d(c.re.get(), 0.5 * rb * std::cos(angle), MPFR_RNDN);
      mpfr_set_d(c.im.get(), 0.5 * rb * std::sin(angle), MPFR_RNDN);
      z.push_back(c);
    }
    unsigned iters = 200 + prec / 4;
    for (unsigned it = 0; it < iters; ++it) dk_sweep(z, coeff, prec);
    auto balls = try_certify(p, z);
    if (!balls) continue;
    if (target_prec > 0) {
      // Require the radii to be below 2^-target_prec before accepting.
      Rat limit = pow2_neg(target_prec);
      bool small_enough = true;
      for (const ComplexBall& b : *balls)
        if (b.rad > limit) {
          small_enough = false;
          break;
        }
      if (!small_enough) continue;
    }
    return *balls;
  }
}

std::vector<ComplexBall> certified_roots_below(const IntPoly& squarefree, const Rat& max_radius) {
  for (unsigned prec = 128;; prec *= 2) {
    if (prec > precision_cap())
      throw k3_error(errc::precision_exhausted, "root enclosure exceeded the precision cap");
    std::vector<ComplexBall> balls = certified_roots(squarefree, prec);
    bool ok = true;
    for (const ComplexBall& b : balls)
      if (b.rad > max_radius) {
        ok = false;
        break;
      }
    if (ok) return balls;
  }
}

std::vector<size_t> conjugate_pairing(const std::vector<ComplexBall>& balls) {
  std::vector<size_t> pair(balls.size(), SIZE_MAX);
  for (size_t i = 0; i < balls.size(); ++i) {
    if (balls[i].can_be_real()) {
      pair[i] = i;
      continue;
    }
    // The conjugate root lies in the mirror of ball i; find the unique ball
    // meeting that mirror disk.
    size_t found = SIZE_MAX;
    for (size_t j = 0; j < balls.size(); ++j) {
      Rat dre = balls[i].re - balls[j].re;
      Rat dim = -balls[i].im - balls[j].im;
      Rat dist2 = dre * dre + dim * dim;
      Rat rsum = balls[i].rad + balls[j].rad;
      if (dist2 <= rsum * rsum) {
        if (found != SIZE_MAX)
          throw k3_error(errc::precision_exhausted, "ambiguous conjugate pairing");
        found = j;
      }
    }
    if (found == SIZE_MAX)
      throw k3_error(errc::invariant_violation, "conjugate root not covered by any ball");
    pair[i] = found;
  }
  for (size_t i = 0; i < balls.size(); ++i)
    if (pair[pair[i]] != i)
      throw k3_error(errc::precision_exhausted, "conjugate pairing is not an involution");
  return pair;
}

std::optional<size_t> unique_root_in(std::vector<std::pair<RealAlgebraic, int>>& roots,
                                     const Rat& lo, const Rat& hi) {
  Rat width = hi - lo;
  if (width <= 0) width = Rat(1, 1024);
  size_t hit_count = 0, hit = SIZE_MAX;
  for (size_t i = 0; i < roots.size(); ++i) {
    RealAlgebraic& r = roots[i].first;
    if (!r.is_rational() && r.hi - r.lo > width) refine_to(r, width);
    bool intersects = !(r.hi < lo || r.lo > hi);
    if (intersects) {
      ++hit_count;
      hit = i;
    }
  }
  if (hit_count == 1) return hit;
  return std::nullopt;
}

double log_of_rat(const Rat& q) {
  if (q <= 0) throw k3_error(errc::domain_error, "log of non-positive rational");
  mpfr_t x;
  mpfr_init2(x, 128);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  mpfr_log(x, x, MPFR_RNDN);
  double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return d;
}

std::pair<double, double> log_rat_interval(const Rat& q) {
  if (q <= 0) throw k3_error(errc::domain_error, "log of non-positive rational");
  mpfr_t x;
  mpfr_init2(x, 96);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDD);
  mpfr_log(x, x, MPFR_RNDD);
  double lo = mpfr_get_d(x, MPFR_RNDD);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDU);
  mpfr_log(x, x, MPFR_RNDU);
  double hi = mpfr_get_d(x, MPFR_RNDU);
  mpfr_clear(x);
  return {lo, hi};
}

ComplexBall ball_conj(const ComplexBall& b) { return {b.re, -b.im, b.rad}; }

ComplexBall ball_mul(const ComplexBall& a, const ComplexBall& b) {
  // |z*w - c_a*c_b| <= |c_a| r_b + |c_b| r_a + r_a r_b
  Rat ma = rat_sqrt_upper(a.re * a.re + a.im * a.im);
  Rat mb = rat_sqrt_upper(b.re * b.re + b.im * b.im);
  ComplexBall out;
  out.re = a.re * b.re - a.im * b.im;
  out.im = a.re * b.im + a.im * b.re;
  out.rad = ma * b.rad + mb * a.rad + a.rad * b.rad;
  return out;
}

}  // namespace kahler3
