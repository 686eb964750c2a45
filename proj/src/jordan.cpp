#include "kahler3/jordan.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "kahler3/factor.hpp"
#include "kahler3/floating.hpp"

namespace kahler3 {

namespace {

// nu[k-1] = dim ker P(m)^k / deg P for k = 1, 2, ... until the sequence
// stabilizes (bounded by the multiplicity of P in the characteristic
// polynomial). Equal kernel growth across the deg-P conjugate roots is a
// structural fact; non-divisibility means the factor was not irreducible.
std::vector<int> kernel_filtration(const RatMatrix& m, const IntPoly& p, int multiplicity) {
  const RatMatrix a = eval_poly(p, m);
  RatMatrix b = a;
  std::vector<int> nu;
  for (int k = 1; k <= multiplicity; ++k) {
    if (k > 1) b = mul(b, a);
    const size_t d = nullity(b);
    if (d % static_cast<size_t>(p.degree()) != 0)
      throw k3_error(errc::invariant_violation,
                     "kernel dimension not divisible by the factor degree");
    nu.push_back(static_cast<int>(d / static_cast<size_t>(p.degree())));
    if (nu.size() >= 2 && nu[nu.size() - 1] == nu[nu.size() - 2]) break;
  }
  return nu;
}

// Block sizes from the kernel filtration: the number of blocks of size >= k
// is nu_k - nu_{k-1}; exact counts are the second differences.
std::vector<std::pair<int, int>> blocks_from_filtration(const std::vector<int>& nu) {
  const int kmax = static_cast<int>(nu.size());
  auto geq = [&](int k) -> int {  // #blocks of size >= k (k >= 1)
    if (k > kmax) return 0;
    return nu[k - 1] - (k >= 2 ? nu[k - 2] : 0);
  };
  std::vector<std::pair<int, int>> blocks;
  for (int k = kmax; k >= 1; --k) {
    const int count = geq(k) - geq(k + 1);
    if (count > 0) blocks.emplace_back(k, count);
  }
  return blocks;
}

Int denominator_lcm(const RatMatrix& x) {
  Int l(1);
  for (const Rat& q : x.a) {
    const Int d = q.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

// Extended Euclid over Q[T]: g = u*a + v*b with g the (non-normalized) gcd.
struct ExtGcd {
  RatPoly g, u, v;
};

ExtGcd ext_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly u0 = RatPoly::constant(Rat(1)), u1 = RatPoly::zero();
  RatPoly v0 = RatPoly::zero(), v1 = RatPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly u2 = sub(u0, mul(q, u1));
    u0 = std::move(u1);
    u1 = std::move(u2);
    RatPoly v2 = sub(v0, mul(q, v1));
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  return {std::move(r0), std::move(u0), std::move(v0)};
}

RealAlgebraic abs_value(const RealAlgebraic& x) {
  return sign(x) < 0 ? algebraic_neg(x) : x;
}

// Positive square root of a positive real algebraic number. The candidate
// polynomial M(T^2) has the roots +-sqrt(y) over the roots y of the minimal
// polynomial M; the isolating interval of x is shrunk until its square-root
// image isolates a single candidate.
RealAlgebraic algebraic_sqrt_positive(const RealAlgebraic& x) {
  if (sign(x) <= 0) throw k3_error(errc::domain_error, "square root of a non-positive value");
  IntPoly q;
  q.c.assign(2 * x.minpoly.c.size() - 1, Int(0));
  for (size_t j = 0; j < x.minpoly.c.size(); ++j) q.c[2 * j] = x.minpoly.c[j];
  q.trim();
  auto candidates = real_roots_of(q);

  RealAlgebraic xi = x;
  Rat width = xi.hi - xi.lo;
  for (;;) {
    while (!(xi.lo > 0)) {
      width /= 2;
      refine_to(xi, width);
    }
    const Rat slo = rat_sqrt_lower(xi.lo);
    const Rat shi = rat_sqrt_upper(xi.hi);
    if (auto idx = unique_root_in(candidates, slo, shi)) return candidates[*idx].first;
    width /= 4;
    refine_to(xi, width);
  }
}

// Factor degree budget for the exact modulus identification path: the
// pair-product polynomial has degree d^2 and its roots must be isolated and
// matched against irreducible factors.
constexpr int kPairProductDegreeCap = 6;

}  // namespace

std::vector<int> JordanReport::all_blocks() const {
  std::vector<int> out;
  for (const auto& fb : factors)
    for (const auto& [size, count] : fb.blocks)
      for (int c = 0; c < count * fb.degree; ++c) out.push_back(size);
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

JordanReport jordan_structure(const RatMatrix& m) {
  if (!m.is_square()) throw k3_error(errc::dimension_mismatch, "square matrix required");
  const RatPoly cp = charpoly(m);
  const FactorList fl = factor_over_Z(cp.primitive_int());

  JordanReport report;
  report.dimension = static_cast<int>(m.rows);
  int total = 0;
  for (const auto& f : fl.factors) {
    FactorBlocks fb;
    fb.poly = f.poly;
    fb.degree = f.poly.degree();
    if (f.multiplicity == 1) {
      fb.blocks = {{1, 1}};
    } else {
      fb.blocks = blocks_from_filtration(kernel_filtration(m, f.poly, f.multiplicity));
    }
    int weighted = 0;
    for (const auto& [size, count] : fb.blocks) {
      weighted += size * count;
      fb.max_block = std::max(fb.max_block, size);
    }
    if (weighted != f.multiplicity)
      throw k3_error(errc::invariant_violation, "block sizes do not add up to the multiplicity");
    total += fb.degree * weighted;
    report.max_block = std::max(report.max_block, fb.max_block);
    report.factors.push_back(std::move(fb));
  }
  if (total != report.dimension)
    throw k3_error(errc::invariant_violation, "block structure does not fill the dimension");
  return report;
}

ChevalleyPair chevalley_decompose(const RatMatrix& m) {
  if (!m.is_square()) throw k3_error(errc::dimension_mismatch, "square matrix required");
  const size_t n = m.rows;
  if (det(m) == 0)
    throw k3_error(errc::domain_error,
                   "multiplicative decomposition requires an invertible matrix");

  const RatPoly cp = charpoly(m);
  const IntPoly cpz = cp.primitive_int();
  const RatPoly f = RatPoly(squarefree_part(cpz)).monic();
  const RatMatrix zero(n, n);
  const RatMatrix id = RatMatrix::identity(n);

  ChevalleyPair out;
  if (eval_poly(f, m) == zero) {
    out.semisimple = m;
    out.unipotent = id;
  } else {
    // Newton iteration for a root of f in Q[m]: quadratic convergence in the
    // f(m)-adic filtration, so ceil(log2(max multiplicity)) steps suffice.
    int max_mult = 1;
    for (const auto& fac : factor_over_Z(cpz).factors)
      max_mult = std::max(max_mult, fac.multiplicity);
    int steps = 0;
    while ((1 << steps) < max_mult) ++steps;

    const RatPoly fp = derivative(f);
    const ExtGcd bezout = ext_gcd(f, fp);
    if (bezout.g.degree() != 0)
      throw k3_error(errc::invariant_violation, "squarefree part shares a root with its derivative");
    const RatPoly v = mul_scalar(bezout.v, Rat(1) / bezout.g.c[0]);  // v * f' == 1 mod f

    RatMatrix x = m;
    for (int it = 0; it < steps; ++it) {
      const RatMatrix fx = eval_poly(f, x);
      if (fx == zero) break;
      x = sub(x, mul(fx, eval_poly(v, x)));
    }
    if (eval_poly(f, x) != zero)
      throw k3_error(errc::invariant_violation, "iteration failed to reach the semisimple part");
    out.semisimple = std::move(x);
    out.unipotent = mul(inverse(out.semisimple), m);
  }

  if (mul(out.semisimple, out.unipotent) != m || mul(out.unipotent, out.semisimple) != m)
    throw k3_error(errc::invariant_violation, "parts do not recompose the input");
  if (matrix_power(sub(out.unipotent, id), static_cast<unsigned long>(n)) != zero)
    throw k3_error(errc::invariant_violation, "unipotent part is not unipotent");

  out.semisimple_denominator_lcm = denominator_lcm(out.semisimple);
  out.unipotent_denominator_lcm = denominator_lcm(out.unipotent);
  return out;
}

std::optional<unsigned long> unipotency_order(const RatMatrix& m) {
  if (!m.is_square()) throw k3_error(errc::dimension_mismatch, "square matrix required");
  const RatPoly cp = charpoly(m);
  for (const Rat& q : cp.c)
    if (q.get_den() != 1) return std::nullopt;  // no integer factorization, not cyclotomic
  unsigned long acc = 1;
  for (const auto& f : factor_over_Z(cp.to_int_poly()).factors) {
    const auto ord = root_of_unity_order(f.poly);
    if (!ord) return std::nullopt;
    acc = std::lcm(acc, *ord);
  }
  return acc;
}

GrowthPrediction predicted_growth(const RatMatrix& m) {
  if (!m.is_square()) throw k3_error(errc::dimension_mismatch, "square matrix required");
  if (det(m) == 0)
    throw k3_error(errc::domain_error, "growth prediction requires an invertible matrix");

  const JordanReport report = jordan_structure(m);

  // All eigenvalues roots of unity: spectral radius exactly 1, every block
  // sits at the maximal modulus.
  bool all_cyclotomic = true;
  for (const auto& fb : report.factors)
    if (!root_of_unity_order(fb.poly)) {
      all_cyclotomic = false;
      break;
    }
  if (all_cyclotomic) return {from_long(1), report.max_block - 1, GrowthMethod::cyclotomic};

  // Absolute values of the real eigenvalues, per factor, and their maximum.
  std::vector<std::vector<RealAlgebraic>> abs_real(report.factors.size());
  std::optional<RealAlgebraic> tau;
  for (size_t i = 0; i < report.factors.size(); ++i) {
    for (const auto& [root, mult] : real_roots_of(report.factors[i].poly)) {
      (void)mult;
      RealAlgebraic a = abs_value(root);
      if (!tau || compare(a, *tau) > 0) tau = a;
      abs_real[i].push_back(std::move(a));
    }
  }

  // Dominant-real path: certify that every non-real eigenvalue has modulus
  // strictly below the largest real absolute value.
  if (tau) {
    const RealAlgebraic tau2 = algebraic_pow(*tau, 2);
    const auto certify_at = [&](unsigned prec) -> bool {
      for (const auto& fb : report.factors) {
        if (fb.degree < 2) continue;
        const int nreal = count_real_roots(fb.poly);
        const auto balls = certified_roots(fb.poly, 128, prec);
        int touching = 0;
        for (const auto& b : balls)
          if (b.can_be_real()) ++touching;
        if (touching != nreal) return false;  // complex balls not yet off the axis
        for (const auto& b : balls) {
          if (b.can_be_real()) continue;
          if (compare(tau2, ball_mod2_upper(b)) <= 0) return false;
        }
      }
      return true;
    };

    bool feasible_exact = true;
    for (const auto& fb : report.factors)
      if (fb.degree > kPairProductDegreeCap) feasible_exact = false;

    unsigned prec = 192;
    int attempts = 0;
    for (;;) {
      if (certify_at(prec)) {
        int max_block = 0;
        for (size_t i = 0; i < report.factors.size(); ++i)
          for (const auto& a : abs_real[i])
            if (algebraic_equal(a, *tau)) max_block = std::max(max_block, report.factors[i].max_block);
        return {*tau, max_block - 1, GrowthMethod::dominant_real};
      }
      ++attempts;
      if (attempts >= 3 && feasible_exact) break;  // ties need the exact path
      if (prec >= precision_cap())
        throw k3_error(errc::precision_exhausted,
                       "could not separate the real candidate from the complex moduli");
      prec = std::min(prec * 2, precision_cap());
    }
  }

  // Exact path: |z|^2 of every eigenvalue of a factor P is a real positive
  // root of the pair-product polynomial of P with itself; identify each one
  // by shrinking its root ball until a single candidate remains.
  std::vector<std::vector<RealAlgebraic>> mod2s(report.factors.size());
  std::optional<RealAlgebraic> rho2;
  for (size_t i = 0; i < report.factors.size(); ++i) {
    const IntPoly& p = report.factors[i].poly;
    if (p.degree() > kPairProductDegreeCap)
      throw k3_error(errc::undecided,
                     "eigenvalue moduli cannot be identified exactly: factor degree above the "
                     "pair-product budget");
    if (p.degree() == 1) {
      const Rat r = -Rat(p.c[0]) / Rat(p.c[1]);
      mod2s[i].push_back(from_rational(r * r));
    } else {
      auto candidates = real_roots_of(composed_product(p, p));
      std::erase_if(candidates, [](const auto& rt) { return sign(rt.first) <= 0; });
      unsigned prec = 192;
      for (;;) {
        const auto balls = certified_roots(p, 128, prec);
        std::vector<RealAlgebraic> found;
        bool ambiguous = false;
        for (const auto& b : balls) {
          auto idx = unique_root_in(candidates, ball_mod2_lower(b), ball_mod2_upper(b));
          if (!idx) {
            ambiguous = true;
            break;
          }
          found.push_back(candidates[*idx].first);
        }
        if (!ambiguous) {
          mod2s[i] = std::move(found);
          break;
        }
        if (prec >= precision_cap())
          throw k3_error(errc::precision_exhausted,
                         "root balls do not separate the modulus candidates");
        prec = std::min(prec * 2, precision_cap());
      }
    }
    for (const auto& v : mod2s[i])
      if (!rho2 || compare(v, *rho2) > 0) rho2 = v;
  }

  int max_block = 0;
  for (size_t i = 0; i < report.factors.size(); ++i)
    for (const auto& v : mod2s[i])
      if (algebraic_equal(v, *rho2)) max_block = std::max(max_block, report.factors[i].max_block);

  return {algebraic_sqrt_positive(*rho2), max_block - 1, GrowthMethod::composed_exact};
}

}  // namespace kahler3
