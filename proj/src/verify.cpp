#include "kahler3/verify.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kahler3/base.hpp"
#include "kahler3/factor.hpp"
#include "kahler3/floating.hpp"
#include "kahler3/jordan.hpp"
#include "kahler3/matrix.hpp"

namespace kahler3 {

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
    case CheckStatus::undecided: return "undecided";
  }
  return "undecided";
}

namespace {

// For each root of the (squarefree) factor, the index of the unique pool
// value equal to the root's squared modulus. Ball enclosures are refined
// until every assignment is unambiguous; precision escalates up to the cap.
std::vector<size_t> assign_squared_moduli(const IntPoly& factor,
                                          std::vector<std::pair<RealAlgebraic, int>>& pool) {
  unsigned prec = 128;
  for (;;) {
    bool retry = false;
    std::vector<size_t> out;
    try {
      const std::vector<ComplexBall> balls = certified_roots(factor, 128, prec);
      out.reserve(balls.size());
      for (const ComplexBall& b : balls) {
        const Rat lo = ball_mod2_lower(b);
        const Rat hi = ball_mod2_upper(b);
        const std::optional<size_t> idx = unique_root_in(pool, lo, hi);
        if (!idx) {
          retry = true;
          break;
        }
        out.push_back(*idx);
      }
    } catch (const k3_error& e) {
      if (e.code() != errc::precision_exhausted || prec >= precision_cap()) throw;
      retry = true;
    }
    if (!retry) return out;
    if (prec >= precision_cap())
      throw k3_error(errc::undecided,
                     "squared-modulus identification needs more precision than the cap allows");
    prec = std::min(prec * 2, precision_cap());
  }
}

bool is_zero_matrix(const RatMatrix& m) {
  for (const Rat& v : m.a)
    if (v != 0) return false;
  return true;
}

// For a palindromic polynomial f of even degree 2s, the degree-s polynomial
// g with f(T) = T^s * g(T + 1/T). Roots of f on the unit circle map to real
// roots of g in (-2, 2); real root pairs (r, 1/r) map to real roots outside.
IntPoly trace_transform(const IntPoly& f) {
  const int d = f.degree();
  if (d % 2 != 0 || reverse_poly(f) != f)
    throw k3_error(errc::domain_error, "trace transform needs a palindromic even-degree input");
  const int s = d / 2;
  std::vector<IntPoly> cheb(static_cast<size_t>(s) + 1);
  cheb[0] = IntPoly::constant(Int(2));
  if (s >= 1) cheb[1] = IntPoly::variable();
  for (int k = 2; k <= s; ++k)
    cheb[static_cast<size_t>(k)] =
        sub(mul(IntPoly::variable(), cheb[static_cast<size_t>(k) - 1]),
            cheb[static_cast<size_t>(k) - 2]);
  IntPoly g = IntPoly::constant(f.c[static_cast<size_t>(s)]);
  for (int j = 1; j <= s; ++j)
    g = add(g, mul_scalar(cheb[static_cast<size_t>(j)], f.c[static_cast<size_t>(s + j)]));
  return g;
}

// Exact count of roots of p on the unit circle, assuming p has no real
// roots. The self-inverse part u = gcd(p, reverse(p)) collects every such
// root; within u, circle roots correspond one pair at a time to real roots
// of the trace transform inside (-2, 2).
int unit_circle_count_exact(const IntPoly& p) {
  const IntPoly u = gcd_poly(p, reverse_poly(p));
  if (u.degree() == 0) return 0;
  if (u.degree() % 2 != 0 || reverse_poly(u) != u)
    throw k3_error(errc::invariant_violation, "self-inverse factor is not palindromic");
  const IntPoly g = trace_transform(u);
  return 2 * sturm_count(g, Rat(-2), Rat(2));
}

// Second route for the circle count: certified enclosures, refined until
// exactly `expected` of them still straddle squared modulus 1 (every
// off-circle root eventually excludes 1; on-circle roots always contain it).
void confirm_unit_count_certified(const IntPoly& p, int expected) {
  unsigned prec = 128;
  const Rat one(1);
  for (;;) {
    const std::vector<ComplexBall> balls = certified_roots(p, 128, prec);
    int straddling = 0;
    for (const ComplexBall& b : balls)
      if (ball_mod2_lower(b) <= one && one <= ball_mod2_upper(b)) ++straddling;
    if (straddling == expected) return;
    if (straddling < expected)
      throw k3_error(errc::invariant_violation,
                     "certified enclosures contradict the exact unit-circle count");
    if (prec >= precision_cap())
      throw k3_error(errc::undecided, "unit-circle enclosures did not separate below the cap");
    prec = std::min(prec * 2, precision_cap());
  }
}

// True iff every root of the irreducible factor f has squared modulus
// exactly `target`. Real roots are compared directly; complex roots are
// identified against the real roots of the pair-product polynomial, which
// keeps every comparison exact.
bool factor_moduli_all_equal(const IntPoly& f, const RealAlgebraic& target, std::string* witness) {
  const std::vector<std::pair<RealAlgebraic, int>> rr = real_roots_of(f);
  for (const auto& r : rr) {
    if (!algebraic_equal(algebraic_pow(r.first, 2), target)) {
      if (witness)
        *witness = "eigenvalue " + algebraic_to_string(r.first) +
                   " has squared modulus off the prescribed value";
      return false;
    }
  }
  if (static_cast<int>(rr.size()) == f.degree()) return true;
  if (f.degree() > 6)
    throw k3_error(errc::undecided,
                   "cannot certify complex moduli for factors of degree above 6");
  const IntPoly products = squarefree_part(composed_product(f, f));
  std::vector<std::pair<RealAlgebraic, int>> pool;
  for (auto& root : real_roots_of(products))
    if (sign(root.first) > 0) pool.emplace_back(root.first, 1);
  const std::vector<size_t> idx = assign_squared_moduli(f, pool);
  for (size_t i : idx) {
    if (!algebraic_equal(pool[i].first, target)) {
      if (witness)
        *witness = "an eigenvalue of " + poly_to_string(f) +
                   " has squared modulus " + algebraic_to_string(pool[i].first) +
                   " off the prescribed value";
      return false;
    }
  }
  return true;
}

struct ModuliClassification {
  std::string pattern;
  int subcase = 0;
  int k_pairs = -1;
  int bullet = 0;
  std::optional<std::pair<long, long>> relation;
  bool ok = true;
  std::string witness;
};

// Conjugacy pattern of the three plane moduli plus the finer labels: the
// subcase (rank 2) is read off the minimal-polynomial coincidence pattern
// and factor degrees; the bullet (rank 1) distinguishes whether both
// dynamical degrees are cubic without real conjugates.
ModuliClassification classify_moduli(const ModuliSet& ms, const PlaneModuli& pm,
                                     const DynamicalDegrees& dd) {
  ModuliClassification out;
  const IntPoly& f1 = pm.m1.minpoly;
  const IntPoly& f2 = pm.m2.minpoly;
  const IntPoly& f3 = pm.m3.minpoly;
  const bool e12 = (f1 == f2), e13 = (f1 == f3), e23 = (f2 == f3);
  if (e12 && e23)
    out.pattern = "all-three-conjugate";
  else if (e12 || e13 || e23)
    out.pattern = "one-cubic-two-conjugate";
  else
    out.pattern = "three-cubic";

  const WeightLattice wl = weight_rank(ms, 32);
  out.relation = wl.relation;
  if (wl.rank == 2) {
    if (e12 && e23) {
      const int d = f1.degree();
      if (d < 3 || (d - 3) % 6 != 0) {
        out.ok = false;
        out.witness = "common modulus degree " + std::to_string(d) + " is not 3 mod 6";
        return out;
      }
      out.subcase = 1;
      out.k_pairs = (d - 3) / 6;
    } else if (e12 || e13 || e23) {
      const IntPoly& shared = e23 ? f2 : f1;
      const IntPoly& lone = e12 ? f3 : (e13 ? f2 : f1);
      const int ds = shared.degree();
      if (lone.degree() != 3 || ds < 6 || ds % 6 != 0) {
        out.ok = false;
        out.witness = "paired modulus degree " + std::to_string(ds) + " with lone degree " +
                      std::to_string(lone.degree()) + " does not fit the two-conjugate shape";
        return out;
      }
      out.subcase = 2;
      out.k_pairs = (ds - 6) / 6;
    } else {
      if (f1.degree() != 3 || f2.degree() != 3 || f3.degree() != 3) {
        out.ok = false;
        out.witness = "distinct moduli are not all cubic";
        return out;
      }
      out.subcase = 3;
      out.k_pairs = 0;
    }
  } else if (wl.rank == 1) {
    const bool cubic1 = dd.lambda1.degree() == 3 && count_real_roots(dd.lambda1.minpoly) == 1;
    const bool cubic2 = dd.lambda2.degree() == 3 && count_real_roots(dd.lambda2.minpoly) == 1;
    out.bullet = (cubic1 && cubic2) ? 1 : 2;
  } else {
    out.ok = false;
    out.witness = "weight-lattice rank " + std::to_string(wl.rank) +
                  " does not select a classification";
  }
  return out;
}

TorusSpec inverse_torus(const TorusSpec& t) {
  if (t.source == TorusSource::poly) return torus_from_poly(reverse_poly(t.poly));
  return torus_from_matrix3(inverse(t.matrix3));
}

}  // namespace

VerificationReport check_theorem_A(const TorusSpec& t) {
  VerificationReport r;
  r.theorem = "A";
  const PlaneModuli pm = plane_moduli(t);
  if (compare(pm.m1, Rat(1)) != 0) {
    r.status = CheckStatus::not_applicable;
    r.detail = "the degree-1 spectral radius exceeds 1";
    return r;
  }
  const std::optional<unsigned long> u = unipotency_order(t.h1_action);
  if (!u) {
    r.status = CheckStatus::undecided;
    r.detail = "no power of the degree-1 action is unipotent";
    return r;
  }
  r.order = *u;
  const RatMatrix g = matrix_power(t.h1_action, *u);
  if (g == RatMatrix::identity(g.rows)) {
    r.status = CheckStatus::not_applicable;
    r.detail = "the action has finite order " + std::to_string(*u);
    return r;
  }
  const RatMatrix h = matrix_power(induced_action(t, 2), *u);
  const JordanReport jr = jordan_structure(h);
  r.block_sizes = jr.all_blocks();
  const int m = r.block_sizes.empty() ? 0 : r.block_sizes.front();
  auto fail = [&](const std::string& why) {
    r.status = CheckStatus::fail;
    r.detail = why;
    return r;
  };
  if (m != 3 && m != 5) return fail("maximal unipotent block has size " + std::to_string(m));
  int maximal = 0;
  for (int b : r.block_sizes)
    if (b == m) ++maximal;
  if (maximal != 1)
    return fail("maximal block size " + std::to_string(m) + " occurs " +
                std::to_string(maximal) + " times");
  const int cap = (m + 1) / 2;
  for (int b : r.block_sizes)
    if (b != m && b > cap)
      return fail("secondary block of size " + std::to_string(b) + " exceeds " +
                  std::to_string(cap));
  r.status = CheckStatus::pass;
  r.detail = "unique maximal block of size " + std::to_string(m) +
             "; every other block is at most " + std::to_string(cap);
  return r;
}

VerificationReport check_theorem_B(const TorusSpec& t, int n_max) {
  if (n_max < 0) throw k3_error(errc::domain_error, "halving bound must be nonnegative");
  VerificationReport r;
  r.theorem = "B";
  const ModuliSet ms = moduli_set(t);
  if (!ms.plane) {
    r.status = CheckStatus::undecided;
    r.detail = "plane moduli are unavailable";
    return r;
  }
  const PlaneModuli& pm = *ms.plane;
  struct Target {
    RealAlgebraic value;
    const char* label;
  };
  const Target targets[4] = {
      {from_long(1), "one"},
      {algebraic_pow(pm.m1, 2), "lambda1"},
      {algebraic_pow(pm.m3, 2), "lambda2inv"},
      {algebraic_pow(pm.m2, 2), "lambda1inv-lambda2"},
  };
  auto target_label = [&](const RealAlgebraic& v) -> const char* {
    for (const Target& tg : targets)
      if (algebraic_equal(v, tg.value)) return tg.label;
    return nullptr;
  };
  auto in_set = [&](const RealAlgebraic& v) {
    for (const ModulusEntry& e : ms.entries)
      if (algebraic_equal(v, e.mod2)) return true;
    return false;
  };

  bool any_undecided = false;
  for (const ModulusEntry& e : ms.entries) {
    ModulusCertificate cert;
    cert.mod2 = e.mod2;
    cert.multiplicity = e.multiplicity;
    RealAlgebraic c = e.mod2;
    bool chain = true;
    for (int k = 0; k <= n_max; ++k) {
      if (k > 0) {
        c = algebraic_pow(c, -2);
        if (!in_set(c)) chain = false;
      }
      if (const char* label = target_label(c)) {
        cert.halving_steps = k;
        cert.target = label;
        cert.chain_ok = chain;
        break;
      }
    }
    if (cert.halving_steps < 0) {
      any_undecided = true;
    } else if (!cert.chain_ok) {
      r.status = CheckStatus::fail;
      r.detail = "intermediate power of squared modulus " + algebraic_to_string(e.mod2) +
                 " leaves the modulus set before reaching its target";
      r.entries.push_back(cert);
      return r;
    }
    r.entries.push_back(cert);
  }
  if (any_undecided) {
    r.status = CheckStatus::undecided;
    r.detail = "some squared modulus did not reach a target within " + std::to_string(n_max) +
               " halving steps";
    return r;
  }
  r.status = CheckStatus::pass;
  r.detail = "every squared modulus reaches a distinguished target with an intact chain";
  return r;
}

VerificationReport check_theorem_C(const TorusSpec& t) {
  VerificationReport r;
  r.theorem = "C";
  const DynamicalDegrees dd = dynamical_degrees(t);
  if (compare(dd.lambda1, Rat(1)) == 0) {
    r.status = CheckStatus::not_applicable;
    r.detail = "the first dynamical degree equals 1";
    return r;
  }
  const ModuliSet ms = moduli_set(t);
  const PlaneModuli& pm = *ms.plane;

  struct Target {
    RealAlgebraic value;
    const char* label;
  };
  const Target six[6] = {
      {algebraic_pow(pm.m1, 2), "lambda1"},
      {algebraic_pow(pm.m3, 2), "lambda2inv"},
      {algebraic_pow(pm.m2, 2), "lambda1inv-lambda2"},
      {algebraic_pow(pm.m1, -1), "sqrt-lambda1inv"},
      {algebraic_pow(pm.m3, -1), "sqrt-lambda2"},
      {algebraic_pow(pm.m2, -1), "sqrt-lambda1-lambda2inv"},
  };

  const IntPoly& orbit_poly = dd.lambda1.minpoly;
  r.orbit.factor = orbit_poly;
  r.orbit.degree = orbit_poly.degree();

  std::vector<std::pair<RealAlgebraic, int>> pool;
  pool.reserve(ms.entries.size());
  for (const ModulusEntry& e : ms.entries) pool.emplace_back(e.mod2, 1);
  const std::vector<size_t> assigned = assign_squared_moduli(orbit_poly, pool);
  for (size_t i : assigned) {
    const char* label = nullptr;
    for (const Target& tg : six)
      if (algebraic_equal(pool[i].first, tg.value)) {
        label = tg.label;
        break;
      }
    if (!label) {
      r.status = CheckStatus::fail;
      r.detail = "conjugate squared modulus " + algebraic_to_string(pool[i].first) +
                 " is outside the six-element target set";
      return r;
    }
    r.orbit.root_targets.push_back(label);
  }

  const ModuliClassification fwd = classify_moduli(ms, pm, dd);
  r.classification = fwd.pattern;
  r.subcase = fwd.subcase;
  r.k_pairs = fwd.k_pairs;
  r.bullet = fwd.bullet;
  if (!fwd.ok) {
    r.status = CheckStatus::fail;
    r.detail = fwd.witness;
    return r;
  }

  const TorusSpec ti = inverse_torus(t);
  const DynamicalDegrees ddi = dynamical_degrees(ti);
  const ModuliSet msi = moduli_set(ti);
  const ModuliClassification bwd = classify_moduli(msi, *msi.plane, ddi);
  r.inverse_classification = bwd.pattern;
  r.inverse_subcase = bwd.subcase;
  r.inverse_k_pairs = bwd.k_pairs;
  r.inverse_bullet = bwd.bullet;
  if (!bwd.ok) {
    r.status = CheckStatus::fail;
    r.detail = "inverse action: " + bwd.witness;
    return r;
  }

  std::ostringstream os;
  os << "all " << r.orbit.degree << " conjugates certified; pattern " << fwd.pattern;
  if (fwd.subcase > 0) os << ", case " << fwd.subcase << " with k = " << fwd.k_pairs;
  if (fwd.bullet > 0) {
    os << ", bullet " << fwd.bullet;
    if (fwd.relation)
      os << " (rank 1 certified by the exact relation " << fwd.relation->first << ":"
         << fwd.relation->second << ")";
  }
  r.status = CheckStatus::pass;
  r.detail = os.str();
  return r;
}

VerificationReport check_mixed_case(const RatMatrix& action_h2, const RealAlgebraic& lambda1,
                                    const RealAlgebraic& lambda2) {
  if (!action_h2.is_square() || action_h2.rows == 0)
    throw k3_error(errc::dimension_mismatch, "the action must be a nonempty square matrix");
  const IntPoly cp = charpoly(action_h2).primitive_int();

  // A semisimple action is outside the mixed regime no matter where it came
  // from: every block constraint below is vacuous, so there is nothing to
  // verify and nothing to guard.
  VerificationReport r;
  r.theorem = "mixed";
  if (is_zero_matrix(eval_poly(squarefree_part(cp), action_h2))) {
    r.status = CheckStatus::not_applicable;
    r.detail = "the action is semisimple";
    return r;
  }

  // Only matrices that reach the real checks must look like a self-dual
  // cohomology action: an inversion-closed eigenvalue multiset.
  const IntPoly rev = reverse_poly(cp);
  if (rev != cp && rev != neg(cp))
    throw k3_error(errc::validation_bad_form,
                   "characteristic polynomial is not reciprocal (duality violated)");
  if (compare(lambda1, Rat(1)) <= 0)
    throw k3_error(errc::domain_error, "the first dynamical degree must exceed 1");

  const JordanReport jr = jordan_structure(action_h2);
  r.block_sizes = jr.all_blocks();
  auto fail = [&](const std::string& why) {
    r.status = CheckStatus::fail;
    r.detail = why;
    return r;
  };

  std::optional<RealAlgebraic> delta;       // eigenvalue carrying the unique block
  std::optional<RealAlgebraic> prescribed;  // squared modulus forced on other blocked eigenvalues
  if (algebraic_equal(lambda2, algebraic_pow(lambda1, 2))) {
    delta = lambda1;
    prescribed = algebraic_pow(lambda1, -1);
  } else if (algebraic_equal(lambda1, algebraic_pow(lambda2, 2))) {
    delta = algebraic_pow(lambda2, -1);
    prescribed = lambda2;
  } else {
    return fail("lambda2 = " + algebraic_to_string(lambda2) + " is neither lambda1^2 = " +
                algebraic_to_string(algebraic_pow(lambda1, 2)) +
                " nor a square root of lambda1 = " + algebraic_to_string(lambda1));
  }

  const FactorBlocks* home = nullptr;
  for (const FactorBlocks& f : jr.factors)
    if (f.poly == delta->minpoly) home = &f;
  if (!home) return fail("the distinguished eigenvalue is not an eigenvalue of the action");

  int nontrivial = 0, m = 0;
  for (const auto& [size, count] : home->blocks)
    if (size >= 2) {
      nontrivial += count;
      m = std::max(m, size);
    }
  if (nontrivial != 1)
    return fail("the distinguished eigenvalue carries " + std::to_string(nontrivial) +
                " nontrivial blocks instead of one");
  if (m > 3) return fail("the distinguished block has size " + std::to_string(m) + " > 3");
  if (home->degree > 1)
    return fail("a conjugate of the distinguished eigenvalue carries an equal block of size " +
                std::to_string(m) + " > " + std::to_string(m - 1));

  for (const FactorBlocks& f : jr.factors) {
    if (&f == home) continue;
    int big = 0;
    for (const auto& [size, count] : f.blocks) {
      (void)count;
      if (size >= 2) big = std::max(big, size);
    }
    if (big == 0) continue;
    if (big > m - 1)
      return fail("a nondistinguished eigenvalue carries a block of size " + std::to_string(big) +
                  " > " + std::to_string(m - 1));
    std::string witness;
    if (!factor_moduli_all_equal(f.poly, *prescribed, &witness)) return fail(witness);
  }

  r.status = CheckStatus::pass;
  r.detail = "conjecture-counterexample-candidate";
  return r;
}

VerificationReport classify_surface_isometry(const RatMatrix& g, const RatMatrix& q) {
  if (!g.is_square() || !q.is_square() || g.rows != q.rows || g.rows == 0)
    throw k3_error(errc::dimension_mismatch, "isometry and form must be square of equal size");
  if (!is_integer_matrix(g) || !is_integer_matrix(q))
    throw k3_error(errc::validation_bad_form, "isometry and form must have integer entries");
  if (transpose(q) != q) throw k3_error(errc::validation_bad_form, "the form is not symmetric");
  const Inertia in = signature_of_symmetric(q);
  if (in.pos != 1 || in.zero != 0 || in.neg != static_cast<int>(q.rows) - 1)
    throw k3_error(errc::validation_bad_form, "the form does not have signature (1, n-1)");
  if (mul(transpose(g), mul(q, g)) != q)
    throw k3_error(errc::validation_bad_form, "the matrix does not preserve the form");

  VerificationReport r;
  r.theorem = "surface";
  const IntPoly cp = charpoly(g).primitive_int();
  auto fail = [&](const std::string& why) {
    r.status = CheckStatus::fail;
    r.detail = why;
    return r;
  };

  if (!is_product_of_cyclotomics(cp)) {
    r.classification = "loxodromic";
    const std::vector<std::pair<RealAlgebraic, int>> rr = real_roots_of(cp);
    if (rr.empty()) return fail("spectral radius exceeds 1 with no real eigenvalue");
    // The dominant real eigenvalue by absolute value; roots come sorted
    // increasing, so only the two extremes compete.
    size_t pick = rr.size() - 1;
    if (rr.size() > 1 && compare(algebraic_neg(rr.front().first), rr.back().first) > 0) pick = 0;
    if (sign(rr[pick].first) < 0)
      return fail("the dominant real eigenvalue is negative");
    const RealAlgebraic& lam = rr[pick].first;
    if (compare(lam, Rat(1)) <= 0)
      return fail("largest real eigenvalue does not exceed 1");
    if (rr[pick].second != 1) return fail("the dominant eigenvalue is not simple");
    const IntPoly& f = lam.minpoly;
    const int d = f.degree();
    if (d % 2 != 0 || reverse_poly(f) != f)
      return fail("the dominant factor is not reciprocal");
    if (algebraic_pow(lam, -1).minpoly != f)
      return fail("the inverse of the dominant eigenvalue is not among its conjugates");
    const IntPoly rest = div_exact(cp, f);
    if (rest.degree() > 0 && !is_product_of_cyclotomics(rest))
      return fail("eigenvalues off the unit circle beyond the dominant pair");
    const IntPoly tr = trace_transform(f);
    if (count_real_roots(tr) != d / 2)
      return fail("the dominant factor has conjugates off the unit circle and off the real line");
    if (sturm_count(tr, Rat(-2), Rat(2)) != d / 2 - 1)
      return fail("more than one conjugate pair of the dominant factor lies off the unit circle");
    r.dominant = lam;
    r.orbit.factor = f;
    r.orbit.degree = d;
    r.detail = (d == 2) ? "Salem-or-quadratic: quadratic dominant eigenvalue"
                        : "Salem-or-quadratic: Salem dominant eigenvalue";
    r.status = CheckStatus::pass;
    return r;
  }

  const std::optional<unsigned long> u = unipotency_order(g);
  if (!u) {
    r.status = CheckStatus::undecided;
    r.detail = "cyclotomic spectrum without a unipotent power";
    return r;
  }
  r.order = *u;
  const RatMatrix h = matrix_power(g, *u);
  if (h == RatMatrix::identity(g.rows)) {
    r.classification = "elliptic";
    r.status = CheckStatus::pass;
    r.detail = "finite order " + std::to_string(*u);
    return r;
  }
  r.classification = "parabolic";
  const JordanReport jr = jordan_structure(h);
  r.block_sizes = jr.all_blocks();
  const int m = r.block_sizes.empty() ? 0 : r.block_sizes.front();
  int triples = 0;
  for (int b : r.block_sizes)
    if (b == 3) ++triples;
  if (m != 3 || triples != 1)
    return fail("unipotent power lacks a unique size-3 block (largest " + std::to_string(m) +
                ", size-3 count " + std::to_string(triples) + ")");
  r.status = CheckStatus::pass;
  r.detail = "growth exponent 2: unique size-3 unipotent block after power " +
             std::to_string(*u);
  return r;
}

GaloisOrbitReport galois_orbit_report(const IntPoly& p) {
  const TorusSpec t = torus_from_poly(p);
  const IntPoly q2 = charpoly(induced_action(t, 2)).primitive_int();
  GaloisOrbitReport rep;
  rep.q_squarefree = (squarefree_part(q2) == q2);
  if (!rep.q_squarefree) return rep;

  const PlaneModuli pm = plane_moduli(t);
  const FactorList fl = factor_over_Z(q2);
  for (const auto& f : fl.factors) {
    GaloisOrbitReport::OrbitFactor of;
    of.poly = f.poly;
    of.degree = f.poly.degree();
    of.has_lambda1 = (f.poly == pm.m1.minpoly);
    of.has_lambda2inv = (f.poly == pm.m3.minpoly);
    of.has_lambda1inv_lambda2 = (f.poly == pm.m2.minpoly);
    rep.factors.push_back(of);
  }
  std::sort(rep.factors.begin(), rep.factors.end(),
            [](const GaloisOrbitReport::OrbitFactor& a, const GaloisOrbitReport::OrbitFactor& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return a.poly.c < b.poly.c;
            });
  rep.degrees.reserve(rep.factors.size());
  for (const auto& of : rep.factors) rep.degrees.push_back(of.degree);
  return rep;
}

std::vector<IntPoly> hunt_polynomials(const HuntCriteria& criteria, int coeff_bound, long budget,
                                      const std::function<void(const IntPoly&)>& on_hit) {
  if (coeff_bound < 0) throw k3_error(errc::domain_error, "coefficient bound must be nonnegative");
  std::vector<IntPoly> hits;
  if (criteria.require_real_root) return hits;  // contradicts the no-real-root validity gate
  if (criteria.unit_modulus_roots &&
      (*criteria.unit_modulus_roots < 0 || *criteria.unit_modulus_roots % 2 != 0))
    return hits;  // circle roots of a real-root-free polynomial come in conjugate pairs

  const long b = coeff_bound;
  long analyzed = 0;
  for (long a5 = -b; a5 <= b; ++a5)
    for (long a4 = -b; a4 <= b; ++a4)
      for (long a3 = -b; a3 <= b; ++a3)
        for (long a2 = -b; a2 <= b; ++a2)
          for (long a1 = -b; a1 <= b; ++a1) {
            const IntPoly p = IntPoly::from_longs({1, a1, a2, a3, a4, a5, 1});
            if (count_real_roots(p) != 0) continue;
            if (squarefree_part(p) != p) continue;
            if (analyzed >= budget) return hits;
            ++analyzed;
            if (criteria.p_irreducible && !is_irreducible(p)) continue;
            if (criteria.unit_modulus_roots) {
              const int on_circle = unit_circle_count_exact(p);
              if (on_circle != *criteria.unit_modulus_roots) continue;
              confirm_unit_count_certified(p, on_circle);
            }
            if (criteria.q2_irreducible) {
              const IntPoly q2 =
                  charpoly(exterior_power(companion(p), 2)).primitive_int();
              if (!is_irreducible(q2)) continue;
            }
            hits.push_back(p);
            if (on_hit) on_hit(p);
          }
  return hits;
}

}  // namespace kahler3
