#include "kahler3/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "kahler3/factor.hpp"
#include "kahler3/floating.hpp"

namespace kahler3 {

namespace {

std::vector<std::pair<RealAlgebraic, int>> positive_real_roots(const IntPoly& p) {
  auto roots = real_roots_of(p);
  std::erase_if(roots, [](const std::pair<RealAlgebraic, int>& r) { return sign(r.first) <= 0; });
  return roots;
}

// One eigenvalue ball per plane of the torus (3 balls counting coincident
// planes): conjugate-pair representatives of the degree-1 roots for poly
// sources, eigenvalues of the 3x3 matrix (with multiplicity) otherwise.
std::vector<ComplexBall> plane_balls(const TorusSpec& t, unsigned prec) {
  std::vector<ComplexBall> reps;
  if (t.source == TorusSource::poly) {
    const std::vector<ComplexBall> balls = certified_roots(t.poly, 128, prec);
    const std::vector<size_t> partner = conjugate_pairing(balls);
    for (size_t i = 0; i < balls.size(); ++i)
      if (partner[i] >= i) reps.push_back(balls[i]);
  } else {
    const FactorList fl = factor_over_Z(charpoly(t.matrix3).to_int_poly());
    for (const auto& f : fl.factors) {
      const std::vector<ComplexBall> balls = certified_roots(f.poly, 128, prec);
      for (const ComplexBall& b : balls)
        for (int c = 0; c < f.multiplicity; ++c) reps.push_back(b);
    }
  }
  return reps;
}

[[noreturn]] void throw_undecided_assignment(std::vector<std::pair<RealAlgebraic, int>>& pool,
                                             const Rat& lo, const Rat& hi) {
  std::string msg = "modulus assignment undecided between";
  int named = 0;
  for (const auto& cand : pool) {
    if (compare(cand.first, hi) <= 0 && compare(cand.first, lo) >= 0) {
      msg += (named == 0 ? " " : " and ") + algebraic_to_string(cand.first);
      if (++named == 2) break;
    }
  }
  throw k3_error(errc::undecided, msg);
}

// Certified enclosure of log(x) from a refined isolating interval. The
// input must be positive.
std::pair<double, double> log_interval(const RealAlgebraic& x) {
  RealAlgebraic c = x;
  Rat width = c.hi - c.lo;
  while (!(c.lo > 0)) {
    width /= 2;
    refine_to(c, width);
  }
  refine_to(c, pow2_neg(128));
  if (c.lo == c.hi) return log_rat_interval(c.lo);
  return {log_rat_interval(c.lo).first, log_rat_interval(c.hi).second};
}

bool interval_contains_zero(double lo, double hi, double margin) {
  return lo - margin <= 0.0 && 0.0 <= hi + margin;
}

}  // namespace

int ModuliSet::total_multiplicity() const {
  int s = 0;
  for (const auto& e : entries) s += e.multiplicity;
  return s;
}

PlaneModuli plane_moduli(const TorusSpec& t) {
  const IntPoly q2 = charpoly(induced_action(t, 2)).to_int_poly();
  auto cands = positive_real_roots(q2);

  for (unsigned prec = 128;;) {
    std::vector<RealAlgebraic> vals;
    bool ok = true;
    try {
      for (const ComplexBall& b : plane_balls(t, prec)) {
        auto idx = unique_root_in(cands, ball_mod2_lower(b), ball_mod2_upper(b));
        if (!idx) {
          ok = false;
          break;
        }
        vals.push_back(cands[*idx].first);
      }
    } catch (const k3_error& e) {
      if (e.code() != errc::precision_exhausted || prec >= precision_cap()) throw;
      ok = false;  // conjugate pairing not yet separated; escalate
    }
    if (ok) {
      if (vals.size() != 3)
        throw k3_error(errc::invariant_violation, "expected exactly three plane moduli");
      std::sort(vals.begin(), vals.end(),
                [](const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) > 0; });
      return {vals[0], vals[1], vals[2]};
    }
    if (prec >= precision_cap())
      throw k3_error(errc::precision_exhausted,
                     "plane moduli do not separate at the precision cap");
    prec = std::min(prec * 2, precision_cap());
  }
}

ModuliSet moduli_set(const TorusSpec& t) {
  const IntPoly q2 = charpoly(induced_action(t, 2)).to_int_poly();
  const IntPoly q4 = charpoly(induced_action(t, 4)).to_int_poly();

  // Candidate pool: squares of real degree-2 eigenvalues are roots of the
  // root-squaring transform; moduli of non-real ones are degree-4
  // eigenvalues (the product with the conjugate is a 4-subset product).
  struct Cand {
    RealAlgebraic v;
    bool from_square = false, from_deg4 = false;
  };
  std::vector<Cand> cands;
  const auto add = [&cands](const RealAlgebraic& v, bool sq) {
    for (Cand& c : cands)
      if (algebraic_equal(c.v, v)) {
        (sq ? c.from_square : c.from_deg4) = true;
        return;
      }
    Cand c;
    c.v = v;
    (sq ? c.from_square : c.from_deg4) = true;
    cands.push_back(std::move(c));
  };
  for (const auto& [r, mult] : positive_real_roots(power_roots_poly(squarefree_part(q2), 2)))
    add(r, true);
  for (const auto& [r, mult] : positive_real_roots(q4)) add(r, false);
  std::sort(cands.begin(), cands.end(),
            [](const Cand& a, const Cand& b) { return compare(a.v, b.v) < 0; });

  std::vector<std::pair<RealAlgebraic, int>> pool;
  pool.reserve(cands.size());
  for (const Cand& c : cands) pool.emplace_back(c.v, 1);

  std::vector<int> tally(cands.size(), 0);
  const FactorList fl = factor_over_Z(q2);
  for (const auto& f : fl.factors) {
    for (unsigned prec = 128;;) {
      const std::vector<ComplexBall> balls = certified_roots(f.poly, 128, prec);
      std::vector<size_t> found;
      bool ambiguous = false;
      Rat amb_lo, amb_hi;
      for (const ComplexBall& b : balls) {
        const Rat lo = ball_mod2_lower(b), hi = ball_mod2_upper(b);
        auto idx = unique_root_in(pool, lo, hi);
        if (!idx) {
          ambiguous = true;
          amb_lo = lo;
          amb_hi = hi;
          break;
        }
        found.push_back(*idx);
      }
      if (!ambiguous) {
        for (size_t idx : found) tally[idx] += f.multiplicity;
        break;
      }
      if (prec >= precision_cap()) throw_undecided_assignment(pool, amb_lo, amb_hi);
      prec = std::min(prec * 2, precision_cap());
    }
  }

  ModuliSet ms;
  for (size_t i = 0; i < cands.size(); ++i) {
    if (tally[i] == 0) continue;
    ModulusEntry e;
    e.mod2 = pool[i].first;  // refined during identification
    e.multiplicity = tally[i];
    if (cands[i].from_square) e.provenance = "squared-degree-2-eigenvalue";
    if (cands[i].from_deg4)
      e.provenance += (e.provenance.empty() ? "" : "+") + std::string("degree-4-eigenvalue");
    ms.entries.push_back(std::move(e));
  }
  if (ms.total_multiplicity() != static_cast<int>(induced_action(t, 2).rows))
    throw k3_error(errc::invariant_violation, "modulus multiplicities do not sum to 15");
  ms.plane = plane_moduli(t);
  return ms;
}

DynamicalDegrees dynamical_degrees(const TorusSpec& t) {
  const PlaneModuli pm = plane_moduli(t);
  const RealAlgebraic l1 = pm.m1;
  const RealAlgebraic l2 = algebraic_pow(pm.m3, -1);
  if (compare(l1, Rat(1)) < 0 || compare(l2, Rat(1)) < 0)
    throw k3_error(errc::invariant_violation, "spectral radius below 1 for a unimodular action");

  // l1 is a real positive degree-2 eigenvalue by construction; the degree-4
  // spectral radius must likewise be attained by a real positive eigenvalue.
  const IntPoly q4 = charpoly(induced_action(t, 4)).to_int_poly();
  bool found = false;
  for (const auto& [r, mult] : positive_real_roots(q4))
    if (algebraic_equal(r, l2)) {
      found = true;
      break;
    }
  if (!found)
    throw k3_error(errc::invariant_violation,
                   "degree-4 spectral radius is not a real degree-4 eigenvalue");

  const RealAlgebraic ent = compare(l1, l2) >= 0 ? l1 : l2;
  return {l1, l2, ent};
}

bool log_concavity_check(const RealAlgebraic& l1, const RealAlgebraic& l2) {
  if (compare(l1, Rat(1)) < 0 || compare(l2, Rat(1)) < 0)
    throw k3_error(errc::domain_error, "degrees of an automorphism are at least 1");
  return compare(algebraic_pow(l1, 2), l2) >= 0 && compare(algebraic_pow(l2, 2), l1) >= 0;
}

WeightLattice weight_rank(const ModuliSet& ms, long bound) {
  if (ms.entries.empty()) throw k3_error(errc::domain_error, "empty modulus set");
  if (bound < 1) throw k3_error(errc::domain_error, "exponent bound must be positive");

  const size_t n = ms.entries.size();
  WeightLattice out;
  out.exponent_bound = bound;
  out.weights.assign(n, {});

  const RealAlgebraic one = from_long(1);
  bool all_one = true;
  for (const auto& e : ms.entries)
    if (!algebraic_equal(e.mod2, one)) {
      all_one = false;
      break;
    }
  if (all_one) {
    out.rank = 0;
    out.status = RankStatus::exact;
    return out;
  }

  if (!ms.plane)
    throw k3_error(errc::unsupported,
                   "weight analysis needs the plane moduli (build the set from a torus)");
  const RealAlgebraic& m1 = ms.plane->m1;
  const RealAlgebraic& m2 = ms.plane->m2;
  const RealAlgebraic& m3 = ms.plane->m3;

  // The basis generators are the square roots of the extreme entries; they
  // must agree with the extreme plane moduli.
  if (!algebraic_equal(algebraic_pow(m1, 2), ms.entries.back().mod2) ||
      !algebraic_equal(algebraic_pow(m3, 2), ms.entries.front().mod2))
    throw k3_error(errc::invariant_violation,
                   "extreme modulus classes do not match the plane moduli");
  if (compare(m1, Rat(1)) <= 0 || compare(m3, Rat(1)) >= 0)
    throw k3_error(errc::invariant_violation, "plane moduli do not straddle 1");

  const std::pair<double, double> L1 = log_interval(m1);
  const std::pair<double, double> L2 = log_interval(m2);
  const std::pair<double, double> L3 = log_interval(m3);

  // Relation search m1^x * m3^y == 1: log(m1) > 0 > log(m3) forces x, y of
  // equal sign, so scanning x, y >= 1 by increasing x + y finds a primitive
  // relation first. Survivors of the certified log gate are settled by
  // exact power comparison; a numeric candidate alone is never accepted.
  std::optional<std::pair<long, long>> rel;
  for (long s = 2; s <= 2 * bound && !rel; ++s) {
    for (long x = std::max(1L, s - bound); x <= std::min(bound, s - 1); ++x) {
      const long y = s - x;
      const double lo = static_cast<double>(x) * L1.first + static_cast<double>(y) * L3.first;
      const double hi = static_cast<double>(x) * L1.second + static_cast<double>(y) * L3.second;
      const double margin = 1e-12 * static_cast<double>(1 + x + y);
      if (!interval_contains_zero(lo, hi, margin)) continue;
      if (algebraic_equal(algebraic_pow(m1, x), algebraic_pow(m3, -y))) {
        rel = {x, y};
        break;
      }
    }
  }

  // Every entry of a torus modulus set is an integer power of a single
  // plane modulus (the two off-diagonal pair products are inverses of the
  // complementary plane modulus since m1*m2*m3 = 1), which keeps the exact
  // confirmation pairwise.
  struct Sym {
    long a = 0, b = 0;  // exponents over (m1, m3); m2 = (m1*m3)^-1
  };
  std::vector<Sym> sym(n);
  const RealAlgebraic* gens[3] = {&m1, &m2, &m3};
  const std::pair<double, double> logs[3] = {L1, L2, L3};
  for (size_t i = 0; i < n; ++i) {
    const std::pair<double, double> Le = log_interval(ms.entries[i].mod2);
    bool matched = false;
    for (int g = 0; g < 3 && !matched; ++g) {
      for (long tt = 1; tt <= 4 && !matched; ++tt) {
        for (const long tsign : {1L, -1L}) {
          const long tv = tsign * tt;
          const double glo = static_cast<double>(tv) *
                             (tv >= 0 ? logs[g].first : logs[g].second);
          const double ghi = static_cast<double>(tv) *
                             (tv >= 0 ? logs[g].second : logs[g].first);
          const double margin = 1e-12 * static_cast<double>(1 + tt);
          if (!interval_contains_zero(Le.first - ghi, Le.second - glo, margin)) continue;
          if (!algebraic_equal(ms.entries[i].mod2, algebraic_pow(*gens[g], tv))) continue;
          if (g == 0)
            sym[i] = {tv, 0};
          else if (g == 1)
            sym[i] = {-tv, -tv};
          else
            sym[i] = {0, tv};
          matched = true;
          break;
        }
      }
    }
    if (!matched)
      throw k3_error(errc::undecided,
                     "modulus class is not a bounded power of a plane modulus");
  }

  if (!rel) {
    out.rank = 2;
    out.status = RankStatus::bounded;  // refuted every relation within bound
    out.basis = {n - 1, 0};
    for (size_t i = 0; i < n; ++i) out.weights[i] = {Rat(sym[i].a), Rat(sym[i].b)};
    return out;
  }

  // Rank 1: integer weights from the primitive relation, one coordinate per
  // entry relative to the smallest positive weight whose quotients only
  // carry powers of 2 in the denominator.
  const long g = std::gcd(rel->first, rel->second);
  const long w1 = rel->second / g;   // > 0
  const long w3 = -rel->first / g;   // < 0
  std::vector<long> w(n);
  for (size_t i = 0; i < n; ++i) w[i] = sym[i].a * w1 + sym[i].b * w3;

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&w](size_t a, size_t b) { return w[a] < w[b]; });

  const auto pow2_denominators = [&w, n](long base) {
    for (size_t i = 0; i < n; ++i) {
      const Int den = make_rat(w[i], base).get_den();
      if (mpz_popcount(den.get_mpz_t()) != 1) return false;
    }
    return true;
  };

  std::optional<size_t> basis_idx;
  for (size_t idx : order) {
    if (w[idx] <= 0) continue;
    if (pow2_denominators(w[idx])) {
      basis_idx = idx;
      break;
    }
  }
  if (!basis_idx) {
    for (size_t idx : order)
      if (w[idx] > 0) {
        basis_idx = idx;
        break;
      }
    out.coords_pow2_denominators = false;
  }
  if (!basis_idx)
    throw k3_error(errc::invariant_violation, "no modulus class with positive weight");

  out.rank = 1;
  out.status = RankStatus::exact;
  out.relation = rel;
  out.basis = {*basis_idx};
  for (size_t i = 0; i < n; ++i) out.weights[i] = {make_rat(w[i], w[*basis_idx])};
  return out;
}

}  // namespace kahler3
