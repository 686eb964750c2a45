#include "kahler3/algebraic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace kahler3 {

Rat RealAlgebraic::rational_value() const {
  if (!is_rational())
    throw k3_error(errc::domain_error, "irrational algebraic number has no rational value");
  return lo;
}

RealAlgebraic from_rational(const Rat& q) {
  RealAlgebraic x;
  x.minpoly.c = {Int(-q.get_num()), Int(q.get_den())};
  x.lo = q;
  x.hi = q;
  return x;
}

RealAlgebraic from_long(long v) { return from_rational(Rat(v)); }

RealAlgebraic algebraic_root(const IntPoly& irreducible, const Rat& lo, const Rat& hi) {
  IntPoly p = irreducible.primitive();
  if (p.degree() < 1) throw k3_error(errc::domain_error, "minimal polynomial must have degree >= 1");
  if (p.degree() == 1) {
    Rat v(-p.c[0], p.c[1]);
    v.canonicalize();
    if (v < lo || v > hi)
      throw k3_error(errc::domain_error, "interval does not contain the rational root");
    return from_rational(v);
  }
  if (!(lo < hi)) throw k3_error(errc::domain_error, "empty isolating interval");
  if (sgn(eval_rat(p, lo)) == 0 || sgn(eval_rat(p, hi)) == 0)
    throw k3_error(errc::domain_error, "isolating interval endpoint is a root");
  if (sturm_count(p, lo, hi) != 1)
    throw k3_error(errc::domain_error, "interval does not isolate exactly one root");
  RealAlgebraic x;
  x.minpoly = std::move(p);
  x.lo = lo;
  x.hi = hi;
  return x;
}

RealAlgebraic select_root(const IntPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw k3_error(errc::domain_error, "cannot select a root of zero");
  if (lo > hi) throw k3_error(errc::domain_error, "empty isolating interval");
  if (lo == hi) {
    if (sgn(eval_rat(p, lo)) != 0)
      throw k3_error(errc::domain_error, "point interval does not hit a root");
    return from_rational(lo);
  }
  // Counts are over the open interval. Rational endpoints can only be roots
  // of degree-one factors, which are handled by direct containment.
  FactorList f = factor_over_Z(p);
  const IntPoly* owner = nullptr;
  int total = 0;
  for (const Factor& fac : f.factors) {
    if (fac.poly.degree() < 1) continue;
    int cnt;
    if (fac.poly.degree() == 1) {
      Rat v(-fac.poly.c[0], fac.poly.c[1]);
      v.canonicalize();
      cnt = (lo < v && v < hi) ? 1 : 0;
    } else {
      cnt = sturm_count(fac.poly, lo, hi);
    }
    if (cnt > 0) {
      total += cnt;
      owner = &fac.poly;
    }
  }
  if (total != 1 || !owner)
    throw k3_error(errc::domain_error, "interval does not isolate exactly one root");
  if (owner->degree() == 1) {
    Rat v(-owner->c[0], owner->c[1]);
    v.canonicalize();
    return from_rational(v);
  }
  return algebraic_root(*owner, lo, hi);
}

std::vector<std::pair<RealAlgebraic, int>> real_roots_of(const IntPoly& p) {
  std::vector<std::pair<RealAlgebraic, int>> out;
  FactorList f = factor_over_Z(p);
  struct Entry {
    RealAlgebraic x;
    int mult;
  };
  std::vector<Entry> entries;
  for (const Factor& fac : f.factors) {
    if (fac.poly.degree() == 1) {
      Rat v(-fac.poly.c[0], fac.poly.c[1]);
      v.canonicalize();
      entries.push_back({from_rational(v), fac.multiplicity});
      continue;
    }
    for (const IsolatedRoot& r : isolate_real_roots(fac.poly))
      entries.push_back({algebraic_root(fac.poly, r.lo, r.hi), fac.multiplicity});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return compare(a.x, b.x) < 0; });
  for (auto& e : entries) out.emplace_back(std::move(e.x), e.mult);
  return out;
}

void refine_to(RealAlgebraic& x, const Rat& width) {
  if (x.is_rational()) return;
  refine_root(x.minpoly, x.lo, x.hi, width);
  if (x.lo == x.hi)
    throw k3_error(errc::invariant_violation, "irreducible polynomial of degree >= 2 has rational root");
}

Rat root_separation_bound(const IntPoly& squarefree) {
  int d = squarefree.degree();
  if (d < 2) return Rat(1);
  Int s(0);
  for (const Int& c : squarefree.c) s += c * c;
  // Distinct roots of a squarefree integer polynomial are farther apart than
  // sqrt(3) / (d^((d+2)/2) * ||f||_2^(d-1)); we use the slightly smaller
  // 1 / (d^ceil((d+2)/2) * S^ceil((d-1)/2)) with S = ||f||_2^2.
  unsigned long e1 = static_cast<unsigned long>((d + 3) / 2);
  unsigned long e2 = static_cast<unsigned long>(d / 2);
  Int denom = pow_int(Int(d), e1) * pow_int(s, e2);
  Rat r(1, denom);
  r.canonicalize();
  return r;
}

int sign(const RealAlgebraic& x) {
  if (x.is_rational()) return sgn(x.lo);
  RealAlgebraic t = x;
  while (sgn(t.lo) != sgn(t.hi)) refine_to(t, (t.hi - t.lo) / 2);
  return sgn(t.lo);
}

int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.lo, b.lo);
  if (a.is_rational()) return -compare(b, a.lo);
  if (b.is_rational()) return compare(a, b.lo);
  RealAlgebraic x = a, y = b;
  if (x.minpoly == y.minpoly) {
    Rat w = root_separation_bound(x.minpoly) / 4;
    refine_to(x, w);
    refine_to(y, w);
    bool disjoint = x.hi <= y.lo || y.hi <= x.lo;
    if (!disjoint) return 0;  // same root of the shared minimal polynomial
    return x.hi <= y.lo ? -1 : 1;
  }
  // Distinct irreducible polynomials share no root, so the product is
  // squarefree and its separation bound splits the two values.
  Rat w = root_separation_bound(mul(x.minpoly, y.minpoly).primitive()) / 4;
  refine_to(x, w);
  refine_to(y, w);
  if (x.hi <= y.lo) return -1;
  if (y.hi <= x.lo) return 1;
  throw k3_error(errc::invariant_violation, "separation bound failed to split distinct values");
}

int compare(const RealAlgebraic& a, const Rat& q) {
  if (a.is_rational()) return cmp(a.lo, q);
  RealAlgebraic x = a;
  // q is not a root of an irreducible polynomial of degree >= 2.
  while (x.lo < q && q < x.hi) refine_to(x, (x.hi - x.lo) / 2);
  return x.hi <= q ? -1 : 1;
}

bool algebraic_equal(const RealAlgebraic& a, const RealAlgebraic& b) {
  return compare(a, b) == 0;
}

// Shrinks the operand refresh function until exactly one root of the host
// polynomial lies inside the reported interval, then wraps that root.
// `current` returns an interval that is guaranteed to contain the target
// value and shrinks toward zero width under repeated `shrink`.
static RealAlgebraic select_unique_root(const IntPoly& host,
                                        const std::function<std::pair<Rat, Rat>()>& current,
                                        const std::function<void()>& shrink) {
  FactorList f = factor_over_Z(host);
  for (int iter = 0; iter < 20000; ++iter) {
    auto [lo, hi] = current();
    bool endpoint_root = false;
    int total = 0;
    const IntPoly* owner = nullptr;
    for (const Factor& fac : f.factors) {
      if (fac.poly.degree() < 1) continue;
      if (sgn(eval_rat(fac.poly, lo)) == 0 || sgn(eval_rat(fac.poly, hi)) == 0) {
        endpoint_root = true;
        break;
      }
      int cnt = sturm_count(fac.poly, lo, hi);
      if (cnt > 0) {
        total += cnt;
        owner = &fac.poly;
      }
    }
    if (!endpoint_root && total == 1 && owner) {
      if (owner->degree() == 1) {
        Rat v(-owner->c[0], owner->c[1]);
        v.canonicalize();
        return from_rational(v);
      }
      return algebraic_root(*owner, lo, hi);
    }
    shrink();
  }
  throw k3_error(errc::invariant_violation, "root selection did not converge");
}

// Interval for x^k from a sign-definite interval of x; k may be negative.
static std::pair<Rat, Rat> interval_pow(const Rat& lo, const Rat& hi, long k) {
  Rat a = pow_rat(lo, k);
  Rat b = pow_rat(hi, k);
  if (a > b) std::swap(a, b);
  // For even k over a negative interval the order flips; sorting handles it.
  return {a, b};
}

static void make_sign_definite(RealAlgebraic& x) {
  if (x.is_rational()) return;
  while (sgn(x.lo) != sgn(x.hi)) refine_to(x, (x.hi - x.lo) / 2);
}

RealAlgebraic algebraic_pow(const RealAlgebraic& x, long k) {
  if (k == 0) return from_long(1);
  if (x.is_rational()) {
    if (x.lo == 0 && k < 0) throw k3_error(errc::domain_error, "negative power of zero");
    return from_rational(pow_rat(x.lo, k));
  }
  if (k == 1) return x;
  RealAlgebraic base = x;
  make_sign_definite(base);
  IntPoly host = power_roots_poly(base.minpoly, k);
  auto current = [&]() { return interval_pow(base.lo, base.hi, k); };
  auto shrink = [&]() { refine_to(base, (base.hi - base.lo) / 2); };
  return select_unique_root(host, current, shrink);
}

static RealAlgebraic scale_by_rational(const RealAlgebraic& x, const Rat& r) {
  if (r == 0) return from_long(0);
  if (x.is_rational()) return from_rational(x.lo * r);
  // Minimal polynomial of r*alpha: substitute T/r and clear denominators.
  int d = x.minpoly.degree();
  RatPoly p;
  p.c.assign(static_cast<size_t>(d) + 1, Rat(0));
  Rat power(1);
  for (int i = d; i >= 0; --i) {
    p.c[static_cast<size_t>(i)] = Rat(x.minpoly.c[static_cast<size_t>(i)]) * power;
    power *= r;
  }
  IntPoly mp = p.primitive_int();
  Rat a = x.lo * r, b = x.hi * r;
  if (a > b) std::swap(a, b);
  return algebraic_root(mp, a, b);
}

RealAlgebraic algebraic_mul(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational()) return scale_by_rational(b, a.lo);
  if (b.is_rational()) return scale_by_rational(a, b.lo);
  long da = a.minpoly.degree(), db = b.minpoly.degree();
  if (da * db > 120)
    throw k3_error(errc::unsupported, "product degree bound exceeded (cap 120)");
  RealAlgebraic x = a, y = b;
  make_sign_definite(x);
  make_sign_definite(y);
  IntPoly host = composed_product_powersums(x.minpoly, y.minpoly);
  auto current = [&]() {
    Rat p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo, p4 = x.hi * y.hi;
    Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return std::make_pair(lo, hi);
  };
  auto shrink = [&]() {
    refine_to(x, (x.hi - x.lo) / 2);
    refine_to(y, (y.hi - y.lo) / 2);
  };
  return select_unique_root(host, current, shrink);
}

RealAlgebraic algebraic_neg(const RealAlgebraic& a) { return scale_by_rational(a, Rat(-1)); }

double to_double(const RealAlgebraic& x, unsigned bits) {
  RealAlgebraic t = x;
  refine_to(t, pow2_neg(bits + 2));
  Rat mid = (t.lo + t.hi) / 2;
  return mid.get_d();
}

std::string algebraic_to_string(const RealAlgebraic& x) {
  std::ostringstream os;
  if (x.is_rational()) {
    os << rat_to_string(x.lo);
    return os.str();
  }
  os << "root of " << poly_to_string(x.minpoly) << " in (" << rat_to_string(x.lo) << ", "
     << rat_to_string(x.hi) << ")";
  return os.str();
}

}  // namespace kahler3
