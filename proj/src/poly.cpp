#include "kahler3/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kahler3 {

const char* errc_name(errc e) {
  switch (e) {
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::domain_error: return "domain_error";
    case errc::parse_error: return "parse_error";
    case errc::validation_not_monic: return "validation_not_monic";
    case errc::validation_wrong_degree: return "validation_wrong_degree";
    case errc::validation_constant_term: return "validation_constant_term";
    case errc::validation_repeated_roots: return "validation_repeated_roots";
    case errc::validation_real_root: return "validation_real_root";
    case errc::validation_not_unimodular: return "validation_not_unimodular";
    case errc::validation_bad_form: return "validation_bad_form";
    case errc::precision_exhausted: return "precision_exhausted";
    case errc::undecided: return "undecided";
    case errc::invariant_violation: return "invariant_violation";
    case errc::unsupported: return "unsupported";
  }
  return "unknown";
}

std::string int_to_string(const Int& z) { return z.get_str(); }

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int int_from_string(const std::string& s) {
  if (s.empty()) throw k3_error(errc::parse_error, "empty integer literal");
  size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') pos = 1;
  if (pos == s.size()) throw k3_error(errc::parse_error, "bare sign is not an integer");
  for (size_t i = pos; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i])))
      throw k3_error(errc::parse_error, "bad integer literal '" + s + "'");
  return Int(s);
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(s));
  Int num = int_from_string(s.substr(0, slash));
  Int den = int_from_string(s.substr(slash + 1));
  if (den == 0) throw k3_error(errc::parse_error, "zero denominator in '" + s + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// IntPoly / RatPoly basics

void IntPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly IntPoly::constant(Int v) {
  IntPoly p;
  if (v != 0) p.c.push_back(std::move(v));
  return p;
}

IntPoly IntPoly::variable() {
  IntPoly p;
  p.c = {Int(0), Int(1)};
  return p;
}

IntPoly IntPoly::from_longs(const std::vector<long>& v) {
  IntPoly p;
  p.c.reserve(v.size());
  for (long x : v) p.c.emplace_back(x);
  p.trim();
  return p;
}

const Int& IntPoly::lc() const {
  if (c.empty()) throw k3_error(errc::domain_error, "leading coefficient of zero polynomial");
  return c.back();
}

const Int& IntPoly::coeff_or_zero(size_t i) const {
  static const Int z(0);
  return i < c.size() ? c[i] : z;
}

Int IntPoly::content() const {
  Int g(0);
  for (const Int& a : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return *this;
  Int g = content();
  if (sgn(lc()) < 0) g = -g;
  IntPoly p;
  p.c.reserve(c.size());
  for (const Int& a : c) p.c.push_back(a / g);
  return p;
}

RatPoly::RatPoly(const IntPoly& p) {
  c.reserve(p.c.size());
  for (const Int& a : p.c) c.emplace_back(a);
}

void RatPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

RatPoly RatPoly::constant(Rat v) {
  RatPoly p;
  if (v != 0) p.c.push_back(std::move(v));
  return p;
}

const Rat& RatPoly::lc() const {
  if (c.empty()) throw k3_error(errc::domain_error, "leading coefficient of zero polynomial");
  return c.back();
}

IntPoly RatPoly::primitive_int() const {
  if (is_zero()) return IntPoly::zero();
  Int den(1);
  for (const Rat& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  IntPoly p;
  p.c.reserve(c.size());
  for (const Rat& q : c) {
    Rat scaled = q * Rat(den);
    p.c.push_back(scaled.get_num());
  }
  return p.primitive();
}

IntPoly RatPoly::to_int_poly() const {
  IntPoly p;
  p.c.reserve(c.size());
  for (const Rat& q : c) {
    if (q.get_den() != 1)
      throw k3_error(errc::domain_error, "polynomial has non-integer coefficient " + rat_to_string(q));
    p.c.push_back(q.get_num());
  }
  return p;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) throw k3_error(errc::domain_error, "monic form of zero polynomial");
  RatPoly p = *this;
  Rat inv = 1 / lc();
  for (Rat& q : p.c) q *= inv;
  return p;
}

// ---------------------------------------------------------------------------
// Arithmetic

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff_or_zero(i) + b.coeff_or_zero(i);
  r.trim();
  return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff_or_zero(i) - b.coeff_or_zero(i);
  r.trim();
  return r;
}

IntPoly neg(const IntPoly& a) {
  IntPoly r = a;
  for (Int& x : r.c) x = -x;
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly::zero();
  IntPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

IntPoly mul_scalar(const IntPoly& a, const Int& s) {
  if (s == 0) return IntPoly::zero();
  IntPoly r = a;
  for (Int& x : r.c) x *= s;
  return r;
}

IntPoly pow_poly(const IntPoly& a, unsigned e) {
  IntPoly acc = IntPoly::constant(1);
  IntPoly base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

IntPoly shift_up(const IntPoly& a, unsigned k) {
  if (a.is_zero() || k == 0) return a;
  IntPoly r;
  r.c.assign(a.c.size() + k, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i];
  return r;
}

RatPoly add(const RatPoly& a, const RatPoly& b) {
  RatPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) {
    Rat x = i < a.c.size() ? a.c[i] : Rat(0);
    if (i < b.c.size()) x += b.c[i];
    r.c[i] = x;
  }
  r.trim();
  return r;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly nb = b;
  for (Rat& q : nb.c) q = -q;
  return add(a, nb);
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly::zero();
  RatPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

RatPoly mul_scalar(const RatPoly& a, const Rat& s) {
  if (s == 0) return RatPoly::zero();
  RatPoly r = a;
  for (Rat& q : r.c) q *= s;
  return r;
}

Int eval_int(const IntPoly& p, const Int& x) {
  Int acc(0);
  for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + p.c[i];
  return acc;
}

Rat eval_rat(const IntPoly& p, const Rat& x) {
  Rat acc(0);
  for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + Rat(p.c[i]);
  return acc;
}

Rat eval_rat(const RatPoly& p, const Rat& x) {
  Rat acc(0);
  for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + p.c[i];
  return acc;
}

IntPoly derivative(const IntPoly& p) {
  IntPoly r;
  if (p.c.size() <= 1) return r;
  r.c.resize(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) r.c[i - 1] = p.c[i] * Int(static_cast<long>(i));
  r.trim();
  return r;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly r;
  if (p.c.size() <= 1) return r;
  r.c.resize(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) r.c[i - 1] = p.c[i] * Rat(static_cast<long>(i));
  r.trim();
  return r;
}

IntPoly reverse_poly(const IntPoly& p) {
  IntPoly r = p;
  std::reverse(r.c.begin(), r.c.end());
  r.trim();
  return r;
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw k3_error(errc::domain_error, "polynomial division by zero");
  RatPoly q, r = a;
  if (a.degree() < b.degree()) return {q, r};
  q.c.assign(a.degree() - b.degree() + 1, Rat(0));
  Rat inv_lc = 1 / b.lc();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rat coef = r.lc() * inv_lc;
    q.c[k] = coef;
    // r -= coef * T^k * b
    for (int i = 0; i <= b.degree(); ++i) r.c[i + k] -= coef * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = divrem(RatPoly(a), RatPoly(b));
  if (!r.is_zero()) throw k3_error(errc::domain_error, "inexact polynomial division");
  return q.to_int_poly();
}

bool divides(const IntPoly& b, const IntPoly& a) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero()) return true;
  if (a.degree() < b.degree()) return false;
  auto [q, r] = divrem(RatPoly(a), RatPoly(b));
  if (!r.is_zero()) return false;
  for (const Rat& x : q.c)
    if (x.get_den() != 1) return false;
  return true;
}

// Pseudo remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, over Z.
static IntPoly prem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw k3_error(errc::domain_error, "pseudo-division by zero");
  IntPoly r = a;
  const Int& d = b.lc();
  int e = a.degree() - b.degree() + 1;
  if (e < 0) return r;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    r = sub(mul_scalar(r, d), shift_up(mul_scalar(b, r.lc()), static_cast<unsigned>(k)));
    --e;
  }
  if (e > 0) r = mul_scalar(r, pow_int(d, static_cast<unsigned long>(e)));
  return r;
}

IntPoly signed_prem_primitive(const IntPoly& a, const IntPoly& b) {
  IntPoly r = prem(a, b);
  // prem scales a by lc(b)^(delta+1); if that factor is negative the sign of
  // the true rational remainder is flipped, so flip it back.
  int delta = a.degree() - b.degree();
  if (delta >= 0 && sgn(b.lc()) < 0 && (delta + 1) % 2 == 1) r = neg(r);
  if (r.is_zero()) return r;
  Int g = r.content();
  IntPoly out;
  out.c.reserve(r.c.size());
  for (const Int& x : r.c) out.c.push_back(x / g);
  return out;
}

IntPoly gcd_poly(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive(), y = b.primitive();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = prem(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw k3_error(errc::domain_error, "squarefree part of zero");
  if (p.degree() == 0) return IntPoly::constant(1);
  IntPoly g = gcd_poly(p, derivative(p));
  return div_exact(p.primitive(), g).primitive();
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw k3_error(errc::domain_error, "squarefree decomposition of zero");
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm over Q on the monic normalization.
  RatPoly f = RatPoly(p).monic();
  RatPoly fp = derivative(f);
  RatPoly g = RatPoly(gcd_poly(f.primitive_int(), fp.primitive_int())).monic();
  RatPoly c = divrem(f, g).first;
  RatPoly d = sub(divrem(fp, g).first, derivative(c));
  int i = 1;
  while (c.degree() > 0) {
    IntPoly ai = gcd_poly(c.primitive_int(), d.primitive_int());
    if (ai.degree() > 0) out.emplace_back(ai, i);
    RatPoly aq(ai);
    aq = aq.monic();
    c = divrem(c, aq).first;
    d = sub(divrem(d, aq).first, derivative(c));
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Resultants

// Fraction-free determinant of an integer matrix (Bareiss).
static Int bareiss_det(std::vector<std::vector<Int>> m) {
  size_t n = m.size();
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Int(0);
      std::swap(m[k], m[swap_row]);
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
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

Int resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return Int(0);
  int m = f.degree(), n = g.degree();
  if (m == 0) return pow_int(f.c[0], static_cast<unsigned long>(n));
  if (n == 0) return pow_int(g.c[0], static_cast<unsigned long>(m));
  size_t dim = static_cast<size_t>(m + n);
  std::vector<std::vector<Int>> s(dim, std::vector<Int>(dim, Int(0)));
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= m; ++j) s[row][row + j] = f.c[static_cast<size_t>(m - j)];
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= n; ++j) s[n + row][row + j] = g.c[static_cast<size_t>(n - j)];
  return bareiss_det(std::move(s));
}

Int discriminant(const IntPoly& f) {
  int n = f.degree();
  if (n < 1) throw k3_error(errc::domain_error, "discriminant needs degree >= 1");
  if (n == 1) return Int(1);
  Int res = resultant(f, derivative(f));
  Int d;
  mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f.lc().get_mpz_t());
  long swaps = static_cast<long>(n) * (n - 1) / 2;
  return swaps % 2 == 0 ? d : Int(-d);
}

// ---------------------------------------------------------------------------
// Real root isolation (Sturm)

Rat root_bound(const IntPoly& p) {
  if (p.is_zero()) throw k3_error(errc::domain_error, "root bound of zero polynomial");
  if (p.degree() == 0) return Rat(1);
  Rat best(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rat q(abs(p.c[static_cast<size_t>(i)]), abs(p.lc()));
    q.canonicalize();
    if (q > best) best = q;
  }
  return best + 1;
}

static std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
  std::vector<IntPoly> seq;
  seq.push_back(p.primitive());
  IntPoly d = derivative(p).primitive();
  if (!d.is_zero()) seq.push_back(d);
  while (seq.size() >= 2 && !seq.back().is_zero() && seq.back().degree() > 0) {
    IntPoly r = signed_prem_primitive(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(neg(r));
  }
  return seq;
}

static int sign_variations(const std::vector<IntPoly>& seq, const Rat& x) {
  int vars = 0, last = 0;
  for (const IntPoly& s : seq) {
    int sg = sgn(eval_rat(s, x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++vars;
    last = sg;
  }
  return vars;
}

static int sturm_count_seq(const std::vector<IntPoly>& seq, const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) return 0;
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

int sturm_count(const IntPoly& p, const Rat& lo, const Rat& hi) {
  return sturm_count_seq(sturm_sequence(p), lo, hi);
}

int count_real_roots(const IntPoly& p) {
  IntPoly f = squarefree_part(p);
  if (f.degree() <= 0) return 0;
  Rat b = root_bound(f);
  return sturm_count(f, -b, b);
}

// Isolation for a squarefree polynomial; emits (lo, hi) open intervals with
// irrational contents or [r, r] for rational roots.
static void isolate_squarefree(const IntPoly& f, std::vector<IsolatedRoot>& out, int mult) {
  if (f.degree() <= 0) return;
  auto seq = sturm_sequence(f);
  Rat bound = root_bound(f);
  struct Span {
    Rat lo, hi;
    int count;
  };
  std::vector<Span> stack;
  int total = sturm_count_seq(seq, -bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Span s = stack.back();
    stack.pop_back();
    if (s.count == 1 && sgn(eval_rat(f, s.hi)) != 0) {
      out.push_back({s.lo, s.hi, mult});
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    if (sgn(eval_rat(f, mid)) == 0) {
      out.push_back({mid, mid, mult});
      // Shrink around the rational root until the gap isolates it alone,
      // then continue on both sides.
      Rat w = (s.hi - s.lo) / 4;
      while (sturm_count_seq(seq, mid - w, mid + w) != 1) w /= 2;
      int left = sturm_count_seq(seq, s.lo, mid - w);
      int right = sturm_count_seq(seq, mid + w, s.hi);
      if (left > 0) stack.push_back({s.lo, mid - w, left});
      if (right > 0) stack.push_back({mid + w, s.hi, right});
      continue;
    }
    int left = sturm_count_seq(seq, s.lo, mid);
    int right = s.count - left;
    if (left > 0) stack.push_back({s.lo, mid, left});
    if (right > 0) stack.push_back({mid, s.hi, right});
  }
}

void refine_root(const IntPoly& p, Rat& lo, Rat& hi, const Rat& width) {
  if (lo == hi) return;
  int slo = sgn(eval_rat(p, lo));
  int shi = sgn(eval_rat(p, hi));
  if (slo == 0 || shi == 0)
    throw k3_error(errc::invariant_violation, "isolating interval endpoint is a root");
  if (slo == shi)
    throw k3_error(errc::invariant_violation, "isolating interval has no sign change");
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    int sm = sgn(eval_rat(p, mid));
    if (sm == 0) {
      lo = mid;
      hi = mid;
      return;
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
}

std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw k3_error(errc::domain_error, "cannot isolate roots of zero");
  auto parts = squarefree_decomposition(p);
  struct Tagged {
    IsolatedRoot root;
    IntPoly factor;
  };
  std::vector<Tagged> all;
  for (auto& [factor, mult] : parts) {
    std::vector<IsolatedRoot> roots;
    isolate_squarefree(factor, roots, mult);
    for (auto& r : roots) all.push_back({r, factor});
  }
  auto midpoint = [](const IsolatedRoot& r) -> Rat { return (r.lo + r.hi) / 2; };
  // Distinct squarefree factors are coprime, so refinement separates any
  // overlapping intervals in finitely many steps.
  for (int pass = 0; pass < 4096; ++pass) {
    std::sort(all.begin(), all.end(),
              [&](const Tagged& a, const Tagged& b) { return midpoint(a.root) < midpoint(b.root); });
    bool disjoint = true;
    for (size_t i = 0; i + 1 < all.size(); ++i) {
      IsolatedRoot& a = all[i].root;
      IsolatedRoot& b = all[i + 1].root;
      bool overlap = a.hi > b.lo || (a.lo == a.hi && a.lo >= b.lo && a.lo <= b.hi) ||
                     (b.lo == b.hi && b.lo >= a.lo && b.lo <= a.hi);
      if (overlap) {
        disjoint = false;
        Rat wa = (a.hi - a.lo) / 4;
        Rat wb = (b.hi - b.lo) / 4;
        if (a.lo < a.hi) refine_root(all[i].factor, a.lo, a.hi, wa);
        if (b.lo < b.hi) refine_root(all[i + 1].factor, b.lo, b.hi, wb);
      }
    }
    if (disjoint) {
      std::vector<IsolatedRoot> out;
      out.reserve(all.size());
      for (auto& t : all) out.push_back(t.root);
      return out;
    }
  }
  throw k3_error(errc::invariant_violation, "root isolation failed to separate intervals");
}

// ---------------------------------------------------------------------------
// Power sums and composed products

std::vector<Rat> power_sums(const IntPoly& p, int k) {
  if (p.is_zero()) throw k3_error(errc::domain_error, "power sums of zero polynomial");
  int n = p.degree();
  std::vector<Rat> s(static_cast<size_t>(std::max(k, 0)));
  Rat inv_lc(1);
  inv_lc /= Rat(p.lc());
  for (int j = 1; j <= k; ++j) {
    // a_n s_j + a_{n-1} s_{j-1} + ... + a_{n-j+1} s_1 + j a_{n-j} = 0 (j <= n)
    // a_n s_j + a_{n-1} s_{j-1} + ... + a_0 s_{j-n} = 0             (j > n)
    Rat acc(0);
    for (int i = 1; i <= std::min(j - 1, n); ++i)
      acc += Rat(p.coeff_or_zero(static_cast<size_t>(n - i))) * s[static_cast<size_t>(j - i - 1)];
    if (j <= n) acc += Rat(static_cast<long>(j)) * Rat(p.coeff_or_zero(static_cast<size_t>(n - j)));
    s[static_cast<size_t>(j - 1)] = -acc * inv_lc;
  }
  return s;
}

RatPoly poly_from_power_sums(const std::vector<Rat>& s) {
  size_t n = s.size();
  std::vector<Rat> e(n + 1, Rat(0));
  e[0] = 1;
  for (size_t k = 1; k <= n; ++k) {
    Rat acc(0);
    int sign = 1;
    for (size_t i = 1; i <= k; ++i) {
      Rat term = e[k - i] * s[i - 1];
      acc += sign > 0 ? term : -term;
      sign = -sign;
    }
    e[k] = acc / Rat(static_cast<long>(k));
  }
  RatPoly p;
  p.c.assign(n + 1, Rat(0));
  int sign = 1;
  for (size_t k = 0; k <= n; ++k) {
    p.c[n - k] = sign > 0 ? e[k] : -e[k];
    sign = -sign;
  }
  p.trim();
  return p;
}

IntPoly power_roots_poly(const IntPoly& p, long k) {
  if (p.is_zero()) throw k3_error(errc::domain_error, "power of roots of zero polynomial");
  int n = p.degree();
  if (n == 0) return IntPoly::constant(1);
  if (k == 0) {
    IntPoly r = sub(IntPoly::variable(), IntPoly::constant(1));
    return pow_poly(r, static_cast<unsigned>(n));
  }
  IntPoly base = p;
  long kk = k;
  if (k < 0) {
    if (p.c[0] == 0) throw k3_error(errc::domain_error, "negative root power with zero root");
    base = reverse_poly(p);
    kk = -k;
  }
  std::vector<Rat> s = power_sums(base, static_cast<int>(static_cast<long>(n) * kk));
  std::vector<Rat> sk(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) sk[static_cast<size_t>(j - 1)] = s[static_cast<size_t>(j * kk - 1)];
  return poly_from_power_sums(sk).primitive_int();
}

// Newton-form interpolation through integer nodes.
static RatPoly interpolate(const std::vector<Int>& xs, const std::vector<Rat>& ys) {
  size_t n = xs.size();
  std::vector<Rat> coef(ys);
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / Rat(xs[i] - xs[i - level]);
      if (i == level) break;
    }
  RatPoly acc;
  for (size_t i = n; i-- > 0;) {
    // acc = acc * (T - xs[i]) + coef[i]
    RatPoly lin;
    lin.c = {Rat(-xs[i]), Rat(1)};
    acc = add(mul(acc, lin), RatPoly::constant(coef[i]));
  }
  return acc;
}

// Strip T^m from p; returns the number of zero roots removed.
static unsigned strip_zero_roots(IntPoly& p) {
  unsigned m = 0;
  while (!p.is_zero() && p.c[0] == 0) {
    p.c.erase(p.c.begin());
    ++m;
  }
  return m;
}

IntPoly composed_product(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero())
    throw k3_error(errc::domain_error, "composed product of zero polynomial");
  IntPoly ph = p, qh = q;
  unsigned zp = strip_zero_roots(ph);
  unsigned zq = strip_zero_roots(qh);
  int dp = ph.degree(), dq = qh.degree();
  unsigned zero_mult =
      zp * static_cast<unsigned>(dq) + zq * static_cast<unsigned>(dp) + zp * zq;
  IntPoly core = IntPoly::constant(1);
  if (dp > 0 && dq > 0) {
    // R(t) = Res_x(p(x), x^dq q(t/x)) has degree dp*dq in t; recover it from
    // values at dp*dq + 1 integer nodes.
    int deg = dp * dq;
    std::vector<Int> xs;
    std::vector<Rat> ys;
    xs.reserve(static_cast<size_t>(deg) + 1);
    for (long t = 0; static_cast<int>(xs.size()) <= deg; ++t) {
      long node = (t % 2 == 0) ? t / 2 : -(t / 2 + 1);
      // g(x) = x^dq * q(node / x): coefficient of x^(dq - j) is q_j node^j.
      IntPoly g;
      g.c.assign(static_cast<size_t>(dq) + 1, Int(0));
      Int tp(1);
      for (int j = 0; j <= dq; ++j) {
        g.c[static_cast<size_t>(dq - j)] = qh.c[static_cast<size_t>(j)] * tp;
        tp *= node;
      }
      g.trim();
      xs.emplace_back(node);
      ys.emplace_back(Rat(resultant(ph, g)));
    }
    RatPoly r = interpolate(xs, ys);
    if (r.is_zero())
      throw k3_error(errc::invariant_violation, "composed product interpolated to zero");
    core = r.primitive_int();
  }
  IntPoly out = shift_up(core, zero_mult);
  return out.primitive();
}

IntPoly composed_product_powersums(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero())
    throw k3_error(errc::domain_error, "composed product of zero polynomial");
  IntPoly ph = p, qh = q;
  unsigned zp = strip_zero_roots(ph);
  unsigned zq = strip_zero_roots(qh);
  int dp = ph.degree(), dq = qh.degree();
  unsigned zero_mult =
      zp * static_cast<unsigned>(dq) + zq * static_cast<unsigned>(dp) + zp * zq;
  IntPoly core = IntPoly::constant(1);
  if (dp > 0 && dq > 0) {
    int n = dp * dq;
    std::vector<Rat> sp = power_sums(ph, n);
    std::vector<Rat> sq = power_sums(qh, n);
    std::vector<Rat> s(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) s[static_cast<size_t>(j)] = sp[static_cast<size_t>(j)] * sq[static_cast<size_t>(j)];
    core = poly_from_power_sums(s).primitive_int();
  }
  IntPoly out = shift_up(core, zero_mult);
  return out.primitive();
}

// ---------------------------------------------------------------------------
// Cyclotomic recognition

static unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

static IntPoly cyclotomic_poly(unsigned long n) {
  static std::map<unsigned long, IntPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // T^n - 1 divided by the cyclotomic polynomials of the proper divisors.
  IntPoly num;
  num.c.assign(n + 1, Int(0));
  num.c[0] = -1;
  num.c[n] = 1;
  for (unsigned long d = 1; d < n; ++d)
    if (n % d == 0) num = div_exact(num, cyclotomic_poly(d));
  cache[n] = num;
  return num;
}

std::optional<unsigned long> cyclotomic_order(const IntPoly& p) {
  if (p.degree() < 1) return std::nullopt;
  IntPoly q = p.primitive();
  if (!q.is_monic()) return std::nullopt;
  unsigned long d = static_cast<unsigned long>(q.degree());
  // phi(n) >= sqrt(n/2), so phi(n) = d forces n <= 2d^2.
  for (unsigned long n = 1; n <= 2 * d * d; ++n)
    if (euler_phi(n) == d && cyclotomic_poly(n) == q) return n;
  return std::nullopt;
}

std::string poly_to_string(const IntPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Int& a = p.c[static_cast<size_t>(i)];
    if (a == 0) continue;
    Int mag = abs(a);
    if (first) {
      if (sgn(a) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace kahler3
