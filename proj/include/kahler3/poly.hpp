#ifndef KAHLER3_POLY_HPP
#define KAHLER3_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "kahler3/base.hpp"

namespace kahler3 {

// Dense univariate polynomial over Z, coefficients lowest degree first.
// Canonical form has no trailing zero coefficients; the zero polynomial has
// an empty coefficient vector and degree -1.
struct IntPoly {
  std::vector<Int> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(Int v);
  static IntPoly variable();  // T
  static IntPoly from_longs(const std::vector<long>& v);

  void trim();
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Int& lc() const;
  const Int& coeff_or_zero(size_t i) const;
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  Int content() const;          // gcd of coefficients, nonnegative
  IntPoly primitive() const;    // content removed, leading coefficient > 0
  bool operator==(const IntPoly& o) const { return c == o.c; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }
};

// Dense univariate polynomial over Q, same conventions.
struct RatPoly {
  std::vector<Rat> c;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  explicit RatPoly(const IntPoly& p);

  static RatPoly zero() { return RatPoly(); }
  static RatPoly constant(Rat v);

  void trim();
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Rat& lc() const;
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  // Clears denominators and strips content; result is primitive with lc > 0.
  IntPoly primitive_int() const;
  // Requires every coefficient to be an integer.
  IntPoly to_int_poly() const;
  RatPoly monic() const;

  bool operator==(const RatPoly& o) const { return c == o.c; }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly neg(const IntPoly& a);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly mul_scalar(const IntPoly& a, const Int& s);
IntPoly pow_poly(const IntPoly& a, unsigned e);
IntPoly shift_up(const IntPoly& a, unsigned k);  // multiply by T^k

RatPoly add(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);
RatPoly mul(const RatPoly& a, const RatPoly& b);
RatPoly mul_scalar(const RatPoly& a, const Rat& s);

Int eval_int(const IntPoly& p, const Int& x);
Rat eval_rat(const IntPoly& p, const Rat& x);
Rat eval_rat(const RatPoly& p, const Rat& x);

IntPoly derivative(const IntPoly& p);
RatPoly derivative(const RatPoly& p);

// Coefficient reversal: T^deg * p(1/T). For p with p(0) != 0 this maps roots
// to their inverses.
IntPoly reverse_poly(const IntPoly& p);

// Field division with remainder over Q.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);
// Exact division over Z; throws domain_error if b does not divide a.
IntPoly div_exact(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);

// Pseudo-remainder scaled so its sign agrees with the true rational
// remainder of a by b (needed by Sturm sequences), content removed.
IntPoly signed_prem_primitive(const IntPoly& a, const IntPoly& b);

// Primitive gcd via the subresultant PRS; result primitive with lc > 0.
IntPoly gcd_poly(const IntPoly& a, const IntPoly& b);

// p / gcd(p, p'), primitive. Same roots as p, all simple.
IntPoly squarefree_part(const IntPoly& p);

// Yun decomposition: list of (primitive squarefree factor, multiplicity)
// with product over factor^multiplicity equal to p up to a rational constant.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Resultant and discriminant over Z (Sylvester determinant, fraction-free).
Int resultant(const IntPoly& f, const IntPoly& g);
Int discriminant(const IntPoly& f);

// All real roots lie in (-bound, bound).
Rat root_bound(const IntPoly& p);

struct IsolatedRoot {
  Rat lo, hi;     // lo == hi exactly when the root is rational
  int mult = 1;
};

// Number of distinct real roots of a squarefree p in (lo, hi].
int sturm_count(const IntPoly& p, const Rat& lo, const Rat& hi);
int count_real_roots(const IntPoly& p);  // distinct

// Isolating intervals for all real roots of p (p need not be squarefree),
// sorted increasing, with multiplicities. Open intervals (lo, hi) unless
// degenerate; endpoints are never roots of p unless lo == hi.
std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p);

// Halve the width of an isolating interval of squarefree p until it is
// at most `width`. The interval must isolate exactly one root.
void refine_root(const IntPoly& p, Rat& lo, Rat& hi, const Rat& width);

// Power sums s_1..s_k of the roots of p (with multiplicity), via Newton's
// identities. p must be nonzero; sums are exact rationals.
std::vector<Rat> power_sums(const IntPoly& p, int k);
// Monic polynomial of degree n whose root power sums are s[0..n-1] = s_1..s_n.
RatPoly poly_from_power_sums(const std::vector<Rat>& s);

// Primitive integer polynomial of degree deg(p) whose roots are the k-th
// powers of the roots of p; monic when p is monic. For k < 0, p(0) must be
// nonzero. Result may be non-squarefree even if p is squarefree.
IntPoly power_roots_poly(const IntPoly& p, long k);

// Polynomial of degree deg(p)*deg(q) whose roots are all pairwise products
// of roots of p and q, computed through the resultant
// Res_x(p(x), x^{deg q} q(T/x)) by evaluation and interpolation.
IntPoly composed_product(const IntPoly& p, const IntPoly& q);
// Same roots, computed through multiplicative power sums. Used as an
// independent route for cross-checks.
IntPoly composed_product_powersums(const IntPoly& p, const IntPoly& q);

// If p is the n-th cyclotomic polynomial for some n, returns n.
std::optional<unsigned long> cyclotomic_order(const IntPoly& p);
// Exact multiplicative order of a root of unity with minimal polynomial p,
// std::nullopt if the roots of p are not roots of unity. p irreducible.
std::optional<unsigned long> root_of_unity_order(const IntPoly& p);

// True when every root of p lies on the unit circle and p != 0.
bool is_product_of_cyclotomics(const IntPoly& p);

std::string poly_to_string(const IntPoly& p, const std::string& var = "T");

}  // namespace kahler3

#endif
