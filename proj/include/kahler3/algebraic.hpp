#ifndef KAHLER3_ALGEBRAIC_HPP
#define KAHLER3_ALGEBRAIC_HPP

#include "kahler3/factor.hpp"
#include "kahler3/poly.hpp"

namespace kahler3 {

// A real algebraic number: an irreducible primitive minimal polynomial with
// positive leading coefficient plus an isolating interval. Rational values
// are stored with degree-one minimal polynomial and a collapsed interval
// (lo == hi); irrational values keep an open interval whose endpoints are
// not roots and over which the minimal polynomial changes sign.
struct RealAlgebraic {
  IntPoly minpoly;
  Rat lo, hi;

  bool is_rational() const { return minpoly.degree() == 1; }
  Rat rational_value() const;
  int degree() const { return minpoly.degree(); }
};

RealAlgebraic from_rational(const Rat& q);
RealAlgebraic from_long(long v);

// Wraps a root of an irreducible polynomial. Validates the isolating
// interval.
RealAlgebraic algebraic_root(const IntPoly& irreducible, const Rat& lo, const Rat& hi);

// Selects the unique root of p (not necessarily irreducible) inside
// (lo, hi); throws if the interval does not isolate exactly one root.
RealAlgebraic select_root(const IntPoly& p, const Rat& lo, const Rat& hi);

// All real roots of p as algebraic numbers, sorted increasing, with
// multiplicities.
std::vector<std::pair<RealAlgebraic, int>> real_roots_of(const IntPoly& p);

// Shrinks the isolating interval to at most `width`.
void refine_to(RealAlgebraic& x, const Rat& width);

int sign(const RealAlgebraic& x);
int compare(const RealAlgebraic& a, const RealAlgebraic& b);
int compare(const RealAlgebraic& a, const Rat& q);
bool algebraic_equal(const RealAlgebraic& a, const RealAlgebraic& b);

// x^k for any integer k (x nonzero when k < 0). Exact: the result's minimal
// polynomial is an irreducible factor of the polynomial whose roots are the
// k-th powers of the roots of x's minimal polynomial.
RealAlgebraic algebraic_pow(const RealAlgebraic& x, long k);

// Exact product via composed products. The degree of the product of the two
// minimal polynomials is capped at 120.
RealAlgebraic algebraic_mul(const RealAlgebraic& a, const RealAlgebraic& b);

RealAlgebraic algebraic_neg(const RealAlgebraic& a);

// Midpoint after refinement to width 2^-(bits+2); for display only.
double to_double(const RealAlgebraic& x, unsigned bits = 80);

// Lower bound on the distance between distinct real roots of a squarefree
// integer polynomial (a Mahler-type bound).
Rat root_separation_bound(const IntPoly& squarefree);

std::string algebraic_to_string(const RealAlgebraic& x);

}  // namespace kahler3

#endif
