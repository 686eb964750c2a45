#ifndef KAHLER3_FLOATING_HPP
#define KAHLER3_FLOATING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "kahler3/algebraic.hpp"
#include "kahler3/poly.hpp"

namespace kahler3 {

// A disk in the complex plane with exact rational center and radius.
// Certified enclosures promise: the disk contains exactly one root of the
// polynomial it was produced for.
struct ComplexBall {
  Rat re, im;  // center
  Rat rad;     // radius upper bound

  bool can_be_real() const { return abs(im) <= rad; }
  bool is_exact() const { return rad == 0; }
};

// Working precision for numeric root approximation starts at 128 bits and
// doubles on demand up to this cap (KAHLER3_PRECISION_CAP overrides the
// default of 4096).
unsigned precision_cap();

// Certified enclosures for all roots of a squarefree polynomial: pairwise
// disjoint disks, one root each. Approximations come from a Durand-Kerner
// iteration; certification uses the exact a posteriori radius
// deg(p) * |p(z)/p'(z)| evaluated in rational arithmetic. Throws
// precision_exhausted if the cap is reached before the disks separate.
std::vector<ComplexBall> certified_roots(const IntPoly& squarefree, unsigned start_prec = 128,
                                         unsigned target_prec = 0);

// Shrink every ball of the family below the given radius (re-running the
// approximation at higher precision).
std::vector<ComplexBall> certified_roots_below(const IntPoly& squarefree, const Rat& max_radius);

// Rational bounds on |z|^2 over the ball (box bound).
Rat ball_mod2_lower(const ComplexBall& b);
Rat ball_mod2_upper(const ComplexBall& b);

// Interval product and conjugate: the result ball contains every product
// z*w with z in a and w in b (resp. every conjugate).
ComplexBall ball_mul(const ComplexBall& a, const ComplexBall& b);
ComplexBall ball_conj(const ComplexBall& b);

// Rational u with u^2 >= q (resp. u^2 <= q); q >= 0.
Rat rat_sqrt_upper(const Rat& q);
Rat rat_sqrt_lower(const Rat& q);

// Index pairing of conjugate balls: for each ball, the index of the ball
// holding the conjugate root (itself for balls straddling the real axis).
// Throws if the pairing is ambiguous at this precision.
std::vector<size_t> conjugate_pairing(const std::vector<ComplexBall>& balls);

// The unique isolated real root of the list intersecting [lo, hi], refining
// the stored intervals as needed. Returns nullopt when more than one root
// interval still intersects (caller should shrink [lo, hi] and retry).
std::optional<size_t> unique_root_in(std::vector<std::pair<RealAlgebraic, int>>& roots,
                                     const Rat& lo, const Rat& hi);

// log of a positive rational through MPFR (for fits and diagnostics only).
double log_of_rat(const Rat& q);

// Directed-rounding enclosure [lo, hi] of log(q) for a positive rational q.
// Safe for gating exact verifications: log(q) is certain to lie inside.
std::pair<double, double> log_rat_interval(const Rat& q);

}  // namespace kahler3

#endif
