#ifndef KAHLER3_MATRIX_HPP
#define KAHLER3_MATRIX_HPP

#include <vector>

#include "kahler3/poly.hpp"

namespace kahler3 {

// Dense matrix over Q, row-major.
struct RatMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

  static RatMatrix identity(size_t n);
  static RatMatrix from_longs(const std::vector<std::vector<long>>& rows);

  Rat& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Rat& at(size_t i, size_t j) const { return a[i * cols + j]; }
  bool is_square() const { return rows == cols; }

  bool operator==(const RatMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }
};

RatMatrix add(const RatMatrix& x, const RatMatrix& y);
RatMatrix sub(const RatMatrix& x, const RatMatrix& y);
RatMatrix mul(const RatMatrix& x, const RatMatrix& y);
RatMatrix mul_scalar(const RatMatrix& x, const Rat& s);
RatMatrix transpose(const RatMatrix& x);
RatMatrix matrix_power(const RatMatrix& x, unsigned long e);

Rat trace(const RatMatrix& x);
Rat det(const RatMatrix& x);        // fraction-free after clearing denominators
size_t rank(const RatMatrix& x);    // Gaussian elimination over Q
RatMatrix inverse(const RatMatrix& x);

// Characteristic polynomial det(T*I - x) as a monic polynomial over Q,
// recovered from the traces of powers through Newton's identities.
RatPoly charpoly(const RatMatrix& x);

// p evaluated at the matrix x (Horner).
RatMatrix eval_poly(const RatPoly& p, const RatMatrix& x);
RatMatrix eval_poly(const IntPoly& p, const RatMatrix& x);

RatMatrix kronecker(const RatMatrix& x, const RatMatrix& y);

// k-th exterior power. Basis: k-element subsets of {0..n-1} in lexicographic
// order; entries are the k x k minors det(x[S, T]).
RatMatrix exterior_power(const RatMatrix& x, unsigned k);

// Index of a k-subset in the lexicographic enumeration, and back.
size_t subset_rank(const std::vector<unsigned>& subset, unsigned n);
std::vector<unsigned> subset_unrank(size_t r, unsigned n, unsigned k);
unsigned long binomial(unsigned n, unsigned k);

// Companion matrix of a monic polynomial of degree n >= 1: subdiagonal ones,
// last column the negated coefficients.
RatMatrix companion(const IntPoly& p);

// Nullity of x (dimension of the right kernel).
size_t nullity(const RatMatrix& x);

// Inertia (p, n, z) of a symmetric rational matrix: the count of positive,
// negative, and zero eigenvalues, computed exactly by congruence reduction
// (no eigenvalues are ever approximated).
struct Inertia {
  int pos = 0, neg = 0, zero = 0;
  bool operator==(const Inertia& o) const {
    return pos == o.pos && neg == o.neg && zero == o.zero;
  }
};
Inertia signature_of_symmetric(const RatMatrix& s);

bool is_integer_matrix(const RatMatrix& x);

}  // namespace kahler3

#endif
