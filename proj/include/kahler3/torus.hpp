#ifndef KAHLER3_TORUS_HPP
#define KAHLER3_TORUS_HPP

#include <array>
#include <vector>

#include "kahler3/floating.hpp"
#include "kahler3/matrix.hpp"

namespace kahler3 {

enum class TorusSource { poly, matrix3 };

// A complex 3-torus automorphism presented through its integral degree-1
// cohomology action. Immutable after construction by a factory below; the
// graded actions are materialized eagerly, so concurrent reads are safe.
struct TorusSpec {
  TorusSource source = TorusSource::poly;

  IntPoly poly;          // poly source: validated degree-6 polynomial
  RatMatrix matrix3;     // matrix3 source: 3x3 integer, det +-1

  // 6x6 integer action on degree 1: companion-transpose of poly, or the
  // 3x3 matrix with each entry e replaced by e*I_2.
  RatMatrix h1_action;

  // matrix3 source only: 9x9 action on the (1,1) block, the Kronecker
  // square of the transpose (outer-then-inner row-major nesting).
  RatMatrix h11_action;

  // Exterior powers of h1_action: by_degree[k] acts on degree k; sizes
  // 1, 6, 15, 20, 15, 6, 1.
  std::array<RatMatrix, 7> by_degree;

  Rat det6;  // the single entry of by_degree[6]
};

// Validates and builds a poly-sourced torus. Rejects, with distinct error
// codes: non-monic input, degree != 6, constant term != 1, repeated roots,
// and real roots.
TorusSpec torus_from_poly(const IntPoly& p);

// Validates and builds a matrix3-sourced torus (triple product of a common
// elliptic factor). Rejects non-integer and non-unimodular input.
TorusSpec torus_from_matrix3(const RatMatrix& m);
TorusSpec torus_from_matrix3(const std::vector<std::vector<long>>& rows);

// The action on degree k (0..6); throws on out-of-range k.
const RatMatrix& induced_action(const TorusSpec& t, unsigned k);

// True iff for every k the characteristic polynomial of the degree-(6-k)
// action equals plus-or-minus the coefficient reversal of the degree-k one.
bool verify_poincare_duality(const TorusSpec& t);

// True iff the trilinear pairing (a, b, c) -> coefficient of the top form
// of a^b^c on degree-2 classes transforms by the degree-6 determinant:
// pairing(Fa, Fb, Fc) = det6 * pairing(a, b, c) for all 15^3 basis triples.
bool wedge_pairing_invariance(const TorusSpec& t);

// Exact inertia of the intersection form q(u, v) = integral of u^v^omega
// on the two rational Hodge blocks of degree 2, with omega the standard
// diagonal Kaehler class. Only matrix3-sourced tori split over Q; poly
// sources throw `unsupported`.
struct HodgeSignature {
  Inertia block11;   // expected (1, h11-1, 0)
  Inertia block20;   // expected (0, dim, 0): negative definite
  bool orthogonal = false;  // the two blocks pair to zero
};
HodgeSignature hodge_form_signature(const TorusSpec& t);

// One eigenvalue of the degree-2 action, tagged with its origin:
// a product of two degree-1 roots for poly tori (j_conjugated selects
// beta_i * conj(beta_j)), or a plain eigenvalue enclosure for matrix3 tori
// (i == j == -1).
struct SpectrumEntry {
  ComplexBall value;
  int i = -1, j = -1;
  bool j_conjugated = false;
};

// Certified spectral data of the degree-2 action split by Hodge type.
struct HodgeSpectra {
  std::vector<ComplexBall> h1_roots;       // poly: 6 root balls, conj-paired
  std::vector<size_t> conj_pair;           // poly: pairing of h1_roots
  std::array<int, 3> plane_root{-1, -1, -1};  // poly: positive-imaginary pick
  std::vector<SpectrumEntry> h20, h11, h02;   // sizes 3, 9, 3
};
HodgeSpectra hodge_spectra(const TorusSpec& t);

}  // namespace kahler3

#endif
