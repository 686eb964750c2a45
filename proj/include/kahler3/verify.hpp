#ifndef KAHLER3_VERIFY_HPP
#define KAHLER3_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kahler3/algebraic.hpp"
#include "kahler3/spectra.hpp"
#include "kahler3/torus.hpp"

namespace kahler3 {

enum class CheckStatus { pass, fail, not_applicable, undecided };
const char* check_status_name(CheckStatus s);

// Per-modulus evidence for the halving-chain check: the smallest N with
// |eigenvalue|^((-2)^N) landing exactly on a distinguished target, and
// whether every intermediate power stays inside the modulus set.
struct ModulusCertificate {
  RealAlgebraic mod2;
  int multiplicity = 0;
  int halving_steps = -1;  // N; -1 when the search exhausted its bound
  std::string target;      // "one" | "lambda1" | "lambda2inv" | "lambda1inv-lambda2"
  bool chain_ok = false;
};

// Per-factor evidence for the conjugate-modulus check: one target label per
// root of the factor carrying the first dynamical degree.
struct ConjugateOrbit {
  IntPoly factor;
  int degree = 0;
  std::vector<std::string> root_targets;
};

struct VerificationReport {
  std::string theorem;  // "A" | "B" | "C" | "mixed" | "surface"
  CheckStatus status = CheckStatus::undecided;
  // Human-readable evidence: the failed applicability condition, the
  // concrete fail witness, or a pass summary.
  std::string detail;

  std::vector<int> block_sizes;             // Jordan evidence (A, mixed, surface)
  std::optional<unsigned long> order;       // power that makes the action unipotent,
                                            // or the finite order of an elliptic isometry
  std::vector<ModulusCertificate> entries;  // halving-chain evidence (B)

  ConjugateOrbit orbit;        // conjugate-modulus evidence (C)
  std::string classification;  // modulus conjugacy pattern (C) or isometry class
  int subcase = 0;             // 1..3 when the modulus group has rank 2
  int k_pairs = -1;            // conjugate-pair count for the subcase; -1 when n/a
  int bullet = 0;              // 1..2 when the modulus group has rank 1
  // The same classification computed for the inverse action (reports both
  // rather than preferring one side).
  std::string inverse_classification;
  int inverse_subcase = 0;
  int inverse_k_pairs = -1;
  int inverse_bullet = 0;

  std::optional<RealAlgebraic> dominant;  // dominant eigenvalue (surface)
};

// Virtually-unipotent block constraints on the degree-2 action: applicable
// iff the degree-2 spectral radius is 1 and the action has infinite order;
// then some power is unipotent and its Jordan blocks must have a unique
// maximum of odd size m in {3, 5} with every other block of size at most
// (m+1)/2.
VerificationReport check_theorem_A(const TorusSpec& t);

// Halving-chain membership: every squared eigenvalue modulus reaches one of
// {1, lambda1^2, lambda2^-2, (lambda1^-1*lambda2)^2} after at most n_max
// inverse-square steps, with every intermediate value again a squared
// eigenvalue modulus. Exact at every step.
VerificationReport check_theorem_B(const TorusSpec& t, int n_max);

// Conjugate-modulus membership: every root of the irreducible factor
// carrying lambda1 has squared modulus in the six-element target set
// {lambda1^2, lambda2^-2, (lambda1^-1*lambda2)^2, lambda1^-1, lambda2,
// lambda1*lambda2^-1}; also classifies the modulus conjugacy pattern
// (rank 2: subcases 1-3 with pair counts; rank 1: bullets 1-2) for the
// action and its inverse. Applicable iff lambda1 > 1.
VerificationReport check_theorem_C(const TorusSpec& t);

// Non-semisimple middle-cohomology constraints for an abstract action:
// requires a square rational matrix with reciprocal characteristic
// polynomial and lambda1 > 1 (rejected otherwise). Applicable iff the
// matrix is not semisimple; then lambda2 must be sqrt(lambda1) or
// lambda1^2 exactly, the distinguished eigenvalue (lambda1, resp.
// 1/lambda2) must carry a unique nontrivial Jordan block of size m <= 3,
// and every other eigenvalue with a nontrivial block must have the
// prescribed squared modulus (1/lambda1, resp. lambda2) with blocks of
// size at most m-1. A pass is labeled "conjecture-counterexample-candidate"
// because no genuine automorphism is expected to reach it.
VerificationReport check_mixed_case(const RatMatrix& action_h2, const RealAlgebraic& lambda1,
                                    const RealAlgebraic& lambda2);

// Classification of an integer isometry of a signature-(1, n-1) integer
// symmetric form: loxodromic (spectral radius > 1; the dominant eigenvalue
// is verified to be real, simple, reciprocal-paired, with all other
// conjugates on the unit circle), elliptic (finite order), or parabolic
// (infinite order, all eigenvalue moduli 1; some power is unipotent with a
// single size-3 block and nothing larger). Inputs failing the form checks
// are rejected.
VerificationReport classify_surface_isometry(const RatMatrix& g, const RatMatrix& q);

// Factor-degree census of the degree-2 characteristic polynomial. The
// square-free check comes first: when it fails, the factor-orbit
// correspondence is not available and the report says so instead of
// answering.
struct GaloisOrbitReport {
  bool q_squarefree = false;
  std::vector<int> degrees;  // ascending; empty when not square-free
  struct OrbitFactor {
    IntPoly poly;
    int degree = 0;
    bool has_lambda1 = false;           // largest plane modulus is a root
    bool has_lambda2inv = false;        // smallest plane modulus is a root
    bool has_lambda1inv_lambda2 = false;  // middle plane modulus is a root
  };
  std::vector<OrbitFactor> factors;  // empty when not square-free
};
GaloisOrbitReport galois_orbit_report(const IntPoly& p);

// Search box for degree-6 candidates: monic, constant term 1, coefficients
// bounded by coeff_bound, no real roots (torus validity). Optional extras
// narrow the box; require_real_root contradicts validity and always yields
// an empty result.
struct HuntCriteria {
  bool p_irreducible = false;
  bool q2_irreducible = false;
  bool require_real_root = false;
  std::optional<int> unit_modulus_roots;  // exact count of roots with |z| == 1
};

// Deterministic enumeration (lexicographic on the coefficient vector
// (a5, a4, a3, a2, a1)), cheap exact gates first, then full certified
// analysis on survivors; `budget` caps how many survivors are analyzed.
// `on_hit`, when given, is invoked with each hit right after certification,
// so callers can stream results before the enumeration finishes.
std::vector<IntPoly> hunt_polynomials(const HuntCriteria& criteria, int coeff_bound, long budget,
                                      const std::function<void(const IntPoly&)>& on_hit = {});

}  // namespace kahler3

#endif
