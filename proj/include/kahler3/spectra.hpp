#ifndef KAHLER3_SPECTRA_HPP
#define KAHLER3_SPECTRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kahler3/algebraic.hpp"
#include "kahler3/torus.hpp"

namespace kahler3 {

// The three plane moduli: squared absolute values of one eigenvalue per
// complex plane of the torus, sorted m1 >= m2 >= m3. Each is identified
// exactly as a real positive root of the degree-2 characteristic polynomial
// (a conjugate-pair product is itself a degree-2 eigenvalue), and their
// product is 1 because the degree-1 action is unimodular.
struct PlaneModuli {
  RealAlgebraic m1, m2, m3;
};
PlaneModuli plane_moduli(const TorusSpec& t);

// One modulus class of the degree-2 action: |eigenvalue|^2 as an exact real
// algebraic number, how many of the 15 eigenvalues share it, and which
// construction certified the value.
struct ModulusEntry {
  RealAlgebraic mod2;
  int multiplicity = 0;
  std::string provenance;  // "squared-degree-2-eigenvalue", "degree-4-eigenvalue", or both
};

struct ModuliSet {
  std::vector<ModulusEntry> entries;  // ascending, pairwise distinct, all positive
  std::optional<PlaneModuli> plane;   // attached when built from a torus

  int total_multiplicity() const;
};

// Groups the 15 eigenvalues of the degree-2 action by modulus. Every
// modulus-squared is a real positive root of either the root-squaring
// transform of the degree-2 characteristic polynomial (real eigenvalues) or
// the degree-4 characteristic polynomial (conjugate-pair products of
// non-real eigenvalues); each root ball is matched against that candidate
// pool with precision escalation. Throws `undecided` naming the two
// candidates if a ball cannot be separated within the precision cap.
ModuliSet moduli_set(const TorusSpec& t);

// lambda1 = spectral radius of the degree-2 action (attained by a real
// positive eigenvalue), lambda2 = spectral radius of the degree-4 action
// (the inverse of the smallest plane modulus, by unimodularity), and the
// argument whose logarithm is the entropy: max(lambda1, lambda2). All three
// are exact.
struct DynamicalDegrees {
  RealAlgebraic lambda1, lambda2, entropy_log_arg;
};
DynamicalDegrees dynamical_degrees(const TorusSpec& t);

// Exactly decides l1^2 >= l2 and l2^2 >= l1 (log-concavity of the degree
// sequence 1, l1, l2, 1). Inputs below 1 are a domain error.
bool log_concavity_check(const RealAlgebraic& l1, const RealAlgebraic& l2);

// How a weight-lattice conclusion is certified:
//   exact    - rank 0 (all moduli 1) or rank 1 (relation verified exactly);
//   bounded  - rank 2: every candidate relation within the exponent bound
//              was refuted exactly (a larger bound could still reveal one);
//   undecided- coordinates or relations could not be settled.
enum class RankStatus { exact, bounded, undecided };

// Multiplicative structure of the modulus classes. Generators are square
// roots of the referenced entries: for rank 2 the basis references the
// maximal and minimal entries (whose square roots are the extreme plane
// moduli); for rank 1 it references the entry of smallest positive weight
// whose coordinates clear to integers times powers of 2.
struct WeightLattice {
  int rank = -1;  // 0, 1, or 2; -1 when status == undecided
  RankStatus status = RankStatus::undecided;
  long exponent_bound = 0;
  std::vector<size_t> basis;              // indices into ModuliSet::entries
  std::vector<std::vector<Rat>> weights;  // per entry, length == rank
  // Verified relation g1^a * g2^b == 1 between the extreme plane moduli
  // g1 = sqrt(max entry), g2 = sqrt(min entry), when rank 1.
  std::optional<std::pair<long, long>> relation;
  bool coords_pow2_denominators = true;
};

// Rank of the multiplicative group generated by the modulus classes, with
// exact two-tier certification: candidate integer relations inside the
// exponent bound are discovered through certified log intervals, then each
// survivor is confirmed or refuted by exact algebraic-power equality. A
// numeric candidate is never reported without exact confirmation.
WeightLattice weight_rank(const ModuliSet& ms, long bound);

}  // namespace kahler3

#endif
