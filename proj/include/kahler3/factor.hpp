#ifndef KAHLER3_FACTOR_HPP
#define KAHLER3_FACTOR_HPP

#include <vector>

#include "kahler3/poly.hpp"

namespace kahler3 {

struct Factor {
  IntPoly poly;  // irreducible over Q, primitive, leading coefficient > 0
  int multiplicity = 1;
};

struct FactorList {
  Int unit{1};  // signed integer content
  std::vector<Factor> factors;

  // unit times the product of poly^multiplicity.
  IntPoly product() const;
};

// Complete factorization over Z: squarefree decomposition, then Berlekamp
// factorization modulo a good prime, quadratic Hensel lifting past the
// coefficient bound, and subset recombination. Factors are sorted by degree,
// then lexicographically by coefficient vector. Degree is capped at 40.
FactorList factor_over_Z(const IntPoly& p);

bool is_irreducible(const IntPoly& p);

}  // namespace kahler3

#endif
