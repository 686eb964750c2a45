#ifndef KAHLER3_BASE_HPP
#define KAHLER3_BASE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kahler3 {

// Error taxonomy shared by the whole library. The CLI maps these to exit
// codes: validation/parse -> 1, verified failure -> 2, undecided -> 3.
enum class errc {
  dimension_mismatch,
  domain_error,
  parse_error,
  validation_not_monic,
  validation_wrong_degree,
  validation_constant_term,
  validation_repeated_roots,
  validation_real_root,
  validation_not_unimodular,
  validation_bad_form,
  precision_exhausted,
  undecided,
  invariant_violation,
  unsupported,
};

const char* errc_name(errc e);

class k3_error : public std::runtime_error {
 public:
  k3_error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline int sign_of(const Int& z) { return sgn(z); }
inline int sign_of(const Rat& q) { return sgn(q); }

// Decimal string round-trips for JSON ("p" or "p/q" in lowest terms).
std::string int_to_string(const Int& z);
std::string rat_to_string(const Rat& q);
Int int_from_string(const std::string& s);
Rat rat_from_string(const std::string& s);

// Number of bits in |z| (0 for z = 0).
inline size_t bit_length(const Int& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

// 2^-k as an exact rational.
inline Rat pow2_neg(unsigned k) {
  Rat r(1);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), k);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = base;
  if (e < 0) {
    if (sgn(b) == 0) throw k3_error(errc::domain_error, "0^negative");
    b = 1 / b;
    e = -e;
  }
  Rat acc(1);
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace kahler3

#endif
