// Exact rational scalars used throughout the library, backed by GMP.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qzeta {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "n" and "n/d"; result is canonical.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

// Canonical text form: "n" when the denominator is 1, otherwise "n/d".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer out of long range");
  return z.get_si();
}

inline long rat_to_long(const Rat& r) {
  if (!rat_is_integer(r)) throw std::invalid_argument("rational is not an integer: " + rat_str(r));
  return to_long(r.get_num());
}

}  // namespace qzeta
