#ifndef LIEKV_RATIONAL_HPP
#define LIEKV_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace liekv {

// Exact arbitrary-precision rational. All symbolic modules use this type;
// no floating point enters until concrete_lie evaluates on a given algebra.
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q". Used by the algebra-file loader and tests.
inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (sgn(mpq_class(r.get_den())) <= 0 && r.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double to_double(const Rat& r) { return r.get_d(); }

inline mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace liekv

#endif
