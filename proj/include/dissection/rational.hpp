#ifndef DISSECTION_RATIONAL_HPP
#define DISSECTION_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dissection {

// All arithmetic in the library is exact; Rational is the only scalar type.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (base 10). Throws std::invalid_argument on junk.
inline Rational parse_rational(const std::string& text) {
  mpq_class r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw std::invalid_argument("invalid rational: '" + text + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

inline std::string rational_str(const Rational& r) { return r.get_str(); }

inline Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline Integer factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace dissection

#endif
