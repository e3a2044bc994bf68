#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "lv/errors.hpp"

namespace lv {

using Int = mpz_class;
using Rat = mpq_class;

// a/b in lowest terms with positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

// C(n, k), zero when k < 0 or k > n.
inline Int binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline std::string int_str(const Int& n) { return n.get_str(); }

// "a/b", or just "a" for integers.
inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "a", "a/b", with optional sign; throws DomainError on junk.
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw DomainError("cannot parse rational: '" + s + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace lv
