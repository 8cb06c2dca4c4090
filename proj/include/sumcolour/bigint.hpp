#pragma once

// Small helpers on top of GMP's C++ wrappers.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sumcolour {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// Floor-mod with nonnegative result for a positive modulus.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Fractional part x - floor(x), in [0, 1).
inline Rational frac(const Rational& x) {
  Integer r = mod_floor(x.get_num(), x.get_den());
  Rational out(r, x.get_den());
  out.canonicalize();
  return out;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Modular inverse; throws when a is not invertible mod m.
inline Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("no modular inverse");
  }
  return r;
}

inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

// Returns k when n == p^k, or -1 when n is not a power of p. n must be positive.
inline long power_of(const Integer& n, const Integer& p) {
  if (n <= 0) return -1;
  Integer m = n;
  long k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return m == 1 ? k : -1;
}

// Prime factorisation by trial division: (prime, exponent) in increasing prime order.
// Invariant factors handled here are small, so trial division is adequate.
inline std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, unsigned>> out;
  if (n <= 1) return out;
  for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

}  // namespace sumcolour
