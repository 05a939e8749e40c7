#include "qdc/rational.hpp"

#include <numeric>
#include <stdexcept>

#include "qdc/error.hpp"

namespace qdc {

long int_valuation(const Int& x, unsigned long p, long cap) {
  if (x == 0) return cap;
  Int r = x;
  long v = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
    ++v;
    if (v >= cap) return cap;
  }
  return v;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int pow_ul(unsigned long base, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

Rational rational_from_string(std::string_view s) {
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), std::string(s).c_str(), 10) != 0)
    fail("parse-error", "not a rational literal: '" + std::string(s) + "'");
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    fail("parse-error", "zero denominator in '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Int floor_rational(const Rational& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), mpq_numref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()));
  return q;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational binomial_rational(const Rational& s, unsigned long k) {
  Rational acc = 1;
  for (unsigned long i = 0; i < k; ++i) {
    acc *= s - Rational(static_cast<long>(i));
    acc /= Rational(static_cast<long>(i) + 1);
  }
  return acc;
}

unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }

unsigned long lcm_ul(unsigned long a, unsigned long b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

}  // namespace qdc
