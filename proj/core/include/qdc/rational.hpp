#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qdc {

using Int = mpz_class;
using Rational = mpq_class;

// v_p(x) for nonzero x; returns `cap` when x == 0 (exhausted precision).
long int_valuation(const Int& x, unsigned long p, long cap);

Int pow_int(const Int& base, unsigned long e);
Int pow_ul(unsigned long base, unsigned long e);

// Parses "a/b" or "a" with optional sign; canonicalizes. Throws on garbage
// or zero denominator.
Rational rational_from_string(std::string_view s);
std::string rational_to_string(const Rational& r);

Int floor_rational(const Rational& r);

Int binomial(unsigned long n, unsigned long k);

// s(s-1)...(s-k+1)/k! for rational s, exact.
Rational binomial_rational(const Rational& s, unsigned long k);

unsigned long gcd_ul(unsigned long a, unsigned long b);
unsigned long lcm_ul(unsigned long a, unsigned long b);

}  // namespace qdc
