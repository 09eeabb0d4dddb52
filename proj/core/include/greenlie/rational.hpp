#ifndef GREENLIE_RATIONAL_HPP
#define GREENLIE_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace greenlie {

/// Exact rational scalar. GMP keeps the canonical form: gcd(num, den) = 1, den > 0.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "a/b" or "a" (optional sign, decimal digits). Rejects b = 0 and malformed input.
Rational parse_rational(std::string_view text);

/// Renders in canonical form: "a" when the denominator is 1, "a/b" otherwise.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

} // namespace greenlie

#endif
