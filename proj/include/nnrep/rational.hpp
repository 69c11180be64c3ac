#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace nnrep {

// Exact scalar types for the whole library.  `Rational` is always stored in
// lowest terms with a positive denominator (the GMP backend canonicalizes on
// every operation), `Int` is an unbounded signed integer.  Expression
// templates are disabled so both behave as plain value types inside Eigen
// matrices.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                boost::multiprecision::et_off>;
using Int      = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                                boost::multiprecision::et_off>;

/// Number of bits in the binary expansion of |v|; bit_length(0) == 0.
inline int bit_length(const Int& v) {
    if (v == 0) return 0;
    Int a = abs(v);
    return static_cast<int>(boost::multiprecision::msb(a)) + 1;
}

/// Resolution of a rational a/b in lowest terms:
///   ceil(max(log2(|a| + 1), log2(b + 1)))
/// i.e. the number of bits needed for the larger of numerator magnitude and
/// denominator.  res_of_rational(0) == res_of_rational(1) == 1 and the value
/// is symmetric under negation.
inline int res_of_rational(const Rational& q) {
    const int num_bits = bit_length(Int(numerator(q)));
    const int den_bits = bit_length(Int(denominator(q)));
    return std::max(num_bits, den_bits);  // den >= 1, so this is >= 1
}

/// Parse a rational from a string.  Accepted forms: "p", "p/q" (q > 0) and
/// decimal literals like "0.57" or "-1.5", all parsed exactly (0.57 ->
/// 57/100).  Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" rendering ("p" when the denominator is 1).
std::string to_string(const Rational& q);

}  // namespace nnrep
