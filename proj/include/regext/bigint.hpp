#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace regext {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient with the convention C(a,b) = 0 when a < b or b < 0 (so also for a < 0).
BigInt binomial(long long a, long long b);

/// Polynomial binomial a(a-1)...(a-b+1)/b! for any integer a and b >= 0; 0 when b < 0.
BigInt poly_binomial(long long a, long long b);

/// base^exponent for a nonnegative exponent given as a possibly huge integer.
/// Only bases -1, 0, 1 are allowed to have exponents that do not fit in 32 bits.
BigInt power(const BigInt& base, const BigInt& exponent);

BigInt pow2(long long e);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace regext
