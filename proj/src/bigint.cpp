#include "regext/bigint.hpp"

#include <stdexcept>

namespace regext {

BigInt poly_binomial(long long a, long long b) {
  if (b < 0) return 0;
  BigInt num = 1, den = 1;
  for (long long i = 0; i < b; ++i) {
    num *= BigInt(a - i);
    den *= BigInt(i + 1);
  }
  return num / den;
}

BigInt binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  return poly_binomial(a, b);
}

BigInt power(const BigInt& base, const BigInt& exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent == 0) return 1;
  if (base == 0 || base == 1) return base;
  if (base == -1) return (exponent % 2 == 0) ? BigInt(1) : BigInt(-1);
  if (exponent > BigInt(1) << 24) throw std::overflow_error("exponent too large to materialize");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

BigInt pow2(long long e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  return BigInt(1) << static_cast<unsigned>(e);
}

}  // namespace regext
