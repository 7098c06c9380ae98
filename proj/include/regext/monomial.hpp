#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace regext {

inline constexpr int kMaxVars = 8;

/// Exponent vector of a monomial in at most kMaxVars variables, with the
/// total degree cached. Unused trailing slots are always zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(int nvars, std::span<const int> exponents);

  static Monomial variable(int nvars, int index);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](int i) const { return exp_[i]; }
  std::span<const std::int32_t> exponents() const { return {exp_.data(), static_cast<size_t>(nvars_)}; }

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; requires o | *this.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return nvars_ == o.nvars_ && exp_ == o.exp_; }

  std::size_t hash() const;

 private:
  std::array<std::int32_t, kMaxVars> exp_{};
  std::int32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

/// Degree reverse lexicographic comparison: >0 if a > b, <0 if a < b, 0 if equal.
/// Throws std::invalid_argument on mismatched variable counts.
int monomial_compare(const Monomial& a, const Monomial& b);

/// Fast path without the variable-count check; callers guarantee a common ring.
inline int degrevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

/// All monomials of the given degree in nvars variables, in decreasing degrevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

std::string to_string(const Monomial& m, std::span<const std::string> names);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace regext
