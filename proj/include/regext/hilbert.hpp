#pragma once

#include <functional>
#include <map>
#include <vector>

#include "regext/bigint.hpp"
#include "regext/resolution.hpp"

namespace regext {

/// Integer-valued polynomial stored in the basis C(t+k, k), k = 0..deg.
/// In this basis the difference operator is a coefficient shift.
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<BigInt> coeffs);
  /// Interpolates a function known to agree with a polynomial of degree <= max_degree.
  static HilbertPolynomial interpolate(int max_degree, const std::function<BigInt(long long)>& values);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt operator()(long long t) const;
  /// i-fold difference P(t) - P(t-1).
  HilbertPolynomial delta(int i = 1) const;
  /// t -> P(t + s).
  HilbertPolynomial shifted(long long s) const;

  bool operator==(const HilbertPolynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<BigInt> coeffs_;
};

/// Hilbert series numerator over (1-z)^n, Hilbert polynomial and coefficients.
class HilbertData {
 public:
  /// Numerator K(z) = sum_j K_j z^j of H_M(z) = K(z)/(1-z)^n.
  HilbertData(std::map<int, long long> numerator, int nvars);
  HilbertData(const BettiTable& betti, int nvars);

  int nvars() const { return nvars_; }
  const std::map<int, long long>& numerator() const { return numerator_; }
  /// Numerator after cancelling (1-z) factors: H_M(z) = Q(z)/(1-z)^d.
  const std::map<int, BigInt>& reduced_numerator() const { return reduced_; }
  /// Krull dimension; -1 for the zero module.
  int dim() const { return dim_; }
  const HilbertPolynomial& poly() const { return poly_; }
  /// e_0..e_{d-1} with P(t) = sum_i (-1)^i e_i C(t+d-1-i, d-1-i).
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  /// e_0 when d >= 1, length when d = 0, 0 for the zero module.
  const BigInt& degree() const { return degree_; }

  /// H_M(t) read off the series.
  BigInt function(long long t) const;
  /// Data of the shifted module whose generators sit s degrees higher.
  HilbertData shifted(int s) const;

 private:
  int nvars_;
  std::map<int, long long> numerator_;
  std::map<int, BigInt> reduced_;
  int dim_ = -1;
  HilbertPolynomial poly_;
  std::vector<BigInt> coeffs_;
  BigInt degree_ = 0;
};

HilbertData hilbert_poly(const GradedModulePresentation& m);

/// i-fold difference of P.
inline HilbertPolynomial delta_poly(const HilbertPolynomial& p, int i) { return p.delta(i); }

}  // namespace regext
