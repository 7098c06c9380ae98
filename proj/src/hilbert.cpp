#include "regext/hilbert.hpp"

#include <stdexcept>

namespace regext {

HilbertPolynomial::HilbertPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

HilbertPolynomial HilbertPolynomial::interpolate(int max_degree, const std::function<BigInt(long long)>& values) {
  // c_j = (Δ^j P)(-1), since C(t+k,k) vanishes at t = -1 for k >= 1
  std::vector<BigInt> samples;
  for (int m = 0; m <= max_degree; ++m) samples.push_back(values(-1 - m));
  std::vector<BigInt> c;
  for (int j = 0; j <= max_degree; ++j) {
    BigInt s = 0;
    for (int m = 0; m <= j; ++m) {
      BigInt term = binomial(j, m) * samples[m];
      if (m % 2) s -= term;
      else s += term;
    }
    c.push_back(s);
  }
  return HilbertPolynomial(std::move(c));
}

BigInt HilbertPolynomial::operator()(long long t) const {
  BigInt s = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) s += coeffs_[k] * poly_binomial(t + static_cast<long long>(k), static_cast<long long>(k));
  }
  return s;
}

HilbertPolynomial HilbertPolynomial::delta(int i) const {
  if (i < 0) throw std::invalid_argument("negative difference order");
  if (static_cast<std::size_t>(i) >= coeffs_.size()) return HilbertPolynomial();
  return HilbertPolynomial(std::vector<BigInt>(coeffs_.begin() + i, coeffs_.end()));
}

HilbertPolynomial HilbertPolynomial::shifted(long long s) const {
  if (is_zero()) return *this;
  return interpolate(degree(), [&](long long t) { return (*this)(t + s); });
}

HilbertData::HilbertData(const BettiTable& betti, int nvars) : HilbertData([&] {
  std::map<int, long long> k;
  for (const auto& [ij, v] : betti.entries()) {
    k[ij.second] += (ij.first % 2 ? -v : v);
  }
  return k;
}(), nvars) {}

HilbertData::HilbertData(std::map<int, long long> numerator, int nvars) : nvars_(nvars) {
  for (const auto& [j, v] : numerator)
    if (v != 0) numerator_[j] = v;
  if (numerator_.empty()) return;
  // divide by (1-z) while the value at z = 1 vanishes
  std::map<int, BigInt> q;
  for (const auto& [j, v] : numerator_) q[j] = v;
  int divisions = 0;
  for (;;) {
    BigInt at_one = 0;
    for (const auto& [j, v] : q) at_one += v;
    if (at_one != 0) break;
    // q(z) = (1-z) r(z): r_j = sum_{i<=j} q_i
    std::map<int, BigInt> r;
    BigInt run = 0;
    int lo = q.begin()->first, hi = q.rbegin()->first;
    for (int j = lo; j < hi; ++j) {
      auto it = q.find(j);
      if (it != q.end()) run += it->second;
      if (run != 0) r[j] = run;
    }
    q = std::move(r);
    ++divisions;
  }
  if (divisions > nvars) throw std::logic_error("Hilbert numerator vanishes to order above n");
  reduced_ = q;
  dim_ = nvars - divisions;
  for (const auto& [j, v] : q) degree_ += v;
  const int d = dim_;
  if (d == 0) return;
  poly_ = HilbertPolynomial::interpolate(d - 1, [&](long long t) {
    BigInt s = 0;
    for (const auto& [k, v] : reduced_) s += v * poly_binomial(t - k + d - 1, d - 1);
    return s;
  });
  const auto& c = poly_.coeffs();
  for (int i = 0; i < d; ++i) {
    std::size_t k = static_cast<std::size_t>(d - 1 - i);
    BigInt ck = k < c.size() ? c[k] : BigInt(0);
    coeffs_.push_back(i % 2 ? BigInt(-ck) : ck);
  }
}

BigInt HilbertData::function(long long t) const {
  BigInt s = 0;
  for (const auto& [j, v] : numerator_) s += BigInt(v) * binomial(t - j + nvars_ - 1, nvars_ - 1);
  return s;
}

HilbertData HilbertData::shifted(int s) const {
  std::map<int, long long> k;
  for (const auto& [j, v] : numerator_) k[j + s] = v;
  return HilbertData(std::move(k), nvars_);
}

HilbertData hilbert_poly(const GradedModulePresentation& m) {
  return HilbertData(betti_table(m), m.ring().nvars());
}

}  // namespace regext
