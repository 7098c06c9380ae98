#include "regext/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace regext {

Monomial::Monomial(int nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported number of variables");
}

Monomial::Monomial(int nvars, std::span<const int> exponents) : Monomial(nvars) {
  if (static_cast<int>(exponents.size()) != nvars) throw std::invalid_argument("exponent length mismatch");
  std::int64_t total = 0;
  for (int i = 0; i < nvars; ++i) {
    if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
    exp_[i] = exponents[i];
    total += exponents[i];
  }
  if (total > std::numeric_limits<std::int32_t>::max() / 2) throw std::overflow_error("monomial degree overflow");
  degree_ = static_cast<std::int32_t>(total);
}

Monomial Monomial::variable(int nvars, int index) {
  Monomial m(nvars);
  m.exp_[index] = 1;
  m.degree_ = 1;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (int i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  if (degree_ > std::numeric_limits<std::int32_t>::max() / 2 - o.degree_) {
    throw std::overflow_error("monomial degree overflow");
  }
  for (int i = 0; i < nvars_; ++i) r.exp_[i] += o.exp_[i];
  r.degree_ += o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (int i = 0; i < nvars_; ++i) r.exp_[i] -= o.exp_[i];
  r.degree_ -= o.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(*this);
  r.degree_ = 0;
  for (int i = 0; i < nvars_; ++i) {
    r.exp_[i] = std::max(exp_[i], o.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r(*this);
  r.degree_ = 0;
  for (int i = 0; i < nvars_; ++i) {
    r.exp_[i] = std::min(exp_[i], o.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < nvars_; ++i) {
    if (exp_[i] != 0 && o.exp_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = nvars_;
  for (int i = 0; i < nvars_; ++i) h = h * 1000003u + static_cast<std::size_t>(exp_[i]);
  return h;
}

int monomial_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomials from different rings");
  return degrevlex_cmp(a, b);
}

namespace {
void enumerate(int nvars, int pos, int remaining, std::vector<int>& cur, std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[pos] = remaining;
    out.emplace_back(nvars, cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    enumerate(nvars, pos + 1, remaining - e, cur, out);
  }
}
}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> cur(nvars, 0);
  enumerate(nvars, 0, degree, cur, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) > 0; });
  return out;
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace regext
