#include "regext/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace regext {

PolynomialRing::PolynomialRing(std::uint32_t p, std::vector<std::string> names)
    : field_(p), names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("polynomial ring needs at least one variable");
  if (static_cast<int>(names_.size()) > kMaxVars) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
  }
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("variable names must be distinct");
}

PolynomialRing PolynomialRing::standard(int n, std::uint32_t p) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(n <= 4 ? small[i] : "x" + std::to_string(i + 1));
  return PolynomialRing(p, std::move(names));
}

std::optional<int> PolynomialRing::variable_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Polynomial Polynomial::monomial(const Monomial& m, Coeff c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(const PrimeField& f, std::vector<PolyTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const PolyTerm& a, const PolyTerm& b) { return degrevlex_cmp(a.mon, b.mon) > 0; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coef = f.add(p.terms_.back().coef, t.coef);
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mon.degree() != terms_.front().mon.degree()) return false;
  }
  return true;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().mon.degree();
}

namespace {
Polynomial merge(const PrimeField& f, const Polynomial& a, const Polynomial& b, bool negate_b) {
  std::vector<PolyTerm> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    int c = ia == ea ? -1 : ib == eb ? 1 : degrevlex_cmp(ia->mon, ib->mon);
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back({ib->mon, negate_b ? f.neg(ib->coef) : ib->coef});
      ++ib;
    } else {
      Coeff s = negate_b ? f.sub(ia->coef, ib->coef) : f.add(ia->coef, ib->coef);
      if (s != 0) out.push_back({ia->mon, s});
      ++ia;
      ++ib;
    }
  }
  return Polynomial::from_terms(f, std::move(out));
}
}  // namespace

Polynomial add(const PrimeField& f, const Polynomial& a, const Polynomial& b) { return merge(f, a, b, false); }
Polynomial sub(const PrimeField& f, const Polynomial& a, const Polynomial& b) { return merge(f, a, b, true); }

Polynomial scale(const PrimeField& f, const Polynomial& a, Coeff c) {
  std::vector<PolyTerm> out;
  if (c == 0) return {};
  for (const auto& t : a.terms()) out.push_back({t.mon, f.mul(t.coef, c)});
  return Polynomial::from_terms(f, std::move(out));
}

Polynomial mul_term(const PrimeField& f, const Polynomial& a, const Monomial& m, Coeff c) {
  std::vector<PolyTerm> out;
  if (c == 0) return {};
  for (const auto& t : a.terms()) out.push_back({t.mon * m, f.mul(t.coef, c)});
  return Polynomial::from_terms(f, std::move(out));
}

Polynomial mul(const PrimeField& f, const Polynomial& a, const Polynomial& b) {
  std::vector<PolyTerm> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) out.push_back({s.mon * t.mon, f.mul(s.coef, t.coef)});
  }
  return Polynomial::from_terms(f, std::move(out));
}

Polynomial pow(const PrimeField& f, const Polynomial& a, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (a.is_zero()) {
    if (e == 0) throw std::invalid_argument("0^0 has no ring context");
    return {};
  }
  Polynomial result = Polynomial::monomial(Monomial(a.lead().mon.nvars()), 1);
  Polynomial base = a;
  while (e > 0) {
    if (e & 1) result = mul(f, result, base);
    e >>= 1;
    if (e > 0) base = mul(f, base, base);
  }
  return result;
}

Polynomial substitute(const PrimeField& f, const Polynomial& a, const std::vector<Polynomial>& images,
                      int target_nvars) {
  Polynomial result;
  Polynomial one = Polynomial::monomial(Monomial(target_nvars), 1);
  for (const auto& t : a.terms()) {
    Polynomial term = scale(f, one, t.coef);
    for (int i = 0; i < t.mon.nvars(); ++i) {
      if (t.mon[i] > 0) term = mul(f, term, pow(f, images[i], t.mon[i]));
    }
    result = add(f, result, term);
  }
  return result;
}

std::string to_string(const Polynomial& p, const PolynomialRing& ring) {
  if (p.is_zero()) return "0";
  std::string s;
  const auto& f = ring.field();
  for (const auto& t : p.terms()) {
    std::int64_t c = f.to_signed(t.coef);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::int64_t a = c < 0 ? -c : c;
    if (t.mon.is_one()) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      s += to_string(t.mon, ring.names());
    }
  }
  return s;
}

}  // namespace regext
