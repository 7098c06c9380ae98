#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regext/field.hpp"
#include "regext/monomial.hpp"

namespace regext {

/// The standard graded ring F_p[x_1..x_n].
class PolynomialRing {
 public:
  PolynomialRing(std::uint32_t p, std::vector<std::string> names);
  /// Variables named x1..xn (or x,y,z,w when n <= 4).
  static PolynomialRing standard(int n, std::uint32_t p = PrimeField::kDefaultPrime);

  const PrimeField& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> variable_index(const std::string& name) const;

  bool operator==(const PolynomialRing& o) const {
    return field_ == o.field_ && names_ == o.names_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
};

struct PolyTerm {
  Monomial mon;
  Coeff coef;
  bool operator==(const PolyTerm& o) const { return coef == o.coef && mon == o.mon; }
};

/// Sparse polynomial; terms strictly decreasing in degrevlex, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial monomial(const Monomial& m, Coeff c);
  /// Builds from unsorted terms, combining duplicates.
  static Polynomial from_terms(const PrimeField& f, std::vector<PolyTerm> terms);
  /// Trusted constructor: terms already sorted, combined and nonzero.
  static Polynomial from_sorted(std::vector<PolyTerm> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  const PolyTerm& lead() const { return terms_.front(); }
  std::size_t size() const { return terms_.size(); }

  bool is_homogeneous() const;
  /// Degree of the lead term; nullopt for zero.
  std::optional<int> degree() const;
  /// Nonzero constant (degree-0) polynomial.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mon.is_one(); }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  friend Polynomial add(const PrimeField& f, const Polynomial& a, const Polynomial& b);
  friend Polynomial sub(const PrimeField& f, const Polynomial& a, const Polynomial& b);

 private:
  std::vector<PolyTerm> terms_;
};

Polynomial add(const PrimeField& f, const Polynomial& a, const Polynomial& b);
Polynomial sub(const PrimeField& f, const Polynomial& a, const Polynomial& b);
Polynomial scale(const PrimeField& f, const Polynomial& a, Coeff c);
Polynomial mul(const PrimeField& f, const Polynomial& a, const Polynomial& b);
Polynomial mul_term(const PrimeField& f, const Polynomial& a, const Monomial& m, Coeff c);
Polynomial pow(const PrimeField& f, const Polynomial& a, int e);

/// Substitutes images[i] for variable i; the result lives in the ring of the images.
Polynomial substitute(const PrimeField& f, const Polynomial& a, const std::vector<Polynomial>& images,
                      int target_nvars);

std::string to_string(const Polynomial& p, const PolynomialRing& ring);

}  // namespace regext
