#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regext/polynomial.hpp"

namespace regext {

/// F = ⊕_j R(-a_j); generator j sits in degree twists[j]. Empty list is the zero module.
struct GradedFreeModule {
  std::vector<int> twists;

  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<int> t) : twists(std::move(t)) {}

  int rank() const { return static_cast<int>(twists.size()); }
  bool is_zero() const { return twists.empty(); }
  /// Dual module Hom(F, R): twists negated.
  GradedFreeModule dual() const;
  GradedFreeModule shifted(int s) const;
  /// dim_k F_t.
  long long dim_in_degree(int nvars, int t) const;

  bool operator==(const GradedFreeModule& o) const { return twists == o.twists; }
};

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b);

/// One term c * x^a * e_comp of a free-module element.
struct VecTerm {
  Monomial mon;
  std::uint32_t comp;
  Coeff coef;
  bool operator==(const VecTerm& o) const { return comp == o.comp && coef == o.coef && mon == o.mon; }
};

/// Position-over-term: lower component index is larger, then degrevlex.
inline int term_cmp(const Monomial& am, std::uint32_t ac, const Monomial& bm, std::uint32_t bc) {
  if (ac != bc) return ac < bc ? 1 : -1;
  return degrevlex_cmp(am, bm);
}
inline int term_cmp(const VecTerm& a, const VecTerm& b) { return term_cmp(a.mon, a.comp, b.mon, b.comp); }

/// Sparse element of a free module, terms strictly decreasing in the module order.
class ModuleVector {
 public:
  ModuleVector() = default;
  static ModuleVector from_terms(const PrimeField& f, std::vector<VecTerm> terms);
  static ModuleVector unit(int nvars, std::uint32_t comp);
  static ModuleVector from_polynomial(const Polynomial& p, std::uint32_t comp);
  /// Trusted constructor: terms already sorted, combined and nonzero.
  static ModuleVector from_sorted(std::vector<VecTerm> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<VecTerm>& terms() const { return terms_; }
  std::vector<VecTerm>& mutable_terms() { return terms_; }
  const VecTerm& lead() const { return terms_.front(); }

  Polynomial component(std::uint32_t comp) const;
  /// Homogeneous degree w.r.t. the ambient twists, nullopt if zero or inhomogeneous.
  std::optional<int> degree(const GradedFreeModule& ambient) const;
  bool is_homogeneous(const GradedFreeModule& ambient) const;
  /// Largest component index present plus one (0 for the zero vector).
  std::uint32_t comp_bound() const;

  bool operator==(const ModuleVector& o) const { return terms_ == o.terms_; }

 private:
  std::vector<VecTerm> terms_;
};

ModuleVector add(const PrimeField& f, const ModuleVector& a, const ModuleVector& b);
ModuleVector sub(const PrimeField& f, const ModuleVector& a, const ModuleVector& b);
ModuleVector scale(const PrimeField& f, const ModuleVector& a, Coeff c);
/// a + c * m * b, computed in one merge pass.
ModuleVector add_mul(const PrimeField& f, const ModuleVector& a, Coeff c, const Monomial& m,
                     const ModuleVector& b);
ModuleVector mul_poly(const PrimeField& f, const ModuleVector& a, const Polynomial& p);
/// Renumbers components: comp -> comp + offset.
ModuleVector shift_components(const ModuleVector& a, int offset);
/// Keeps components in [lo, hi), renumbered to start at 0.
ModuleVector restrict_components(const ModuleVector& a, std::uint32_t lo, std::uint32_t hi);
/// Makes the lead coefficient 1.
ModuleVector make_monic(const PrimeField& f, const ModuleVector& a);

std::string to_string(const ModuleVector& v, const PolynomialRing& ring);

/// Homogeneous map source -> target, stored as one column (element of target) per source generator.
/// Entry (i, j) has degree source.twists[j] - target.twists[i].
class GradedMap {
 public:
  GradedMap(PolynomialRing ring, GradedFreeModule source, GradedFreeModule target,
            std::vector<ModuleVector> columns);
  static GradedMap zero(PolynomialRing ring, GradedFreeModule source, GradedFreeModule target);
  static GradedMap identity(PolynomialRing ring, GradedFreeModule module);
  /// Builds from an entry matrix (rows = target generators).
  static GradedMap from_entries(PolynomialRing ring, GradedFreeModule source, GradedFreeModule target,
                                const std::vector<std::vector<Polynomial>>& rows);

  const PolynomialRing& ring() const { return ring_; }
  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  const std::vector<ModuleVector>& columns() const { return columns_; }
  const ModuleVector& column(int j) const { return columns_[j]; }

  Polynomial entry(int i, int j) const { return columns_[j].component(i); }
  bool is_zero() const;
  bool has_unit_entry() const;

  bool operator==(const GradedMap& o) const {
    return source_ == o.source_ && target_ == o.target_ && columns_ == o.columns_;
  }

 private:
  PolynomialRing ring_;
  GradedFreeModule source_;
  GradedFreeModule target_;
  std::vector<ModuleVector> columns_;
};

bool map_is_homogeneous(const GradedMap& f);

/// f ∘ g; requires f.source == g.target. Throws std::invalid_argument on shape mismatch.
GradedMap compose(const GradedMap& f, const GradedMap& g);

/// Hom(-, R) of a map: source and target dualized and swapped, matrix transposed.
GradedMap dual_map(const GradedMap& f);

/// Applies f to an element of f.source.
ModuleVector apply(const GradedMap& f, const ModuleVector& v);

}  // namespace regext
