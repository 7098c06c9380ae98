#pragma once

#include <vector>

#include "regext/free_module.hpp"

namespace regext {

/// Reduced Gröbner basis of a homogeneous submodule of a graded free module under
/// position-over-term degrevlex (lower component index dominates).
class ModuleGB {
 public:
  ModuleGB(PolynomialRing ring, GradedFreeModule ambient, std::vector<ModuleVector> basis);

  const PolynomialRing& ring() const { return ring_; }
  const GradedFreeModule& ambient() const { return ambient_; }
  const std::vector<ModuleVector>& basis() const { return basis_; }

  /// Lead monomials of the basis elements living in component c.
  const std::vector<Monomial>& lead_monomials(std::uint32_t c) const { return leads_[c]; }

  /// Remainder of v: no term divisible by a lead term of the basis.
  ModuleVector normal_form(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const { return normal_form(v).is_zero(); }
  /// True when the monomial-position x^a e_c is not a lead term multiple.
  bool is_standard(const Monomial& m, std::uint32_t c) const;

 private:
  PolynomialRing ring_;
  GradedFreeModule ambient_;
  std::vector<ModuleVector> basis_;
  std::vector<std::vector<Monomial>> leads_;
  std::vector<std::vector<int>> by_comp_;
};

/// Buchberger with the normal selection strategy. Throws std::invalid_argument on inhomogeneous input.
ModuleGB groebner_basis(const PolynomialRing& ring, const GradedFreeModule& ambient,
                        const std::vector<ModuleVector>& generators);

ModuleVector normal_form(const ModuleVector& v, const ModuleGB& gb);

/// A minimal homogeneous generating subset of the submodule spanned by the input,
/// ordered by degree. Zero inputs are dropped.
std::vector<ModuleVector> minimal_generators(const PolynomialRing& ring, const GradedFreeModule& ambient,
                                             const std::vector<ModuleVector>& generators);

/// Minimal generators of ker(f), as the columns of a map into f.source.
GradedMap syzygy_module(const GradedMap& f);

/// Generators (possibly non-minimal) of f^{-1}(W) ⊆ f.source for W ⊆ f.target spanned by `sub`.
std::vector<ModuleVector> preimage(const GradedMap& f, const std::vector<ModuleVector>& sub);

/// M = coker(rels), where rels maps into the free module of generators.
class GradedModulePresentation {
 public:
  explicit GradedModulePresentation(GradedMap rels);
  /// The free module on the given generator degrees.
  static GradedModulePresentation free(const PolynomialRing& ring, GradedFreeModule gens);
  /// R/I shifted so its generator sits in degree `twist`.
  static GradedModulePresentation cyclic(const PolynomialRing& ring, const std::vector<Polynomial>& ideal,
                                         int twist = 0);
  /// Presentation with the relations given as vectors in the generator module.
  static GradedModulePresentation from_relations(const PolynomialRing& ring, GradedFreeModule gens,
                                                 const std::vector<ModuleVector>& relations);

  const PolynomialRing& ring() const { return rels_.ring(); }
  const GradedFreeModule& gens() const { return rels_.target(); }
  const GradedMap& rels() const { return rels_; }
  const std::vector<ModuleVector>& relation_vectors() const { return rels_.columns(); }

  /// M(-s): every generator degree raised by s.
  GradedModulePresentation shifted(int s) const;
  /// M ⊕ (extra relations).
  GradedModulePresentation with_relations(const std::vector<ModuleVector>& extra) const;

  ModuleGB relation_gb() const;

  bool operator==(const GradedModulePresentation& o) const {
    return ring() == o.ring() && rels_ == o.rels_;
  }

 private:
  GradedMap rels_;
};

/// Removes generators killed by unit relations and replaces the relations with a minimal set.
/// The result has minimal generators and relations contained in m·F.
GradedModulePresentation minimize(const GradedModulePresentation& m);

}  // namespace regext
