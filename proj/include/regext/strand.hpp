#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "regext/groebner.hpp"

namespace regext {

/// Dense matrix over F_p, row-major.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rank(const PrimeField& f) const;
  /// Basis of {x : A x = 0}.
  std::vector<std::vector<Coeff>> nullspace(const PrimeField& f) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Coeff> data_;
};

/// The degree-t piece of F/U, with the standard monomials of a Gröbner basis of U as basis.
class GradedPiece {
 public:
  GradedPiece(const ModuleGB& gb, int t);

  int degree() const { return degree_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<std::pair<Monomial, std::uint32_t>>& basis() const { return basis_; }

  /// Coordinates of a homogeneous degree-t vector (reduced first).
  std::vector<Coeff> coordinates(const ModuleVector& v) const;
  ModuleVector element(const std::vector<Coeff>& coords) const;

 private:
  struct Key {
    Monomial mon;
    std::uint32_t comp;
    bool operator==(const Key& o) const { return comp == o.comp && mon == o.mon; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.mon.hash() * 31 + k.comp; }
  };

  const ModuleGB* gb_;
  int degree_;
  std::vector<std::pair<Monomial, std::uint32_t>> basis_;
  std::unordered_map<Key, std::size_t, KeyHash> index_;
};

/// dim_k (F/U)_t by counting standard monomials.
long long count_standard_monomials(const ModuleGB& gb, int t);

/// H_M(t) = dim_k M_t.
long long hilbert_function(const GradedModulePresentation& m, int t);

/// dim_k of the degree-t piece of ker(f) and of im(f), by graded linear algebra on F_p.
struct StrandRanks {
  long long source_dim = 0;
  long long rank = 0;
  long long kernel_dim() const { return source_dim - rank; }
};
StrandRanks strand_ranks(const GradedMap& f, int t);

/// Socle (0 :_M m) in degree t, as vectors in the generator module.
std::vector<ModuleVector> socle_in_degree(const ModuleGB& relations, int t);

}  // namespace regext
