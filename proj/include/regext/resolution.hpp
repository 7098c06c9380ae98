#pragma once

#include <climits>
#include <map>
#include <optional>
#include <vector>

#include "regext/groebner.hpp"

namespace regext {

/// Sentinels for reg(0) = -inf and indeg(0) = +inf. Far from INT_MIN/INT_MAX so that
/// small shifts cannot overflow.
inline constexpr int kNegInf = INT_MIN / 4;
inline constexpr int kPosInf = INT_MAX / 4;

/// Minimal graded free resolution 0 <- F_0 <- F_1 <- ... <- F_pd <- 0.
struct FreeResolution {
  PolynomialRing ring;
  std::vector<GradedFreeModule> modules;  // F_0 .. F_pd; F_0 empty for the zero module
  std::vector<GradedMap> maps;            // maps[i] = d_{i+1}: F_{i+1} -> F_i

  int length() const { return static_cast<int>(maps.size()); }
};

FreeResolution minimal_resolution(const GradedModulePresentation& m);

/// Graded Betti numbers beta_{i,j} = dim_k Tor_i(M,k)_j.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(const FreeResolution& res);

  long long operator()(int i, int j) const;
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

  bool is_zero() const { return entries_.empty(); }
  /// Largest i with a nonzero entry; -1 for the zero module.
  int pd() const { return pd_; }
  long long total(int i) const;
  /// Smallest / largest shift in homological degree i; nullopt when that row is empty.
  std::optional<int> min_shift(int i) const;
  std::optional<int> max_shift(int i) const;
  int reg() const;
  int indeg() const;

 private:
  std::map<std::pair<int, int>, long long> entries_;
  int pd_ = -1;
};

BettiTable betti_table(const GradedModulePresentation& m);

/// Hom(-, R) of a resolution: C^i = F_i^*, maps[i]: C^i -> C^{i+1} the transpose of d_{i+1}.
struct CochainComplex {
  PolynomialRing ring;
  std::vector<GradedFreeModule> terms;
  std::vector<GradedMap> maps;
};

CochainComplex dual_complex(const FreeResolution& res);

struct ModuleInvariants {
  int reg = kNegInf;
  int indeg = kPosInf;
  int pd = -1;
  int depth = kPosInf;
  int dim = -1;  // -1 for the zero module
  long long mu = 0;
  int gen = kNegInf;
};

ModuleInvariants invariants(const GradedModulePresentation& m);
ModuleInvariants invariants(const FreeResolution& res);

}  // namespace regext
