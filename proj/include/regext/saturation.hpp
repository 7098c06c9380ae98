#pragma once

#include <map>

#include "regext/groebner.hpp"

namespace regext {

/// H^0_m(M) by graded dimensions, and Mbar = M / H^0_m(M).
struct Saturation {
  std::map<int, long long> h0_dims;  // nonzero entries only
  GradedModulePresentation mbar;
  /// Mbar on the generators of minimize(M): the relations of M plus lifts of H^0_m(M).
  GradedModulePresentation lifted;

  bool h0_is_zero() const { return h0_dims.empty(); }
  long long h0_length() const;
  /// Requires a nonzero H^0.
  int h0_indeg() const { return h0_dims.begin()->first; }
  int h0_end() const { return h0_dims.rbegin()->first; }
};

/// Iterates the socle (0 :_M m) until it vanishes. Every socle degree lies in
/// [min generator degree, reg_bound], where reg_bound >= end(H^0_m(M)).
Saturation saturate_h0(const GradedModulePresentation& m, int reg_bound);

/// Uses reg(M) from a minimal resolution as the bound.
Saturation saturate_h0(const GradedModulePresentation& m);

}  // namespace regext
