#pragma once

#include "regext/hilbert.hpp"
#include "regext/resolution.hpp"

namespace regext {

/// A minimized presentation together with everything read off its minimal resolution.
struct ModuleData {
  GradedModulePresentation pres;
  FreeResolution res;
  BettiTable betti;
  HilbertData hilbert;
  ModuleInvariants inv;

  bool is_zero() const { return betti.is_zero(); }
  int nvars() const { return pres.ring().nvars(); }
  /// H_M(t).
  long long h(long long t) const { return static_cast<long long>(hilbert.function(t)); }
};

ModuleData analyze(const GradedModulePresentation& m);

}  // namespace regext
