#include "regext/module_data.hpp"

namespace regext {

ModuleData analyze(const GradedModulePresentation& m) {
  FreeResolution res = minimal_resolution(m);
  GradedModulePresentation pres =
      res.maps.empty() ? GradedModulePresentation::free(res.ring, res.modules[0]) : GradedModulePresentation(res.maps[0]);
  BettiTable betti(res);
  HilbertData hilbert(betti, m.ring().nvars());
  ModuleInvariants inv = invariants(res);
  return {std::move(pres), std::move(res), std::move(betti), std::move(hilbert), inv};
}

}  // namespace regext
