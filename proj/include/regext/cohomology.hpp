#pragma once

#include <map>
#include <vector>

#include "regext/module_data.hpp"

namespace regext {

/// Ext^i as a graded module; `against_ring` tells whether the second argument is R itself.
struct ExtModule {
  int index = 0;
  bool against_ring = true;
  GradedModulePresentation presentation;
};

/// H^i(C) = ker(C^i -> C^{i+1}) / im(C^{i-1} -> C^i) as a minimized presentation.
/// `incoming` may be null (nothing maps in), `outgoing` may be null (the next term is zero).
GradedModulePresentation cohomology_at(const PolynomialRing& ring, const GradedFreeModule& term,
                                       const GradedMap* incoming, const GradedMap* outgoing);

ExtModule ext_into_ring(const FreeResolution& res, int i);
ExtModule ext_into_ring(const GradedModulePresentation& m, int i);

/// Total Hom complex Hom(F^M, F^N) with C^i = ⊕_{p-q=i} Hom(F^M_p, F^N_q).
struct HomComplex {
  PolynomialRing ring;
  int low = 0;  // cohomological index of terms[0]
  std::vector<GradedFreeModule> terms;
  std::vector<GradedMap> maps;  // maps[k]: terms[k] -> terms[k+1]
};

HomComplex hom_complex(const FreeResolution& fm, const FreeResolution& fn);

ExtModule ext_module(const FreeResolution& fm, const FreeResolution& fn, int i);
ExtModule ext_module(const GradedModulePresentation& m, const GradedModulePresentation& n, int i);

/// dims(i, mu) = dim_k H^i_m(M)_mu for 0 <= i <= n and lo <= mu <= hi.
struct LocalCohomologyTable {
  int lo = 0, hi = -1;
  std::map<std::pair<int, int>, long long> dims;  // nonzero entries only

  long long operator()(int i, int mu) const {
    auto it = dims.find({i, mu});
    return it == dims.end() ? 0 : it->second;
  }
};

/// Uses dim H^i_m(M)_mu = dim Ext^{n-i}(M,R)_{-mu-n}; `exts[j]` must be Ext^j(M,R) for j = 0..n.
LocalCohomologyTable local_cohomology_dims(const std::vector<ModuleData>& exts, int nvars, int lo, int hi);
LocalCohomologyTable local_cohomology_dims(const GradedModulePresentation& m, int lo, int hi);

/// All Ext^j(M,R), j = 0..n, analyzed.
std::vector<ModuleData> ext_into_ring_all(const FreeResolution& res);

/// M_{>=t}.
GradedModulePresentation truncate(const GradedModulePresentation& m, int t);

}  // namespace regext
