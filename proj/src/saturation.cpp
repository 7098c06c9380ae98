#include "regext/saturation.hpp"

#include <algorithm>

#include "regext/resolution.hpp"
#include "regext/strand.hpp"

namespace regext {

long long Saturation::h0_length() const {
  long long s = 0;
  for (const auto& [t, v] : h0_dims) s += v;
  return s;
}

Saturation saturate_h0(const GradedModulePresentation& m, int reg_bound) {
  GradedModulePresentation cur = minimize(m);
  if (cur.gens().is_zero()) return {{}, cur, cur};
  const int lo = *std::min_element(cur.gens().twists.begin(), cur.gens().twists.end());
  const GradedModulePresentation start = cur;
  for (;;) {
    ModuleGB gb = cur.relation_gb();
    std::vector<ModuleVector> socle;
    for (int t = lo; t <= reg_bound; ++t) {
      auto s = socle_in_degree(gb, t);
      socle.insert(socle.end(), s.begin(), s.end());
    }
    if (socle.empty()) break;
    cur = cur.with_relations(socle);
  }
  Saturation out{{}, minimize(cur), cur};
  ModuleGB before = start.relation_gb();
  ModuleGB after = cur.relation_gb();
  for (int t = lo; t <= reg_bound; ++t) {
    long long diff = count_standard_monomials(before, t) - count_standard_monomials(after, t);
    if (diff != 0) out.h0_dims[t] = diff;
  }
  return out;
}

Saturation saturate_h0(const GradedModulePresentation& m) {
  BettiTable b = betti_table(m);
  if (b.is_zero()) {
    auto mm = minimize(m);
    return {{}, mm, mm};
  }
  return saturate_h0(m, b.reg());
}

}  // namespace regext
