#include "regext/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace regext {

GradedModulePresentation cohomology_at(const PolynomialRing& ring, const GradedFreeModule& term,
                                       const GradedMap* incoming, const GradedMap* outgoing) {
  if (term.is_zero()) return GradedModulePresentation::free(ring, GradedFreeModule());
  GradedMap kernel = outgoing ? syzygy_module(*outgoing) : GradedMap::identity(ring, term);
  if (kernel.source().is_zero()) return GradedModulePresentation::free(ring, GradedFreeModule());
  std::vector<ModuleVector> image;
  if (incoming) {
    for (const auto& c : incoming->columns())
      if (!c.is_zero()) image.push_back(c);
  }
  // relations among the kernel generators modulo the image
  std::vector<ModuleVector> rels = preimage(kernel, image);
  return minimize(GradedModulePresentation::from_relations(ring, kernel.source(), rels));
}

ExtModule ext_into_ring(const FreeResolution& res, int i) {
  ExtModule e{i, true, GradedModulePresentation::free(res.ring, GradedFreeModule())};
  const int len = static_cast<int>(res.modules.size());
  if (i < 0 || i >= len) return e;
  CochainComplex c = dual_complex(res);
  const GradedMap* in = i >= 1 ? &c.maps[i - 1] : nullptr;
  const GradedMap* out = i < static_cast<int>(c.maps.size()) ? &c.maps[i] : nullptr;
  e.presentation = cohomology_at(res.ring, c.terms[i], in, out);
  return e;
}

ExtModule ext_into_ring(const GradedModulePresentation& m, int i) { return ext_into_ring(minimal_resolution(m), i); }

std::vector<ModuleData> ext_into_ring_all(const FreeResolution& res) {
  std::vector<ModuleData> out;
  for (int j = 0; j <= res.ring.nvars(); ++j) out.push_back(analyze(ext_into_ring(res, j).presentation));
  return out;
}

namespace {

struct Block {
  int p, q;
  int offset;  // first component index inside the term
};

}  // namespace

HomComplex hom_complex(const FreeResolution& fm, const FreeResolution& fn) {
  const auto& ring = fm.ring;
  const auto& f = ring.field();
  const int P = static_cast<int>(fm.modules.size()) - 1;
  const int Q = static_cast<int>(fn.modules.size()) - 1;
  HomComplex hc{ring, -Q, {}, {}};
  std::vector<std::vector<Block>> blocks;
  for (int i = -Q; i <= P; ++i) {
    GradedFreeModule term;
    std::vector<Block> bl;
    for (int p = std::max(0, i); p <= P; ++p) {
      int q = p - i;
      if (q < 0 || q > Q) continue;
      bl.push_back({p, q, term.rank()});
      for (int a : fm.modules[p].twists)
        for (int b : fn.modules[q].twists) term.twists.push_back(b - a);
    }
    hc.terms.push_back(std::move(term));
    blocks.push_back(std::move(bl));
  }
  auto find_block = [&](int k, int p, int q) -> const Block* {
    for (const auto& b : blocks[k])
      if (b.p == p && b.q == q) return &b;
    return nullptr;
  };
  for (int k = 0; k + 1 < static_cast<int>(hc.terms.size()); ++k) {
    const int i = hc.low + k;
    const Coeff sign = (i % 2 == 0) ? f.neg(1) : 1;  // -(-1)^i
    std::vector<ModuleVector> cols;
    for (const auto& b : blocks[k]) {
      const int rl = fm.modules[b.p].rank(), rk = fn.modules[b.q].rank();
      const Block* down = b.q >= 1 ? find_block(k + 1, b.p, b.q - 1) : nullptr;
      const Block* right = b.p + 1 <= P ? find_block(k + 1, b.p + 1, b.q) : nullptr;
      for (int l = 0; l < rl; ++l) {
        for (int kk = 0; kk < rk; ++kk) {
          std::vector<VecTerm> terms;
          if (down) {
            const int rk2 = fn.modules[b.q - 1].rank();
            // ∂N ∘ E_{l,k} = sum_{k'} (∂N)_{k',k} E_{l,k'}
            for (const auto& t : fn.maps[b.q - 1].column(kk).terms())
              terms.push_back({t.mon, static_cast<std::uint32_t>(down->offset + l * rk2 + t.comp), t.coef});
          }
          if (right) {
            // E_{l,k} ∘ ∂M = sum_{l'} (∂M)_{l,l'} E_{l',k}
            const auto& dm = fm.maps[b.p];
            for (int lp = 0; lp < dm.source().rank(); ++lp) {
              for (const auto& t : dm.column(lp).terms()) {
                if (t.comp != static_cast<std::uint32_t>(l)) continue;
                terms.push_back({t.mon, static_cast<std::uint32_t>(right->offset + lp * rk + kk), f.mul(sign, t.coef)});
              }
            }
          }
          cols.push_back(ModuleVector::from_terms(f, std::move(terms)));
        }
      }
    }
    hc.maps.emplace_back(ring, hc.terms[k], hc.terms[k + 1], std::move(cols));
  }
  return hc;
}

ExtModule ext_module(const FreeResolution& fm, const FreeResolution& fn, int i) {
  ExtModule e{i, false, GradedModulePresentation::free(fm.ring, GradedFreeModule())};
  if (i < 0) return e;
  HomComplex hc = hom_complex(fm, fn);
  const int k = i - hc.low;
  if (k < 0 || k >= static_cast<int>(hc.terms.size())) return e;
  const GradedMap* in = k >= 1 ? &hc.maps[k - 1] : nullptr;
  const GradedMap* out = k < static_cast<int>(hc.maps.size()) ? &hc.maps[k] : nullptr;
  e.presentation = cohomology_at(fm.ring, hc.terms[k], in, out);
  return e;
}

ExtModule ext_module(const GradedModulePresentation& m, const GradedModulePresentation& n, int i) {
  return ext_module(minimal_resolution(m), minimal_resolution(n), i);
}

LocalCohomologyTable local_cohomology_dims(const std::vector<ModuleData>& exts, int nvars, int lo, int hi) {
  LocalCohomologyTable tab{lo, hi, {}};
  for (int i = 0; i <= nvars; ++i) {
    const ModuleData& e = exts.at(nvars - i);
    if (e.is_zero()) continue;
    for (int mu = lo; mu <= hi; ++mu) {
      long long v = e.h(-mu - nvars);
      if (v != 0) tab.dims[{i, mu}] = v;
    }
  }
  return tab;
}

LocalCohomologyTable local_cohomology_dims(const GradedModulePresentation& m, int lo, int hi) {
  return local_cohomology_dims(ext_into_ring_all(minimal_resolution(m)), m.ring().nvars(), lo, hi);
}

GradedModulePresentation truncate(const GradedModulePresentation& m, int t) {
  GradedModulePresentation mm = minimize(m);
  const auto& ring = mm.ring();
  const auto& tw = mm.gens().twists;
  if (tw.empty() || t <= *std::min_element(tw.begin(), tw.end())) return mm;
  const int n = ring.nvars();
  GradedFreeModule src;
  std::vector<ModuleVector> cols;
  for (std::uint32_t j = 0; j < tw.size(); ++j) {
    for (const auto& mon : monomials_of_degree(n, std::max(0, t - tw[j]))) {
      cols.push_back(ModuleVector::from_sorted({VecTerm{mon, j, 1}}));
      src.twists.push_back(std::max(t, tw[j]));
    }
  }
  GradedMap g(ring, src, mm.gens(), std::move(cols));
  std::vector<ModuleVector> rels = preimage(g, mm.relation_vectors());
  return minimize(GradedModulePresentation::from_relations(ring, src, rels));
}

}  // namespace regext
