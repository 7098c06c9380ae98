#include <algorithm>
#include <cstdio>
#include <random>

#include "regext/bounds.hpp"
#include "regext/cohomology.hpp"
#include "regext/module_data.hpp"

namespace regext {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

Polynomial sparse_form(const PolynomialRing& ring, int deg, Rng& rng, int max_terms, int first_var = 0) {
  const auto& f = ring.field();
  std::vector<Monomial> mons;
  for (const auto& m : monomials_of_degree(ring.nvars(), deg)) {
    bool ok = true;
    for (int v = 0; v < first_var; ++v) ok = ok && m[v] == 0;
    if (ok) mons.push_back(m);
  }
  if (mons.empty()) return {};
  std::vector<PolyTerm> terms;
  const int k = uniform(rng, 1, max_terms);
  for (int j = 0; j < k; ++j) {
    terms.push_back({mons[rng() % mons.size()], static_cast<Coeff>(1 + rng() % (f.p() - 1))});
  }
  return Polynomial::from_terms(f, std::move(terms));
}

Polynomial random_monomial(const PolynomialRing& ring, int deg, Rng& rng) {
  auto mons = monomials_of_degree(ring.nvars(), deg);
  return Polynomial::monomial(mons[rng() % mons.size()], 1);
}

GradedModulePresentation draw(const std::string& stratum, const PolynomialRing& ring, const CorpusParams& p,
                              Rng& rng) {
  const int n = ring.nvars();
  const int top = std::max(1, p.max_deg);
  std::vector<Polynomial> ideal;
  if (stratum == "monomial") {
    const int k = uniform(rng, 1, n + 1);
    for (int j = 0; j < k; ++j) ideal.push_back(random_monomial(ring, uniform(rng, 1, top), rng));
    return GradedModulePresentation::cyclic(ring, ideal);
  }
  if (stratum == "complete-intersection") {
    const int c = uniform(rng, 1, n);
    const bool powers = rng() % 2 == 0;
    for (int j = 0; j < c; ++j) {
      const int a = uniform(rng, 1, top);
      if (powers) ideal.push_back(pow(ring.field(), Polynomial::monomial(Monomial::variable(n, j), 1), a));
      else ideal.push_back(sparse_form(ring, a, rng, 4));
    }
    return GradedModulePresentation::cyclic(ring, ideal);
  }
  if (stratum == "finite-length") {
    if (rng() % 2 == 0) {
      ideal = {};
      for (const auto& m : monomials_of_degree(n, uniform(rng, 1, top))) ideal.push_back(Polynomial::monomial(m, 1));
    } else {
      for (int v = 0; v < n; ++v) {
        ideal.push_back(pow(ring.field(), Polynomial::monomial(Monomial::variable(n, v), 1), uniform(rng, 1, top)));
      }
    }
    return GradedModulePresentation::cyclic(ring, ideal);
  }
  if (stratum == "h0") {
    // x1 * m kills x1, so x1 spans a piece of H^0 whenever x1 survives
    for (int v = 0; v < n; ++v) {
      ideal.push_back(Polynomial::monomial(Monomial::variable(n, 0) * Monomial::variable(n, v), 1));
    }
    const int k = uniform(rng, 0, std::max(0, n - 2));
    for (int j = 0; j < k; ++j) {
      Polynomial g = sparse_form(ring, uniform(rng, 2, std::max(2, top)), rng, 3, 1);
      if (!g.is_zero()) ideal.push_back(g);
    }
    return GradedModulePresentation::cyclic(ring, ideal);
  }
  if (stratum == "truncation") {
    const int k = uniform(rng, 1, 2);
    for (int j = 0; j < k; ++j) ideal.push_back(sparse_form(ring, uniform(rng, 2, std::max(2, top)), rng, 3));
    auto m = GradedModulePresentation::cyclic(ring, ideal);
    return truncate(m, 1);
  }
  // random presentation
  const int g = uniform(rng, 1, std::max(1, p.max_gens));
  GradedFreeModule gens;
  for (int j = 0; j < g; ++j) gens.twists.push_back(uniform(rng, 0, 1));
  const int hi_twist = *std::max_element(gens.twists.begin(), gens.twists.end());
  const int r = uniform(rng, 1, std::max(1, p.max_rels));
  std::vector<ModuleVector> rels;
  const auto& f = ring.field();
  for (int k = 0; k < r; ++k) {
    const int deg = uniform(rng, hi_twist + 1, std::max(hi_twist + 1, top));
    std::vector<VecTerm> terms;
    for (int j = 0; j < g; ++j) {
      if (g > 1 && rng() % 3 == 0) continue;
      Polynomial e = sparse_form(ring, deg - gens.twists[j], rng, 2);
      for (const auto& t : e.terms()) terms.push_back({t.mon, static_cast<std::uint32_t>(j), t.coef});
    }
    ModuleVector v = ModuleVector::from_terms(f, std::move(terms));
    if (!v.is_zero()) rels.push_back(std::move(v));
  }
  return GradedModulePresentation::from_relations(ring, gens, rels);
}

}  // namespace

std::vector<CorpusInstance> generate_corpus(const CorpusParams& params, std::uint64_t seed) {
  static const std::vector<std::string> strata = {"monomial", "complete-intersection", "finite-length",
                                                  "h0",       "truncation",            "random"};
  std::vector<CorpusInstance> out;
  const int nspan = params.n_max - params.n_min + 1;
  for (int k = 0; k < params.count; ++k) {
    const std::string& stratum = strata[k % strata.size()];
    const int n = params.n_min + (k / static_cast<int>(strata.size())) % nspan;
    PolynomialRing ring = PolynomialRing::standard(n);
    Rng rng(instance_seed(seed, std::to_string(k)));
    char id[32];
    std::snprintf(id, sizeof id, "%04d", k);
    for (;;) {
      GradedModulePresentation m = minimize(draw(stratum, ring, params, rng));
      ModuleData md = analyze(m);
      if (md.is_zero()) continue;
      if (md.inv.reg - md.inv.indeg > params.max_reg_span) continue;
      long long total = 0;
      for (int i = 0; i <= md.betti.pd(); ++i) total += md.betti.total(i);
      if (total > params.max_betti_sum) continue;
      out.push_back({std::string(id) + "-" + stratum, stratum, std::move(m)});
      break;
    }
  }
  return out;
}

}  // namespace regext
