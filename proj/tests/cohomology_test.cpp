#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "regext/cohomology.hpp"
#include "regext/saturation.hpp"
#include "test_util.hpp"

using namespace regext;
using regext::testing::polys;

namespace {

GradedModulePresentation cyclic(const PolynomialRing& ring, std::vector<std::string> ideal, int twist = 0) {
  return GradedModulePresentation::cyclic(ring, polys(ring, ideal), twist);
}

GradedModulePresentation free_ring(const PolynomialRing& ring) {
  return GradedModulePresentation::free(ring, GradedFreeModule({0}));
}

GradedModulePresentation random_module(const PolynomialRing& ring, std::mt19937_64& rng) {
  const auto& f = ring.field();
  int g = 1 + static_cast<int>(rng() % 2);
  std::vector<int> tw;
  for (int j = 0; j < g; ++j) tw.push_back(static_cast<int>(rng() % 2));
  int r = 1 + static_cast<int>(rng() % 3);
  std::vector<ModuleVector> rels;
  for (int k = 0; k < r; ++k) {
    int deg = 2 + static_cast<int>(rng() % 2);
    ModuleVector v;
    for (int j = 0; j < g; ++j) {
      v = add(f, v, ModuleVector::from_polynomial(regext::testing::random_homogeneous(ring, deg - tw[j], rng, 2), j));
    }
    rels.push_back(v);
  }
  return GradedModulePresentation::from_relations(ring, GradedFreeModule(tw), rels);
}

}  // namespace

TEST(ExtIntoRing, FreeModule) {
  auto ring = PolynomialRing::standard(2);
  auto e0 = analyze(ext_into_ring(free_ring(ring), 0).presentation);
  EXPECT_EQ(e0.betti.entries(), (std::map<std::pair<int, int>, long long>{{{0, 0}, 1}}));
  EXPECT_TRUE(analyze(ext_into_ring(free_ring(ring), 1).presentation).is_zero());
}

TEST(ExtIntoRing, Hyperplane) {
  auto ring = PolynomialRing::standard(2);
  auto e1 = analyze(ext_into_ring(cyclic(ring, {"x"}), 1).presentation);
  for (int t = -4; t < 5; ++t) EXPECT_EQ(e1.h(t), t >= -1 ? 1 : 0) << t;
  EXPECT_TRUE(analyze(ext_into_ring(cyclic(ring, {"x"}), 0).presentation).is_zero());
}

TEST(ExtIntoRing, ResidueField) {
  for (int n = 2; n <= 4; ++n) {
    auto ring = PolynomialRing::standard(n);
    std::vector<std::string> vars(ring.names().begin(), ring.names().end());
    auto m = cyclic(ring, vars);
    auto en = analyze(ext_into_ring(m, n).presentation);
    EXPECT_EQ(en.inv.indeg, -n);
    EXPECT_EQ(en.inv.reg, -n);
    EXPECT_EQ(en.hilbert.degree(), 1);
    for (int j = 0; j < n; ++j) EXPECT_TRUE(analyze(ext_into_ring(m, j).presentation).is_zero());
  }
}

TEST(ExtModule, AgainstFreeModuleIsIdentity) {
  auto ring = PolynomialRing::standard(2);
  auto n = cyclic(ring, {"x^2", "x*y"});
  auto e0 = analyze(ext_module(free_ring(ring), n, 0).presentation);
  auto nd = analyze(n);
  for (int t = -2; t < 6; ++t) EXPECT_EQ(e0.h(t), nd.h(t));
  EXPECT_TRUE(analyze(ext_module(free_ring(ring), n, 1).presentation).is_zero());
}

TEST(ExtModule, QuotientsByVariables) {
  auto ring = PolynomialRing::standard(2);
  auto e1 = analyze(ext_module(cyclic(ring, {"x"}), cyclic(ring, {"y"}), 1).presentation);
  EXPECT_EQ(e1.hilbert.dim(), 0);
  EXPECT_EQ(e1.hilbert.degree(), 1);
  EXPECT_EQ(e1.h(-1), 1);
  // oracle: the one-step complex R/(y) --x--> R/(y)(1)
  EXPECT_TRUE(analyze(ext_module(cyclic(ring, {"x"}), cyclic(ring, {"y"}), 0).presentation).is_zero());
}

TEST(ExtModule, MatchesExtIntoRingOnRandomModules) {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 3; ++n) {
    auto ring = PolynomialRing::standard(n);
    for (int trial = 0; trial < 5; ++trial) {
      auto m = random_module(ring, rng);
      auto fm = minimal_resolution(m);
      auto fr = minimal_resolution(free_ring(ring));
      for (int i = 0; i <= n; ++i) {
        auto a = analyze(ext_module(fm, fr, i).presentation);
        auto b = analyze(ext_into_ring(fm, i).presentation);
        EXPECT_EQ(a.hilbert.numerator(), b.hilbert.numerator()) << "i=" << i;
      }
    }
  }
}

TEST(HomComplex, IsAComplexAndMatchesStrandRanks) {
  std::mt19937_64 rng(5);
  auto ring = PolynomialRing::standard(3);
  for (int trial = 0; trial < 4; ++trial) {
    auto fm = minimal_resolution(random_module(ring, rng));
    auto fn = minimal_resolution(random_module(ring, rng));
    auto hc = hom_complex(fm, fn);
    for (std::size_t k = 0; k + 1 < hc.maps.size(); ++k) EXPECT_TRUE(compose(hc.maps[k + 1], hc.maps[k]).is_zero());
    for (int i = 0; i <= 3; ++i) {
      auto e = analyze(ext_module(fm, fn, i).presentation);
      int k = i - hc.low;
      for (int t = -6; t <= 4; ++t) {
        if (k >= static_cast<int>(hc.terms.size())) {
          EXPECT_EQ(e.h(t), 0);
          continue;
        }
        long long dim = hc.terms[k].dim_in_degree(3, t);
        long long out = k < static_cast<int>(hc.maps.size()) ? strand_ranks(hc.maps[k], t).rank : 0;
        long long in = k >= 1 ? strand_ranks(hc.maps[k - 1], t).rank : 0;
        EXPECT_EQ(e.h(t), dim - out - in) << "i=" << i << " t=" << t;
      }
    }
  }
}

TEST(ExtIntoRing, StrandOracleOnDualComplex) {
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 4; ++n) {
    auto ring = PolynomialRing::standard(n);
    for (int trial = 0; trial < 4; ++trial) {
      auto res = minimal_resolution(random_module(ring, rng));
      auto dual = dual_complex(res);
      for (int i = 0; i <= n; ++i) {
        auto e = analyze(ext_into_ring(res, i).presentation);
        for (int t = -8; t <= 2; ++t) EXPECT_EQ(e.h(t), oracle::cohomology_dim(dual, i, t)) << i << " " << t;
      }
    }
  }
}

TEST(LocalCohomology, Examples) {
  auto ring = PolynomialRing::standard(2);
  auto r = local_cohomology_dims(free_ring(ring), -4, 2);
  EXPECT_EQ(r(2, -2), 1);
  EXPECT_EQ(r(2, -3), 2);
  EXPECT_EQ(r(0, 0), 0);

  auto fl = cyclic(ring, {"x^2", "y^2"});
  auto t = local_cohomology_dims(fl, -2, 4);
  auto md = analyze(fl);
  for (int mu = -2; mu <= 4; ++mu) {
    EXPECT_EQ(t(0, mu), md.h(mu));
    EXPECT_EQ(t(1, mu), 0);
    EXPECT_EQ(t(2, mu), 0);
  }

  auto m = cyclic(ring, {"x^2", "x*y"});
  auto sat = saturate_h0(m);
  auto lc = local_cohomology_dims(m, -3, 4);
  for (int mu = -3; mu <= 4; ++mu) {
    long long h0 = sat.h0_dims.count(mu) ? sat.h0_dims.at(mu) : 0;
    EXPECT_EQ(lc(0, mu), h0) << mu;
  }
}

TEST(Truncate, Examples) {
  auto ring = PolynomialRing::standard(2);
  auto m = cyclic(ring, {"x^2", "x*y"});
  EXPECT_EQ(analyze(truncate(m, 0)).betti.entries(), analyze(m).betti.entries());
  auto t2 = analyze(truncate(free_ring(ring), 2));
  EXPECT_EQ(t2.inv.mu, 3);
  EXPECT_EQ(t2.inv.indeg, 2);
  EXPECT_EQ(t2.inv.reg, 2);
}

TEST(Truncate, RegularityAndHilbertFunction) {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 3; ++n) {
    auto ring = PolynomialRing::standard(n);
    for (int trial = 0; trial < 6; ++trial) {
      auto m = random_module(ring, rng);
      auto md = analyze(m);
      if (md.is_zero()) continue;
      for (int t : {md.inv.indeg, md.inv.reg, md.inv.reg + 2}) {
        auto tr = analyze(truncate(m, t));
        // a finite-length module truncated past its end vanishes
        if (!tr.is_zero()) EXPECT_EQ(tr.inv.reg, std::max(t, md.inv.reg));
        else EXPECT_EQ(md.hilbert.dim(), 0);
        for (int s = t - 2; s <= md.inv.reg + 4; ++s) EXPECT_EQ(tr.h(s), s >= t ? md.h(s) : 0);
      }
    }
  }
}
