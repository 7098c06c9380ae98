#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "regext/hilbert.hpp"
#include "regext/resolution.hpp"
#include "regext/saturation.hpp"
#include "test_util.hpp"

using namespace regext;
using regext::testing::polys;

namespace {

GradedModulePresentation cyclic(const PolynomialRing& ring, std::vector<std::string> ideal, int twist = 0) {
  return GradedModulePresentation::cyclic(ring, polys(ring, ideal), twist);
}

std::map<std::pair<int, int>, long long> table(std::initializer_list<std::tuple<int, int, long long>> e) {
  std::map<std::pair<int, int>, long long> m;
  for (auto [i, j, v] : e) m[{i, j}] = v;
  return m;
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
      auto p = regext::testing::random_homogeneous(ring, deg - tw[j], rng, 2);
      v = add(f, v, ModuleVector::from_polynomial(p, j));
    }
    rels.push_back(v);
  }
  return GradedModulePresentation::from_relations(ring, GradedFreeModule(tw), rels);
}

}  // namespace

TEST(Resolution, FreeModule) {
  auto ring = PolynomialRing::standard(2);
  auto res = minimal_resolution(GradedModulePresentation::free(ring, GradedFreeModule({0})));
  EXPECT_EQ(res.length(), 0);
  EXPECT_EQ(BettiTable(res).entries(), table({{0, 0, 1}}));
}

TEST(Resolution, XSquaredXY) {
  auto ring = PolynomialRing::standard(2);
  auto res = minimal_resolution(cyclic(ring, {"x^2", "x*y"}));
  ASSERT_EQ(res.length(), 2);
  EXPECT_EQ(res.modules[1].twists, (std::vector<int>{2, 2}));
  EXPECT_EQ(res.modules[2].twists, (std::vector<int>{3}));
  EXPECT_EQ(BettiTable(res).entries(), table({{0, 0, 1}, {1, 2, 2}, {2, 3, 1}}));
  auto inv = invariants(res);
  EXPECT_EQ(inv.reg, 1);
  EXPECT_EQ(inv.pd, 2);
  EXPECT_EQ(inv.depth, 0);
  EXPECT_EQ(inv.dim, 1);
}

TEST(Resolution, KoszulAndMaximalIdeal) {
  auto ring = PolynomialRing::standard(2);
  auto res = minimal_resolution(cyclic(ring, {"x", "y"}));
  EXPECT_EQ(BettiTable(res).entries(), table({{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));
  // m as a module: generators x, y in degree 1 with the Koszul relation
  auto m = GradedModulePresentation::from_relations(ring, GradedFreeModule({1, 1}),
                                                    {regext::testing::vec(ring, {"y", "-x"})});
  EXPECT_EQ(betti_table(m).entries(), table({{0, 1, 2}, {1, 2, 1}}));
}

TEST(Resolution, Invariants) {
  auto ring = PolynomialRing::standard(2);
  auto r = invariants(GradedModulePresentation::free(ring, GradedFreeModule({0})));
  EXPECT_EQ(r.reg, 0);
  EXPECT_EQ(r.pd, 0);
  EXPECT_EQ(r.depth, 2);
  EXPECT_EQ(r.dim, 2);
  EXPECT_EQ(r.mu, 1);
  auto ci = invariants(cyclic(ring, {"x^2", "y^2"}));
  EXPECT_EQ(ci.reg, 2);
  EXPECT_EQ(ci.pd, 2);
  EXPECT_EQ(ci.depth, 0);
  EXPECT_EQ(ci.dim, 0);
  EXPECT_EQ(ci.mu, 1);
  auto z = invariants(cyclic(ring, {"1"}));
  EXPECT_EQ(z.reg, kNegInf);
  EXPECT_EQ(z.indeg, kPosInf);
  EXPECT_EQ(z.dim, -1);
}

TEST(Resolution, DualKoszulIsKoszul) {
  auto ring = PolynomialRing::standard(2);
  auto res = minimal_resolution(cyclic(ring, {"x", "y"}));
  auto dual = dual_complex(res);
  ASSERT_EQ(dual.terms.size(), 3u);
  EXPECT_EQ(dual.terms[0].twists, std::vector<int>{0});
  EXPECT_EQ(dual.terms[1].twists, (std::vector<int>{-1, -1}));
  EXPECT_EQ(dual.terms[2].twists, std::vector<int>{-2});
  EXPECT_TRUE(compose(dual.maps[1], dual.maps[0]).is_zero());
  // twisting by 2 gives back the resolution's shape
  EXPECT_EQ(dual.terms[2].shifted(2).twists, res.modules[0].twists);
  EXPECT_EQ(dual.terms[1].shifted(2).twists, res.modules[1].twists);
}

TEST(Resolution, RandomModulesAreMinimalComplexes) {
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 4; ++n) {
    auto ring = PolynomialRing::standard(n);
    for (int trial = 0; trial < 8; ++trial) {
      auto m = random_module(ring, rng);
      auto res = minimal_resolution(m);
      EXPECT_LE(res.length(), n);
      for (int i = 0; i + 1 < res.length(); ++i) EXPECT_TRUE(compose(res.maps[i], res.maps[i + 1]).is_zero());
      for (const auto& d : res.maps) EXPECT_FALSE(d.has_unit_entry());
    }
  }
}

TEST(Resolution, SyzygiesCompleteOnStrands) {
  std::mt19937_64 rng(77);
  auto ring = PolynomialRing::standard(3);
  for (int trial = 0; trial < 6; ++trial) {
    auto m = random_module(ring, rng);
    auto res = minimal_resolution(m);
    int reg = BettiTable(res).reg();
    for (int i = 0; i < res.length(); ++i) {
      const auto& d = res.maps[i];
      GradedModulePresentation image_of_next =
          i + 1 < res.length() ? GradedModulePresentation(res.maps[i + 1])
                               : GradedModulePresentation::free(ring, res.modules[i + 1]);
      for (int t = 0; t <= reg + i + 3; ++t) {
        // ker(d)_t = im(d_next)_t = dim F_{i+1,t} - dim coker(d_next)_t
        long long ker = strand_ranks(d, t).kernel_dim();
        long long im = res.modules[i + 1].dim_in_degree(3, t) - hilbert_function(image_of_next, t);
        EXPECT_EQ(ker, im) << "i=" << i << " t=" << t;
      }
    }
  }
}

TEST(Hilbert, FunctionExamples) {
  auto ring = PolynomialRing::standard(2);
  EXPECT_EQ(hilbert_function(GradedModulePresentation::free(ring, GradedFreeModule({0})), 3), 4);
  EXPECT_EQ(hilbert_function(cyclic(ring, {"x^2", "x*y"}), 2), 1);
  EXPECT_EQ(hilbert_function(GradedModulePresentation::free(ring, GradedFreeModule({2})), 2), 1);
}

TEST(Hilbert, PolynomialExamples) {
  auto r3 = PolynomialRing::standard(3);
  auto h = hilbert_poly(cyclic(r3, {"x"}));
  EXPECT_EQ(h.dim(), 2);
  EXPECT_EQ(h.coefficients(), (std::vector<BigInt>{1, 0}));
  for (int t = 0; t < 6; ++t) EXPECT_EQ(h.poly()(t), t + 1);

  auto r2 = PolynomialRing::standard(2);
  auto hr = hilbert_poly(GradedModulePresentation::free(r2, GradedFreeModule({0})));
  EXPECT_EQ(hr.dim(), 2);
  EXPECT_EQ(hr.coefficients(), (std::vector<BigInt>{1, 0}));

  auto hx = hilbert_poly(cyclic(r2, {"x^2", "x*y"}));
  EXPECT_EQ(hx.dim(), 1);
  EXPECT_EQ(hx.coefficients(), std::vector<BigInt>{1});
  EXPECT_EQ(hx.numerator(), (std::map<int, long long>{{0, 1}, {2, -2}, {3, 1}}));
  EXPECT_EQ(hx.poly()(10), 1);

  auto hf = hilbert_poly(cyclic(r2, {"x^2", "y^2"}));
  EXPECT_EQ(hf.dim(), 0);
  EXPECT_EQ(hf.degree(), 4);
  EXPECT_TRUE(hf.poly().is_zero());
}

TEST(Hilbert, Delta) {
  HilbertPolynomial linear({1, 1});  // 1 + (t+1) = t + 2
  EXPECT_EQ(linear(0), 2);
  EXPECT_EQ(linear.delta(1), HilbertPolynomial({1}));
  EXPECT_TRUE(linear.delta(2).is_zero());
  HilbertPolynomial c2({0, 0, 1});  // C(t+2,2)
  EXPECT_EQ(c2.delta(1), HilbertPolynomial({0, 1}));
  EXPECT_EQ(c2.delta(0), c2);
  for (int t = -5; t < 5; ++t) {
    EXPECT_EQ(c2(t) - c2(t - 1), c2.delta(1)(t));
    EXPECT_EQ(c2.shifted(3)(t), c2(t + 3));
  }
}

TEST(Hilbert, CoefficientsMatchDerivativesOfReducedNumerator) {
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 4; ++n) {
    auto ring = PolynomialRing::standard(n);
    for (int trial = 0; trial < 8; ++trial) {
      auto h = hilbert_poly(random_module(ring, rng));
      // e_i = Q^{(i)}(1) / i!
      for (int i = 0; i < h.dim(); ++i) {
        BigInt s = 0;
        for (const auto& [k, q] : h.reduced_numerator()) s += q * poly_binomial(k, i);
        EXPECT_EQ(s, h.coefficients()[i]);
      }
    }
  }
}

TEST(Hilbert, StandardMonomialsAgreeWithBettiSumAndLeadTerms) {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 4; ++n) {
    auto ring = PolynomialRing::standard(n);
    for (int trial = 0; trial < 10; ++trial) {
      auto m = random_module(ring, rng);
      auto b = betti_table(m);
      HilbertData h(b, n);
      auto gb = m.relation_gb();
      EXPECT_EQ(oracle::lead_term_numerator(gb), h.numerator());
      int reg = b.is_zero() ? 0 : b.reg();
      for (int t = -2; t <= reg + 5; ++t) {
        EXPECT_EQ(BigInt(count_standard_monomials(gb, t)), h.function(t));
        if (t > reg && !b.is_zero()) EXPECT_EQ(h.function(t), h.dim() > 0 ? h.poly()(t) : BigInt(0));
      }
    }
  }
}

TEST(Saturation, Examples) {
  auto ring = PolynomialRing::standard(2);
  auto free = saturate_h0(GradedModulePresentation::free(ring, GradedFreeModule({0})));
  EXPECT_TRUE(free.h0_is_zero());
  EXPECT_EQ(free.mbar.gens().twists, std::vector<int>{0});

  auto s = saturate_h0(cyclic(ring, {"x^2", "x*y"}));
  EXPECT_EQ(s.h0_dims, (std::map<int, long long>{{1, 1}}));
  EXPECT_EQ(betti_table(s.mbar).entries(), table({{0, 0, 1}, {1, 1, 1}}));

  auto fl = saturate_h0(cyclic(ring, {"x^2", "y^2"}));
  EXPECT_EQ(fl.h0_length(), 4);
  EXPECT_TRUE(fl.mbar.gens().is_zero());
}

TEST(Saturation, QuotientIsTorsionFreeAndDimsAdd) {
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 3; ++n) {
    auto ring = PolynomialRing::standard(n);
    for (int trial = 0; trial < 10; ++trial) {
      auto m = random_module(ring, rng);
      auto b = betti_table(m);
      if (b.is_zero()) continue;
      auto s = saturate_h0(m);
      auto gb = s.mbar.relation_gb();
      for (int t = b.indeg() - 1; t <= b.reg() + 3; ++t) {
        EXPECT_TRUE(socle_in_degree(gb, t).empty());
        long long h0 = s.h0_dims.count(t) ? s.h0_dims.at(t) : 0;
        EXPECT_EQ(hilbert_function(m, t), h0 + hilbert_function(s.mbar, t));
      }
    }
  }
}
