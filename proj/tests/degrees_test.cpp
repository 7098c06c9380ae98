#include <gtest/gtest.h>

#include <random>

#include "regext/cohomology.hpp"
#include "regext/degrees.hpp"
#include "test_util.hpp"

using namespace regext;
using regext::testing::polys;

namespace {

GradedModulePresentation cyclic(const PolynomialRing& ring, std::vector<std::string> ideal, int twist = 0) {
  return GradedModulePresentation::cyclic(ring, polys(ring, ideal), twist);
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

TEST(FilterRegular, FreeModule) {
  auto ring = PolynomialRing::standard(2);
  auto fr = filter_regular_sequence(GradedModulePresentation::free(ring, GradedFreeModule({0})), 1);
  EXPECT_EQ(fr.forms.size(), 2u);
  EXPECT_EQ(fr.B, 1);
  EXPECT_EQ(fr.rbar, (std::vector<int>{0, 0, kNegInf}));
}

TEST(FilterRegular, XSquaredXY) {
  auto ring = PolynomialRing::standard(2);
  auto fr = filter_regular_sequence(cyclic(ring, {"x^2", "x*y"}), 7);
  ASSERT_EQ(fr.forms.size(), 1u);
  EXPECT_EQ(fr.B, 2);
  EXPECT_EQ(fr.rbar[0], 0);
}

TEST(FilterRegular, FiniteLengthHasEmptySequence) {
  auto ring = PolynomialRing::standard(2);
  auto fr = filter_regular_sequence(cyclic(ring, {"x^2", "y^2"}), 3);
  EXPECT_TRUE(fr.forms.empty());
  EXPECT_EQ(fr.B, 4);
}

TEST(FilterRegular, RejectsZeroDivisorOnSaturation) {
  auto ring = PolynomialRing::standard(2);
  auto m = cyclic(ring, {"x*y"});
  auto sat = saturate_h0(m);
  EXPECT_FALSE(is_filter_regular(sat, regext::testing::poly(ring, "x")));
  EXPECT_TRUE(is_filter_regular(sat, regext::testing::poly(ring, "x + y")));
}

TEST(FilterRegular, DeterministicAndMonotone) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 4; ++n) {
    auto ring = PolynomialRing::standard(n);
    for (int trial = 0; trial < 5; ++trial) {
      auto m = random_module(ring, rng);
      auto a = filter_regular_sequence(m, 99);
      auto b = filter_regular_sequence(m, 99);
      EXPECT_EQ(a.forms, b.forms);
      EXPECT_EQ(a.rbar, b.rbar);
      EXPECT_EQ(a.B, b.B);
      for (std::size_t j = 1; j < a.rbar.size(); ++j) EXPECT_LE(a.rbar[j], a.rbar[j - 1]);
    }
  }
}

TEST(Hdeg, NamedValues) {
  auto ring = PolynomialRing::standard(2);
  EXPECT_EQ(hdeg(GradedModulePresentation::free(ring, GradedFreeModule({0}))).value, 1);
  auto r = hdeg(cyclic(ring, {"x^2", "x*y"}));
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.degree, 1);
  EXPECT_EQ(hdeg(cyclic(ring, {"x^2", "y^2"})).value, 4);
  EXPECT_EQ(hdeg(cyclic(ring, {"1"})).value, 0);
}

TEST(Hdeg, NoteB) {
  auto ring = PolynomialRing::standard(2);
  EXPECT_TRUE(hdeg_note_b_check(cyclic(ring, {"x^2", "x*y"})));
  EXPECT_TRUE(hdeg_note_b_check(cyclic(ring, {"x^2", "y^2"})));
  EXPECT_TRUE(hdeg_note_b_check(GradedModulePresentation::free(ring, GradedFreeModule({0}))));
}

TEST(Hdeg, PropertiesOnRandomModules) {
  std::mt19937_64 rng(10);
  for (int n = 2; n <= 4; ++n) {
    auto ring = PolynomialRing::standard(n);
    for (int trial = 0; trial < 6; ++trial) {
      auto m = random_module(ring, rng);
      auto md = analyze(m);
      if (md.is_zero()) continue;
      HdegCalculator calc;
      auto h = calc.compute(m);
      EXPECT_GE(h.value, h.degree);
      bool cm = md.inv.depth == md.hilbert.dim();
      EXPECT_EQ(h.value == h.degree, cm);
      EXPECT_LE(BigInt(md.inv.reg), BigInt(md.inv.gen) + h.value - 1);
      EXPECT_TRUE(hdeg_note_b_check(m));
    }
  }
}
