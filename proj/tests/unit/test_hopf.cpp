#include <gtest/gtest.h>

#include "qpc/contraction.hpp"
#include "qpc/errors.hpp"
#include "qpc/hopf.hpp"
#include "qpc/suites.hpp"
#include "support.hpp"

using namespace qpc;

namespace {

Var x(const std::string& v, int a) { return Var::x(v, a); }
Poly X(const std::string& v, int a) { return Poly::variable(x(v, a)); }
DimVector dv(std::initializer_list<std::pair<const std::string, long>> e) { return DimVector(e); }
RationalFn one() { return RationalFn(Poly::constant(1)); }

Quiver single_arrow() { return test::quiver_from("i+, i-", "a0: i+ -> i-"); }

}  // namespace

TEST(PsiAction, Examples) {
  EXPECT_EQ(psi_action_ratio(test::jordan(), "o", dv({{"o", 1}})).as_rational(), one());
  EXPECT_EQ(psi_action_ratio(test::point(), "o", dv({{"o", 1}})).as_rational(), RationalFn(Poly::constant(-1)));
  EXPECT_EQ(psi_action_ratio(test::a2(), "1", dv({{"1", 0}, {"2", 1}})).as_rational(),
            RationalFn(X("2", 1) - Poly::variable(kZ)));
}

TEST(PsiAction, ContractionRatio) {
  EXPECT_TRUE(contraction_ratio_check(single_arrow(), "a0", dv({{"i+", 1}, {"i-", 1}})));
  QuiverWithPotential e = example31();
  EXPECT_TRUE(contraction_ratio_check(e.quiver, "a0", dv({{"i+", 1}, {"i-", 1}, {"1", 0}, {"2", 0}})));
  EXPECT_TRUE(contraction_ratio_check(e.quiver, "a0", dv({{"i+", 0}, {"i-", 0}, {"1", 2}, {"2", 1}})));
}

TEST(Coproduct, RankOne) {
  Quiver j = test::jordan();
  SymPoly f = generator(j, "o", 1);
  TensorElement want;
  want.add({HopfWord::psi("o", x("o", 1)), HopfWord::of(f)}, one());
  want.add({HopfWord::of(f), HopfWord::unit()}, one());
  EXPECT_EQ(coproduct_small(f), want);
}

TEST(Coproduct, EqualSectorRankOneOne) {
  SymPoly f(dv({{"i+", 1}, {"i-", 1}}), X("i+", 1) - X("i-", 1) * Rational(3));
  TensorElement want;
  want.add({HopfWord::psi("i+", x("i+", 1)) * HopfWord::psi("i-", x("i-", 1)), HopfWord::of(f)}, one());
  want.add({HopfWord::of(f), HopfWord::unit()}, one());
  EXPECT_EQ(coproduct_small(f), want);
  EXPECT_TRUE(coproduct_contraction_check(single_arrow(), "a0", f));
}

TEST(Coproduct, LargerRanksOutOfScope) {
  SymPoly f(dv({{"o", 2}}), Poly::constant(1));
  EXPECT_THROW(coproduct_small(f), ScopeError);
}

TEST(Antipode, RankOneAndUnit) {
  Quiver j = test::jordan();
  SymPoly f = generator(j, "o", 2);
  SignedWord s = antipode_small(HopfWord::of(f));
  EXPECT_EQ(s.sign, -1);
  EXPECT_EQ(s.word, HopfWord::psi("o", x("o", 1), -1) * HopfWord::of(f));
  SymPoly c(dv({{"o", 0}}), Poly::constant(5));
  SignedWord t = antipode_small(HopfWord::of(c));
  EXPECT_EQ(t.sign, 1);
  EXPECT_EQ(t.word, HopfWord::of(c));
}

TEST(Counit, Values) {
  EXPECT_EQ(counit(HopfWord::unit()), 1);
  EXPECT_EQ(counit(HopfWord::psi("o", x("o", 1))), 1);
  EXPECT_EQ(counit(HopfWord::of(generator(test::point(), "o", 0))), 0);
}

TEST(Pairing, Examples) {
  Quiver p = test::point();
  EXPECT_TRUE(skew_pairing(p, generator(p, "o", 0), generator(p, "o", 0)).is_zero());
  Quiver a = test::a2();
  Var u = Var::formal("u"), w = Var::formal("w");
  EXPECT_EQ(skew_pairing(a, HopfWord::psi("1", u), HopfWord::phi("2", w)),
            RationalFn(Poly::variable(w) - Poly::variable(u)));
  EXPECT_TRUE(skew_pairing(a, generator(a, "1", 0), generator(a, "2", 0)).is_zero());
  EXPECT_TRUE(skew_pairing(a, generator(a, "1", 1), SymPoly(dv({{"1", 2}, {"2", 0}}), Poly::constant(1))).is_zero());
}

TEST(Pairing, ResidueOfProduct) {
  // (x^a, x^b) = -res_inf x^a (-x)^b; nonzero only when a + b = -1, so polynomials pair to 0.
  Quiver p = test::point();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) EXPECT_TRUE(skew_pairing(p, generator(p, "o", a), generator(p, "o", b)).is_zero());
}

TEST(DoubleCross, Examples) {
  Quiver q = single_arrow();
  DimVector g = dv({{"i+", 1}, {"i-", 1}});
  SymPoly one1(g, Poly::constant(1));
  EXPECT_TRUE(double_cross_check(q, "a0", one1, one1));
  SymPoly f(g, X("i+", 1) * X("i-", 1) + X("i-", 1));
  EXPECT_TRUE(double_cross_check(q, "a0", f, one1));
  SymPoly zero(g, Poly());
  EXPECT_TRUE(double_cross_check(q, "a0", zero, f));
}

TEST(HopfProperty, ActionRatioMultiplicative) {
  Rng rng(71);
  for (int k = 0; k < 40; ++k) {
    Contractible c = random_contractible(rng, 4, 6);
    DimVector g1 = random_equal_sector(rng, c.quiver, c.a0, 2, 5);
    DimVector g2 = random_equal_sector(rng, c.quiver, c.a0, 2, 5);
    for (const auto& v : c.quiver.vertices()) {
      FactoredFn whole = psi_action_ratio(c.quiver, v, g1 + g2).ratio;
      FactoredFn parts = psi_action_ratio(c.quiver, v, g1).ratio * psi_action_ratio(c.quiver, v, g2, kZ, &g1).ratio;
      EXPECT_EQ(whole, parts);
    }
  }
}

TEST(HopfProperty, ContractionRatioOnRandomQuivers) {
  Rng rng(72);
  for (int k = 0; k < 30; ++k) {
    Contractible c = random_contractible(rng, 4, 6);
    EXPECT_TRUE(contraction_ratio_check(c.quiver, c.a0, random_equal_sector(rng, c.quiver, c.a0, 2, 8)));
  }
}

TEST(HopfProperty, Coassociative) {
  Rng rng(73);
  for (int k = 0; k < 20; ++k) {
    Contractible c = random_contractible(rng, 3, 4);
    ContractionShape sh = contraction_shape(c.quiver, c.a0);
    SymPoly f = random_sympoly(rng, unit_vector(c.quiver, sh.plus), 3);
    TensorElement d = coproduct_small(f);
    EXPECT_EQ(apply_coproduct(d, 0), apply_coproduct(d, 1));
    DimVector g = DimVector::zero(c.quiver);
    g.set(sh.plus, 1);
    g.set(sh.minus, 1);
    SymPoly h = random_sympoly(rng, g, 2);
    TensorElement dh = coproduct_small(h);
    EXPECT_EQ(apply_coproduct(dh, 0), apply_coproduct(dh, 1));
  }
}

TEST(HopfProperty, CrossRelationAndRestriction) {
  Rng rng(74);
  for (int k = 0; k < 15; ++k) {
    Contractible c = random_contractible(rng, 3, 5);
    ContractionShape sh = contraction_shape(c.quiver, c.a0);
    DimVector g = DimVector::zero(c.quiver);
    g.set(sh.plus, 1);
    g.set(sh.minus, 1);
    SymPoly f = random_sympoly(rng, g, 2), h = random_sympoly(rng, g, 2);
    EXPECT_TRUE(coproduct_contraction_check(c.quiver, c.a0, f));
    EXPECT_TRUE(double_cross_check(c.quiver, c.a0, f, h));
  }
}

TEST(HopfProperty, SymmetrizerNormalization) {
  Rng rng(75);
  for (int k = 0; k < 20; ++k) {
    Contractible c = random_contractible(rng, 3, 4);
    DimVector g = random_equal_sector(rng, c.quiver, c.a0, 2, 6);
    SymPoly h = random_sympoly(rng, contract_dim(c.quiver, c.a0, g), 2);
    EXPECT_TRUE(pairing_normalization_check(c.quiver, c.a0, g, h.poly()));
  }
}
