#include <gtest/gtest.h>

#include "qpc/contraction.hpp"
#include "qpc/errors.hpp"
#include "qpc/hopf.hpp"
#include "qpc/shuffle.hpp"
#include "qpc/suites.hpp"
#include "support.hpp"

using namespace qpc;

namespace {

Var x(const std::string& v, int a) { return Var::x(v, a); }
Poly X(const std::string& v, int a) { return Poly::variable(x(v, a)); }
DimVector dv(std::initializer_list<std::pair<const std::string, long>> e) { return DimVector(e); }

Quiver single_arrow() { return test::quiver_from("i+, i-", "a0: i+ -> i-"); }

DimVector random_small(Rng& rng, const Quiver& q, long cap) {
  std::uniform_int_distribution<int> r(0, 2);
  for (;;) {
    DimVector g = DimVector::zero(q);
    for (const auto& v : q.vertices()) g.set(v, r(rng));
    if (!g.is_zero() && g.total() <= cap) return g;
  }
}

}  // namespace

TEST(FacKernel, SingleArrowRankTwo) {
  DimVector g = dv({{"i+", 1}, {"i-", 1}});
  FactoredFn want = FactoredFn::factor(x("i-", 2), x("i+", 1)) /
                    (FactoredFn::factor(x("i+", 2), x("i+", 1)) * FactoredFn::factor(x("i-", 2), x("i-", 1)));
  EXPECT_EQ(fac_kernel(single_arrow(), g, g), RationalFn::from(want));
}

TEST(FacKernel, JordanIsOne) {
  DimVector g = dv({{"o", 1}});
  EXPECT_EQ(fac_kernel(test::jordan(), g, g), RationalFn(Poly::constant(1)));
}

TEST(FacKernel, LoopFreeVertex) {
  DimVector g = dv({{"o", 1}});
  EXPECT_EQ(fac_kernel(test::point(), g, g),
            RationalFn::from(FactoredFn::factor(x("o", 2), x("o", 1), -1)));
}

TEST(ShuffleMul, SmallProducts) {
  EXPECT_TRUE(shuffle_mul(test::point(), generator(test::point(), "o", 0), generator(test::point(), "o", 0)).is_zero());
  Quiver j = test::jordan();
  EXPECT_EQ(shuffle_mul(j, generator(j, "o", 0), generator(j, "o", 0)).poly(), Poly::constant(2));
  EXPECT_EQ(shuffle_mul(j, generator(j, "o", 1), generator(j, "o", 0)).poly(), X("o", 1) + X("o", 2));
}

TEST(ShuffleMul, DistinctVerticesSingleTerm) {
  // e_s * e_t = f(x_s) g(x_t) (x_t - x_s) for one arrow s -> t; the reverse order has no factor.
  Quiver q = single_arrow();
  SymPoly f = generator(q, "i+", 2), g = generator(q, "i-", 1);
  Poly st = X("i+", 1) * X("i+", 1) * X("i-", 1) * (X("i-", 1) - X("i+", 1));
  EXPECT_EQ(shuffle_mul(q, f, g).poly(), st);
  EXPECT_EQ(shuffle_mul(q, g, f).poly(), X("i+", 1) * X("i+", 1) * X("i-", 1));
}

TEST(ShuffleMul, RejectsForeignGamma) {
  SymPoly f = generator(test::a2(), "1", 0);
  EXPECT_THROW(shuffle_mul(test::jordan(), f, generator(test::jordan(), "o", 0)), PreconditionError);
}

TEST(SymPoly, NonSymmetricRejected) {
  EXPECT_THROW(SymPoly(dv({{"o", 2}}), X("o", 1)), PreconditionError);
  EXPECT_NO_THROW(SymPoly(dv({{"o", 2}}), X("o", 1) + X("o", 2)));
}

TEST(ContractShuffle, Substitution) {
  Quiver q = single_arrow();
  SymPoly f(dv({{"i+", 1}, {"i-", 1}}), X("i+", 1) * X("i-", 1));
  SymPoly c = contract_shuffle(q, "a0", f);
  EXPECT_EQ(c.gamma(), dv({{"i+", 1}}));
  EXPECT_EQ(c.poly(), X("i+", 1) * X("i+", 1));
  SymPoly one(dv({{"i+", 1}, {"i-", 1}}), Poly::constant(1));
  EXPECT_EQ(contract_shuffle(q, "a0", one).poly(), Poly::constant(1));
}

TEST(ContractShuffle, FermionicOnContractedPoint) {
  Quiver q = single_arrow();
  SymPoly one(dv({{"i+", 1}, {"i-", 1}}), Poly::constant(1));
  EXPECT_TRUE(contract_shuffle(q, "a0", shuffle_mul(q, one, one)).is_zero());
  Quiver qh = contract_quiver(q, "a0");
  SymPoly c1 = contract_shuffle(q, "a0", one);
  EXPECT_TRUE(shuffle_mul(qh, c1, c1).is_zero());
}

TEST(ContractShuffle, UnequalRanksRejected) {
  Quiver q = single_arrow();
  EXPECT_THROW(contract_shuffle(q, "a0", generator(q, "i+", 0)), EqualRankError);
}

TEST(Spherical, LoopFreePointRankTwo) {
  // x1/(x2 - x1) + x2/(x1 - x2) = -1
  SymPoly x = generator(test::point(), "o", 1), one = generator(test::point(), "o", 0);
  EXPECT_EQ(shuffle_mul(test::point(), x, one).poly(), Poly::constant(-1));
  EXPECT_FALSE(spherical_span(test::point(), dv({{"o", 2}}), 1).empty());
  EXPECT_EQ(spherical_membership(test::point(), SymPoly(dv({{"o", 2}}), Poly::constant(1)), 3),
            Membership::Member);
}

TEST(Spherical, JordanRankTwo) {
  Quiver j = test::jordan();
  auto basis = spherical_span(j, dv({{"o", 2}}), 1);
  EXPECT_EQ(basis.size(), 2u);
  EXPECT_EQ(spherical_membership(j, SymPoly(dv({{"o", 2}}), Poly::constant(1)), 1), Membership::Member);
  EXPECT_EQ(spherical_membership(j, SymPoly(dv({{"o", 2}}), X("o", 1) + X("o", 2)), 1), Membership::Member);
  EXPECT_EQ(spherical_membership(j, SymPoly(dv({{"o", 2}}), Poly::constant(2)), 3), Membership::Member);
}

TEST(Spherical, RankOneIsEverything) {
  auto basis = spherical_span(test::jordan(), dv({{"o", 1}}), 2);
  EXPECT_EQ(basis.size(), 3u);
}

TEST(Spherical, ContractedCycleProduct) {
  // On the 2-cycle, e_1 * e_3 and e_3 * e_1 carry exactly one factor (x_3 - x_1); so at (1,1)
  // the spherical part is the multiples of (x_3 - x_1).
  SphericalReport r = spherical_counterexample(4);
  auto q = r.contracted.poly().divide_linear(x("3", 1), x("1", 1));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, X("1", 1) - X("3", 1));
  EXPECT_EQ(r.product, Membership::Member);
  for (const auto& [label, m] : r.generators) EXPECT_EQ(m, Membership::Member) << label;
}

TEST(ShuffleProperty, AssociativeAndGraded) {
  Rng rng(61);
  for (int k = 0; k < 50; ++k) {
    Contractible c = random_contractible(rng, 3, 4);
    DimVector g1 = random_small(rng, c.quiver, 2), g2 = random_small(rng, c.quiver, 2),
              g3 = random_small(rng, c.quiver, 2);
    SymPoly f = random_sympoly(rng, g1, 2), g = random_sympoly(rng, g2, 2), h = random_sympoly(rng, g3, 2);
    SymPoly fg = shuffle_mul(c.quiver, f, g);
    EXPECT_EQ(fg.gamma(), g1 + g2);
    EXPECT_TRUE(is_symmetric(fg.poly(), fg.gamma()));
    EXPECT_EQ(shuffle_mul(c.quiver, fg, h), shuffle_mul(c.quiver, f, shuffle_mul(c.quiver, g, h)));
  }
}

TEST(ShuffleProperty, ThreadCountIrrelevant) {
  Rng rng(62);
  for (int k = 0; k < 20; ++k) {
    Contractible c = random_contractible(rng, 3, 5);
    SymPoly f = random_sympoly(rng, random_small(rng, c.quiver, 3), 2);
    SymPoly g = random_sympoly(rng, random_small(rng, c.quiver, 3), 2);
    EXPECT_EQ(shuffle_mul(c.quiver, f, g, 1), shuffle_mul(c.quiver, f, g, 3));
  }
}

TEST(ShuffleProperty, FermionClosedForm) {
  Quiver p = test::point();
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      Poly f1 = X("o", 1), f2 = X("o", 2);
      Poly fa1 = Poly::constant(1), fa2 = fa1, gb1 = fa1, gb2 = fa1;
      for (int i = 0; i < a; ++i) fa1 = fa1 * f1, fa2 = fa2 * f2;
      for (int i = 0; i < b; ++i) gb1 = gb1 * f1, gb2 = gb2 * f2;
      auto want = (fa1 * gb2 - fa2 * gb1).divide_linear(x("o", 2), x("o", 1));
      ASSERT_TRUE(want);
      EXPECT_EQ(shuffle_mul(p, generator(p, "o", a), generator(p, "o", b)).poly(), *want);
    }
}

TEST(ShuffleProperty, ContractionIsHomomorphism) {
  Rng rng(63);
  for (int k = 0; k < 30; ++k) {
    Contractible c = random_contractible(rng, 3, 5);
    DimVector g1 = random_equal_sector(rng, c.quiver, c.a0, 1, 3);
    DimVector g2 = random_equal_sector(rng, c.quiver, c.a0, 2, 4);
    SymPoly f = random_sympoly(rng, g1, 2), g = random_sympoly(rng, g2, 2);
    Quiver qh = contract_quiver(c.quiver, c.a0);
    SymPoly lhs = contract_shuffle(c.quiver, c.a0, shuffle_mul(c.quiver, f, g));
    SymPoly rhs = shuffle_mul(qh, contract_shuffle(c.quiver, c.a0, f), contract_shuffle(c.quiver, c.a0, g));
    EXPECT_EQ(lhs, rhs);
    EXPECT_TRUE(is_symmetric(lhs.poly(), lhs.gamma()));
  }
}
