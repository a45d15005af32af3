#include <gtest/gtest.h>

#include <random>

#include "qpc/errors.hpp"
#include "qpc/quantum_torus.hpp"
#include "support.hpp"

using namespace qpc;

namespace {

DimVector dv(long a, long b) { return DimVector({{"1", a}, {"2", b}}); }

QTElement random_element(std::mt19937_64& rng, bool with_scalar) {
  std::uniform_int_distribution<int> c(-2, 2), e(-2, 2), d(0, 2);
  QTElement x;
  for (int k = 0; k < 4; ++k) {
    DimVector g = dv(d(rng), d(rng));
    if (g.is_zero() && !with_scalar) continue;
    x.add(g, Laurent(c(rng), e(rng)));
  }
  return x;
}

}  // namespace

TEST(Laurent, HalfExponents) {
  Laurent a(Rational(3), -1);
  EXPECT_EQ(a.to_string(), "3*L^(-1/2)");
  EXPECT_EQ((a * Laurent(Rational(1), 1)).to_string(), "3");
  EXPECT_TRUE((a - a).is_zero());
}

TEST(QuantumTorus, A2Products) {
  TorusContext ctx{test::a2(), 3};
  QTElement e10 = QTElement::basis(dv(1, 0)), e01 = QTElement::basis(dv(0, 1));
  EXPECT_EQ(mul(ctx, e10, e01), QTElement::basis(dv(1, 1), Laurent(Rational(1), 2)));
  EXPECT_EQ(mul(ctx, e01, e10), QTElement::basis(dv(1, 1)));
  EXPECT_EQ(mul(ctx, e10, QTElement::one(ctx.quiver)), e10);
}

TEST(QuantumTorus, TruncationDropsHighDegrees) {
  TorusContext ctx{test::a2(), 1};
  EXPECT_TRUE(mul(ctx, QTElement::basis(dv(1, 0)), QTElement::basis(dv(0, 1))).is_zero());
}

TEST(QuantumTorus, ExpLog) {
  TorusContext ctx{test::a2(), 3};
  EXPECT_EQ(exp_truncated(ctx, QTElement()), QTElement::one(ctx.quiver));
  QTElement x = QTElement::basis(dv(1, 1), Laurent(Rational(5)));
  // |gamma| = 2, so squares vanish at truncation 3.
  EXPECT_EQ(exp_truncated(ctx, x), QTElement::one(ctx.quiver) + x);
  EXPECT_THROW(exp_truncated(ctx, QTElement::one(ctx.quiver)), NotInLieAlgebra);
}

TEST(QuantumTorusProperty, LogInvertsExp) {
  std::mt19937_64 rng(81);
  TorusContext ctx{test::quiver_from("1, 2", "a: 1 -> 2; b: 1 -> 2"), 4};
  for (int k = 0; k < 50; ++k) {
    QTElement x = truncate(ctx, random_element(rng, false));
    EXPECT_EQ(log_truncated(ctx, exp_truncated(ctx, x)), x);
    QTElement g = exp_truncated(ctx, x);
    EXPECT_EQ(mul(ctx, g, group_inverse(ctx, g)), QTElement::one(ctx.quiver));
  }
}

TEST(QuantumTorusProperty, Associative) {
  std::mt19937_64 rng(82);
  TorusContext ctx{test::quiver_from("1, 2", "a: 1 -> 2; b: 2 -> 1; c: 2 -> 1"), 5};
  for (int k = 0; k < 50; ++k) {
    QTElement a = random_element(rng, true), b = random_element(rng, true), c = random_element(rng, true);
    EXPECT_EQ(mul(ctx, mul(ctx, a, b), c), mul(ctx, a, mul(ctx, b, c)));
  }
}
