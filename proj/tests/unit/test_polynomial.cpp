#include <gtest/gtest.h>

#include <random>

#include "qpc/io.hpp"
#include "qpc/polynomial.hpp"

using namespace qpc;

namespace {

const Var x1 = Var::x("a", 1), x2 = Var::x("a", 2), b1 = Var::x("b", 1);
const Var u = Var::formal("u");

Poly X(const Var& v) { return Poly::variable(v); }
Poly C(long c) { return Poly::constant(c); }

Poly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int deg) {
  std::uniform_int_distribution<int> coef(-3, 3), e(0, deg), pick(0, static_cast<int>(vars.size()) - 1);
  Poly p;
  for (int t = 0; t < 4; ++t) {
    Poly m = C(coef(rng));
    for (int k = e(rng); k > 0; --k) m = m * X(vars[static_cast<std::size_t>(pick(rng))]);
    p += m;
  }
  return p;
}

}  // namespace

TEST(Poly, ArithmeticAndCanonicalText) {
  Poly p = X(x1) * X(x1) * Rational(2, 3) - X(b1);
  EXPECT_EQ(p.to_string(), "2/3*x[a,1]^2 - x[b,1]");
  EXPECT_EQ((p - p).to_string(), "0");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(C(0).degree(), -1);
  EXPECT_EQ(parse_poly(p.to_string()), p);
}

TEST(Poly, DivideLinear) {
  Poly p = X(x2) * X(x2) - X(x1) * X(x1);
  auto q = p.divide_linear(x2, x1);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, X(x1) + X(x2));
  EXPECT_FALSE((p + C(1)).divide_linear(x2, x1));
}

TEST(Poly, RenameAndSubstitute) {
  Poly p = X(x1) * X(b1) + X(x2);
  EXPECT_EQ(p.rename({{x1, x2}}), X(x2) * X(b1) + X(x2));
  EXPECT_EQ(p.substitute({{b1, C(3)}}), X(x1) * Rational(3) + X(x2));
}

TEST(RationalFn, CancelsCommonFactors) {
  RationalFn h(X(x2) - X(x1), {{LinearFactor{x1, x2}, 1}});
  EXPECT_TRUE(h.is_polynomial());
  EXPECT_EQ(h.numerator(), C(-1));
}

TEST(Residue, InverseVariable) {
  RationalFn h(C(1), {{LinearFactor{u, std::nullopt}, 1}});
  EXPECT_EQ(residue_at_infinity(h, u).numerator(), C(-1));
}

TEST(Residue, PolynomialHasNone) {
  RationalFn h(X(u) * X(u) + X(u) * X(x1));
  EXPECT_TRUE(residue_at_infinity(h, u).is_zero());
}

TEST(Residue, ShiftedPole) {
  LinearFactor f{x1, u};
  int s = normalize_factor(f);
  // 1/(u - x1)
  RationalFn h(C(-s), {{f, 1}});
  EXPECT_EQ(residue_at_infinity(h, u).numerator(), C(-1));
}

TEST(FactoredFn, InverseAndRename) {
  FactoredFn f = FactoredFn::factor(x2, x1, 2) * FactoredFn(Rational(3));
  FactoredFn g = f * f.inverse();
  EXPECT_EQ(g, FactoredFn(Rational(1)));
  EXPECT_EQ(f.rename({{x2, x1}}), FactoredFn(Rational(0)));
  EXPECT_THROW(f.inverse().rename({{x2, x1}}), DivisionError);
}

TEST(PolyProperty, RingAxioms) {
  std::mt19937_64 rng(51);
  std::vector<Var> vs{x1, x2, b1};
  for (int k = 0; k < 100; ++k) {
    Poly a = random_poly(rng, vs, 3), b = random_poly(rng, vs, 3), c = random_poly(rng, vs, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(parse_poly(a.to_string()), a);
    auto q = (a * (X(x2) - X(x1))).divide_linear(x2, x1);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, a);
  }
}
