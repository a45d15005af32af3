#include <gtest/gtest.h>

#include <random>

#include "qpc/errors.hpp"
#include "qpc/scattering.hpp"
#include "support.hpp"

using namespace qpc;

namespace {

Stability st(Rational a, Rational b) { return {{"1", a}, {"2", b}}; }

Wall wall(const Quiver& q, const std::string& v, Laurent c = Laurent(Rational(1))) {
  Wall w;
  w.normal = DimVector::zero(q);
  w.normal.set(v, 1);
  w.element = QTElement::basis(w.normal, c);
  w.label = v;
  return w;
}

GComplex two_walls(const Quiver& q) {
  GComplex d;
  d.torus = {q, 3};
  d.walls = {wall(q, "1"), wall(q, "2")};
  return d;
}

JointSample origin() { return {st(0, 0), st(1, 0), st(0, 1), 1}; }

}  // namespace

TEST(PathOrdered, SingleWallSign) {
  Quiver q = test::a2();
  GComplex d;
  d.torus = {q, 3};
  d.walls = {wall(q, "1")};
  QTElement g = exp_truncated(d.torus, d.walls[0].element);
  EXPECT_EQ(path_ordered_product(d, {{st(1, 5), st(-1, 5)}}), g);
  EXPECT_EQ(path_ordered_product(d, {{st(-1, 5), st(1, 5)}}), group_inverse(d.torus, g));
  auto cr = crossings(d, {{st(1, 5), st(-1, 5)}});
  ASSERT_EQ(cr.size(), 1u);
  EXPECT_EQ(cr[0].sign, 1);
}

TEST(PathOrdered, NoCrossingIsOne) {
  Quiver q = test::a2();
  GComplex d = two_walls(q);
  EXPECT_EQ(path_ordered_product(d, {{st(1, 1), st(2, 3)}}), QTElement::one(q));
}

TEST(PathOrdered, PointOnWallRejected) {
  GComplex d = two_walls(test::a2());
  EXPECT_THROW(path_ordered_product(d, {{st(0, 1), st(2, 3)}}), GenericityError);
}

TEST(PathOrdered, CommutingWallsEitherOrder) {
  Quiver q = test::quiver_from("1, 2", "");
  GComplex d = two_walls(q);
  EXPECT_EQ(path_ordered_product(d, {{st(-1, -1), st(1, -1), st(1, 1)}}),
            path_ordered_product(d, {{st(-1, -1), st(-1, 1), st(1, 1)}}));
}

TEST(Consistency, Examples) {
  EXPECT_TRUE(consistency_check(two_walls(test::quiver_from("1, 2", "")), {origin()}));
  EXPECT_FALSE(consistency_check(two_walls(test::a2()), {origin()}));
  GComplex one;
  one.torus = {test::a2(), 3};
  one.walls = {wall(test::a2(), "1")};
  EXPECT_TRUE(consistency_check(one, {origin()}));
}

TEST(Consistency, SupportOffNormalRejected) {
  Quiver q = test::a2();
  GComplex d;
  d.torus = {q, 3};
  Wall w = wall(q, "1");
  w.element = QTElement::basis(DimVector({{"1", 1}, {"2", 1}}));
  d.walls = {w};
  EXPECT_THROW(d.validate(), PreconditionError);
}

TEST(EtaEmbed, Examples) {
  Quiver q = test::quiver_from("j, i+, i-", "a0: i+ -> i-");
  EXPECT_EQ(eta_embed(q, "a0", {{"j", 1}, {"i+", -2}}, 1),
            (Stability{{"j", 1}, {"i+", -1}, {"i-", -1}}));
  Stability k2 = eta_embed(q, "a0", {{"j", 0}, {"i+", 3}}, 2);
  EXPECT_EQ(k2.at("i+"), 1);
  EXPECT_EQ(k2.at("i-"), 2);
  EXPECT_THROW(eta_embed(q, "a0", {{"j", 0}, {"i+", 3}}, -1), DivisionError);
  EXPECT_THROW(eta_embed(q, "a0", {{"i+", 3}}, 1), DimensionVectorError);
}

TEST(ScatteringProperty, RefinementInvariant) {
  std::mt19937_64 rng(91);
  Quiver q = test::a2();
  GComplex d = two_walls(q);
  std::uniform_int_distribution<int> c(1, 9);
  for (int k = 0; k < 30; ++k) {
    Stability a = st(-c(rng), -c(rng)), b = st(c(rng), c(rng));
    Stability mid = st((a.at("1") + b.at("1")) / 2 + Rational(1, 7), (a.at("2") + b.at("2")) / 2 + Rational(1, 11));
    PathSpec coarse{{a, mid, b}};
    PathSpec fine{{a, st((a.at("1") + mid.at("1")) / 2, (a.at("2") + mid.at("2")) / 2), mid, b}};
    auto c1 = crossings(d, coarse), c2 = crossings(d, fine);
    if (c1.size() != c2.size()) continue;
    EXPECT_EQ(path_ordered_product(d, coarse), path_ordered_product(d, fine));
  }
}

TEST(ScatteringProperty, EtaEmbedLinearAndPreservesPairing) {
  std::mt19937_64 rng(92);
  Quiver q = test::quiver_from("j, i+, i-", "a0: i+ -> i-; b: j -> i-");
  std::uniform_int_distribution<int> c(-5, 5);
  for (int t = 0; t < 100; ++t) {
    Rational k = ratio(c(rng), 1 + std::abs(c(rng)));
    if (k == -1) continue;
    Stability x{{"j", c(rng)}, {"i+", c(rng)}}, y{{"j", c(rng)}, {"i+", c(rng)}};
    Rational s(c(rng));
    Stability comb{{"j", x.at("j") * s + y.at("j")}, {"i+", x.at("i+") * s + y.at("i+")}};
    Stability ex = eta_embed(q, "a0", x, k), ey = eta_embed(q, "a0", y, k), ec = eta_embed(q, "a0", comb, k);
    for (const auto& v : q.vertices()) EXPECT_EQ(ec.at(v), ex.at(v) * s + ey.at(v));
    long n = std::abs(c(rng)), m = std::abs(c(rng));
    DimVector g({{"j", m}, {"i+", n}, {"i-", n}});
    DimVector gh({{"j", m}, {"i+", n}});
    EXPECT_EQ(pair(ex, g), pair(x, gh));
  }
}
