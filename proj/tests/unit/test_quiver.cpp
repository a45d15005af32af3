#include <gtest/gtest.h>

#include <random>

#include "qpc/errors.hpp"
#include "qpc/quiver.hpp"
#include "support.hpp"

using namespace qpc;
using test::a2;
using test::jordan;

namespace {

DimVector dv(std::initializer_list<std::pair<const std::string, long>> e) { return DimVector(e); }

Quiver random_quiver(std::mt19937_64& rng, int n, int m) {
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<Arrow> as;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < m; ++k) as.push_back({"a" + std::to_string(k), vs[pick(rng)], vs[pick(rng)]});
  return Quiver(vs, as);
}

DimVector random_dim(std::mt19937_64& rng, const Quiver& q, int hi) {
  DimVector g = DimVector::zero(q);
  for (const auto& v : q.vertices()) g.set(v, std::uniform_int_distribution<int>(0, hi)(rng));
  return g;
}

}  // namespace

TEST(EulerForm, A2Basis) { EXPECT_EQ(euler_form(a2(), dv({{"1", 1}, {"2", 0}}), dv({{"1", 0}, {"2", 1}})), -1); }

TEST(EulerForm, JordanVanishes) {
  for (long n = 0; n < 5; ++n) EXPECT_EQ(euler_form(jordan(), dv({{"o", n}}), dv({{"o", n}})), 0);
}

TEST(EulerForm, A2Diagonal) {
  EXPECT_EQ(euler_form(a2(), dv({{"1", 1}, {"2", 1}}), dv({{"1", 1}, {"2", 1}})), 1);
}

TEST(EulerForm, RejectsForeignKeys) {
  EXPECT_THROW(euler_form(a2(), dv({{"1", 1}}), dv({{"1", 1}, {"2", 0}})), DimensionVectorError);
}

TEST(AntisymForm, A2) {
  EXPECT_EQ(antisym_form(a2(), dv({{"1", 1}, {"2", 0}}), dv({{"1", 0}, {"2", 1}})), -1);
}

TEST(AntisymForm, TwoCycleIsSymmetric) {
  Quiver q = test::quiver_from("1, 2", "a: 1 -> 2; b: 2 -> 1");
  EXPECT_EQ(antisym_form(q, dv({{"1", 1}, {"2", 0}}), dv({{"1", 0}, {"2", 1}})), 0);
}

TEST(Quiver, NegativeEntriesRejected) { EXPECT_THROW(dv({{"1", -1}}), DimensionVectorError); }

TEST(DoubleQuiver, Examples) {
  Quiver d = double_quiver(a2());
  ASSERT_EQ(d.arrows().size(), 2u);
  EXPECT_EQ(d.arrow("a^*").source, "2");
  EXPECT_EQ(d.arrow("a^*").target, "1");

  Quiver dj = double_quiver(jordan());
  EXPECT_EQ(dj.arrow_count("o", "o"), 2);

  Quiver empty = test::quiver_from("1, 2", "");
  EXPECT_TRUE(double_quiver(empty).same_as(empty));
}

TEST(ContractVectors, SumsFramingsAndDropsMinus) {
  Quiver q = test::quiver_from("i+, i-, j", "a0: i+ -> i-");
  auto r = contract_vectors(q, "a0", dv({{"i+", 2}, {"i-", 2}, {"j", 3}}),
                            FrameVector({{"i+", 1}, {"i-", 1}, {"j", 0}}));
  EXPECT_EQ(r.gamma, dv({{"i+", 2}, {"j", 3}}));
  EXPECT_EQ(r.omega, FrameVector({{"i+", 2}, {"j", 0}}));

  auto z = contract_vectors(q, "a0", dv({{"i+", 0}, {"i-", 0}, {"j", 1}}),
                            FrameVector({{"i+", 0}, {"i-", 0}, {"j", 0}}));
  EXPECT_EQ(z.gamma, dv({{"i+", 0}, {"j", 1}}));
}

TEST(ContractVectors, UnequalRanksRejected) {
  Quiver q = test::quiver_from("i+, i-, j", "a0: i+ -> i-");
  EXPECT_THROW(contract_vectors(q, "a0", dv({{"i+", 1}, {"i-", 2}, {"j", 0}}),
                                FrameVector::zero(q)),
               PreconditionError);
}

TEST(ContractVectors, LoopCannotBeContracted) {
  EXPECT_THROW(contraction_shape(jordan(), "l"), PreconditionError);
}

TEST(QuiverProperty, EulerFormBilinear) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    Quiver q = random_quiver(rng, 4, 6);
    DimVector g1 = random_dim(rng, q, 3), g1b = random_dim(rng, q, 3), g2 = random_dim(rng, q, 3);
    EXPECT_EQ(euler_form(q, g1 + g1b, g2), euler_form(q, g1, g2) + euler_form(q, g1b, g2));
    EXPECT_EQ(euler_form(q, g2, g1 + g1b), euler_form(q, g2, g1) + euler_form(q, g2, g1b));
  }
}

TEST(QuiverProperty, AntisymFormAntisymmetric) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 200; ++k) {
    Quiver q = random_quiver(rng, 4, 7);
    DimVector g1 = random_dim(rng, q, 3), g2 = random_dim(rng, q, 3);
    EXPECT_EQ(antisym_form(q, g1, g2), -antisym_form(q, g2, g1));
    EXPECT_EQ(antisym_form(q, g1, g1), 0);
  }
}

TEST(QuiverProperty, DoubleQuiverSymmetric) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 50; ++k) {
    Quiver q = random_quiver(rng, 4, 6);
    Quiver d = double_quiver(q);
    EXPECT_EQ(d.arrows().size(), 2 * q.arrows().size());
    for (const auto& i : q.vertices())
      for (const auto& j : q.vertices()) EXPECT_EQ(d.arrow_count(i, j), d.arrow_count(j, i));
  }
}

TEST(QuiverProperty, EulerFormPreservedOnEqualSector) {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 200; ++k) {
    Quiver q = random_quiver(rng, 4, 6);
    std::vector<Arrow> as = q.arrows();
    as.push_back({"z0", "v0", "v1"});
    q = Quiver(q.vertices(), as);
    DimVector g1 = random_dim(rng, q, 3), g2 = random_dim(rng, q, 3);
    g1.set("v1", g1["v0"]);
    g2.set("v1", g2["v0"]);
    // Hand expansion of both sides.
    auto chi = [](const Quiver& qq, const DimVector& a, const DimVector& b) {
      long s = 0;
      for (const auto& v : qq.vertices()) s += a[v] * b[v];
      for (const auto& ar : qq.arrows()) s -= a[ar.source] * b[ar.target];
      return s;
    };
    ContractionShape sh = contraction_shape(q, "z0");
    std::vector<Arrow> hat;
    for (const auto& ar : q.arrows()) {
      if (ar.id == "z0") continue;
      hat.push_back({ar.id, ar.source == sh.minus ? sh.plus : ar.source,
                     ar.target == sh.minus ? sh.plus : ar.target});
    }
    std::vector<std::string> hv;
    for (const auto& v : q.vertices())
      if (v != sh.minus) hv.push_back(v);
    Quiver qh(hv, hat);
    auto c1 = contract_vectors(q, "z0", g1, FrameVector::zero(q));
    auto c2 = contract_vectors(q, "z0", g2, FrameVector::zero(q));
    EXPECT_EQ(euler_form(q, g1, g2), chi(q, g1, g2));
    EXPECT_EQ(chi(qh, c1.gamma, c2.gamma), euler_form(q, g1, g2));
  }
}
