#include <gtest/gtest.h>

#include <random>

#include "qpc/errors.hpp"
#include "qpc/mutation.hpp"
#include "qpc/suites.hpp"
#include "support.hpp"

using namespace qpc;
using test::path_of;
using test::qp_from;

TEST(Premutate, CreatesCompositeAndCubicTerm) {
  auto qp = qp_from("quiver M\nvertices: j, i+, i-\narrows: a: j -> i+; a0: i+ -> i-\n");
  auto r = premutate(qp, "i+");
  EXPECT_EQ(r.quiver.arrow("a^*").source, "i+");
  EXPECT_EQ(r.quiver.arrow("a^*").target, "j");
  EXPECT_EQ(r.quiver.arrow("a0^*").source, "i-");
  EXPECT_EQ(r.quiver.arrow("a0^*").target, "i+");
  const Arrow& comp = r.quiver.arrow(composite_name("a0", "a"));
  EXPECT_EQ(comp.source, "j");
  EXPECT_EQ(comp.target, "i-");
  EXPECT_EQ(r.quiver.arrows().size(), 3u);

  Potential want;
  want.add(path_of(r, {"[a0*a]", "a^*", "a0^*"}), 1);
  EXPECT_EQ(r.potential, want);
}

TEST(Premutate, IsolatedVertexUnchanged) {
  auto qp = qp_from("quiver M\nvertices: x, 1, 2\narrows: a: 1 -> 2\n");
  EXPECT_EQ(premutate(qp, "x"), qp);
}

TEST(Premutate, SingleArrowReversed) {
  auto qp = qp_from("quiver M\nvertices: i+, i-\narrows: a0: i+ -> i-\n");
  auto r = premutate(qp, "i+");
  ASSERT_EQ(r.quiver.arrows().size(), 1u);
  EXPECT_EQ(r.quiver.arrows()[0], (Arrow{"a0^*", "i-", "i+"}));
  EXPECT_TRUE(r.potential.is_zero());
}

TEST(Mutate, NoReductionNeeded) {
  auto qp = qp_from("quiver M\nvertices: i+, i-\narrows: a0: i+ -> i-\n");
  auto rep = mutate(qp, "i+");
  EXPECT_TRUE(rep.reduction.empty());
  EXPECT_EQ(rep.reduced, rep.premutated);
}

TEST(Mutate, LoopOrTwoCycleRejected) {
  EXPECT_THROW(mutate(qp_from("quiver J\nvertices: o\narrows: l: o -> o\n"), "o"), AssumptionViolation);
  EXPECT_THROW(mutate(qp_from("quiver T\nvertices: 1, 2\narrows: a: 1 -> 2; b: 2 -> 1\n"), "1"),
               AssumptionViolation);
}

TEST(Mutate, TwiceIsIdentityOnA3) {
  // Mutating twice at a vertex of an acyclic quiver returns the quiver up to star names.
  auto qp = qp_from("quiver A\nvertices: 1, 2, 3\narrows: a: 1 -> 2; b: 2 -> 3\n");
  auto once = mutate(qp, "2").reduced;
  auto twice = mutate(once, "2").reduced;
  EXPECT_EQ(twice.quiver.arrows().size(), 2u);
  EXPECT_TRUE(twice.potential.is_zero());
  EXPECT_EQ(twice.quiver.arrow("a^*^*").source, "1");
  EXPECT_EQ(twice.quiver.arrow("b^*^*").target, "3");
}

TEST(Theorem366, SimpleCaseA) {
  auto qp = qp_from(
      "quiver T\nvertices: j, k, i+, i-\narrows: a: j -> i+; a0: i+ -> i-; b: k -> i-\n");
  TheoremCheck t = theorem_check_366(qp, "a0");
  EXPECT_EQ(t.sequence_case, 'A');
  EXPECT_TRUE(t.holds);
  EXPECT_TRUE(t.diff.empty());
}

TEST(Theorem366, AssumptionsEnforced) {
  auto neither = qp_from(
      "quiver T\nvertices: j, k, i+, i-\narrows: a0: i+ -> i-; a: i+ -> j; b: k -> i-\n");
  EXPECT_THROW(theorem_check_366(neither, "a0"), AssumptionViolation);
  auto tri = qp_from(
      "quiver T\nvertices: j, i+, i-\narrows: a0: i+ -> i-; b: i- -> j; c: j -> i+\n"
      "potential: 1 * c.b.a0\n");
  EXPECT_THROW(theorem_check_366(tri, "a0"), AssumptionViolation);
}

TEST(Theorem366, GeneratedFamiliesHold) {
  Rng rng(366);
  for (char which : {'A', 'B'}) {
    auto fam = mutation_family(rng, which, 5);
    ASSERT_EQ(fam.size(), 5u) << which;
    for (const auto& qp : fam) {
      TheoremCheck t = theorem_check_366(qp, "a0");
      EXPECT_EQ(t.sequence_case, which);
      EXPECT_TRUE(t.holds) << qp.potential.to_string();
    }
  }
}

TEST(MutationProperty, PremutationReversesIncidentArrows) {
  std::mt19937_64 rng(41);
  std::vector<std::string> vs{"x", "1", "2", "3"};
  std::uniform_int_distribution<int> pick(0, 3);
  int tested = 0;
  for (int k = 0; k < 400 && tested < 60; ++k) {
    std::vector<Arrow> as;
    for (int e = 0; e < 5; ++e) {
      std::string s = vs[static_cast<std::size_t>(pick(rng))], t = vs[static_cast<std::size_t>(pick(rng))];
      if (s != t) as.push_back({"e" + std::to_string(e), s, t});
    }
    QuiverWithPotential qp;
    qp.quiver = Quiver(vs, as);
    QuiverWithPotential r;
    try {
      r = premutate(qp, "x");
    } catch (const AssumptionViolation&) {
      continue;
    }
    ++tested;
    EXPECT_EQ(r.quiver.vertices(), qp.quiver.vertices());
    EXPECT_EQ(r.quiver.arrow_count("x", "x"), 0);
    for (const auto& a : as) {
      if (a.source == "x" || a.target == "x") {
        EXPECT_EQ(r.quiver.find_arrow(a.id), nullptr);
        const Arrow& s = r.quiver.arrow(star(a.id));
        EXPECT_EQ(s.source, a.target);
        EXPECT_EQ(s.target, a.source);
      } else {
        EXPECT_EQ(r.quiver.arrow(a.id), a);
      }
    }
  }
  EXPECT_GE(tested, 20);
}
