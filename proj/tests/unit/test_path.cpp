#include <gtest/gtest.h>

#include <random>

#include "qpc/errors.hpp"
#include "qpc/path.hpp"
#include "support.hpp"

using namespace qpc;
using test::path_of;
using test::qp_from;

namespace {

QuiverWithPotential three_cycle() {
  return qp_from("quiver C\nvertices: 1, 2, 3\narrows: c: 1 -> 2; b: 2 -> 3; a: 3 -> 1\n");
}

QuiverWithPotential cycle_quiver(int n) {
  std::string vs, as;
  for (int i = 1; i <= n; ++i) {
    vs += (i > 1 ? ", " : "") + std::to_string(i);
    as += (i > 1 ? "; " : "") + std::string("a") + std::to_string(i) + ": " + std::to_string(i) + " -> " +
          std::to_string(i % n + 1);
  }
  return qp_from("quiver C\nvertices: " + vs + "\narrows: " + as + "\n");
}

Path cycle_word(const QuiverWithPotential& qp, int n) {
  Word w;
  for (int i = n; i >= 1; --i) w.push_back({"a" + std::to_string(i), false});
  return qp.algebra().path(std::move(w));
}

}  // namespace

TEST(Path, ComposabilityChecked) {
  auto qp = three_cycle();
  EXPECT_NO_THROW(path_of(qp, {"b", "c"}));
  EXPECT_THROW(path_of(qp, {"c", "b"}), TypingError);
  EXPECT_THROW(path_of(qp, {"zz"}), LookupError);
}

TEST(CyclicNormalForm, CancelsAcrossTheSeam) {
  auto qp = qp_from(
      "quiver T\nvertices: i+, i-\narrows: a0: i+ -> i-; s: i- -> i+; l: i- -> i-\ninvert: a0\n");
  Path p = path_of(qp, {"a0^-1", "l", "a0", "s", "a0"});
  Path q = path_of(qp, {"l", "a0", "s"});
  EXPECT_EQ(cyclic_normal_form(p), cyclic_normal_form(q));
  EXPECT_EQ(cyclic_normal_form(p).word().size(), 3u);
}

TEST(CyclicNormalForm, LeastRotationStored) {
  auto qp = three_cycle();
  CyclicWord w = cyclic_normal_form(path_of(qp, {"c", "a", "b"}));
  EXPECT_EQ(w.to_string(), "a.b.c");
}

TEST(CyclicNormalForm, FullCancellationIsDegenerate) {
  auto qp = qp_from("quiver T\nvertices: 1, 2\narrows: a0: 1 -> 2\ninvert: a0\n");
  EXPECT_THROW(cyclic_normal_form(path_of(qp, {"a0", "a0^-1"})), DegenerateTermError);
}

TEST(CyclicDerivative, SingleOccurrence) {
  auto qp = three_cycle();
  Potential w;
  w.add(path_of(qp, {"a", "b", "c"}), 1);
  NCPoly d = cyclic_derivative(qp.algebra(), w, "a");
  EXPECT_EQ(d, NCPoly(path_of(qp, {"b", "c"})));
}

TEST(CyclicDerivative, LongWordWithRepeats) {
  auto qp = qp_from(
      "quiver E\nvertices: i+, i-\narrows: a0: i+ -> i-; a1: i- -> i+; l1: i- -> i-; l2: i- -> i-\n"
      "potential: 1 * a1.l1.l1.l2.l2.l2.a0\n");
  NCPoly d = cyclic_derivative(qp.algebra(), qp.potential, "a0");
  EXPECT_EQ(d, NCPoly(path_of(qp, {"a1", "l1", "l1", "l2", "l2", "l2"})));
  // l1 occurs twice: two rotations.
  NCPoly dl1 = cyclic_derivative(qp.algebra(), qp.potential, "l1");
  EXPECT_EQ(dl1.terms().size(), 2u);
  NCPoly dl2 = cyclic_derivative(qp.algebra(), qp.potential, "l2");
  EXPECT_EQ(dl2.terms().size(), 3u);
}

TEST(Substitute, LinearReplacement) {
  auto qp = qp_from("quiver S\nvertices: 1, 2\narrows: a: 2 -> 1; b: 1 -> 2; bp: 1 -> 2\n");
  PathAlgebra alg = qp.algebra();
  NCPoly p(path_of(qp, {"a", "b"}));
  NCPoly got = substitute_arrow(alg, p, {{"b", NCPoly(path_of(qp, {"bp"}), 2)}});
  EXPECT_EQ(got, NCPoly(path_of(qp, {"a", "bp"}), 2));
  EXPECT_EQ(substitute_arrow(alg, p, {{"b", NCPoly(path_of(qp, {"b"}))}}), p);
}

TEST(Substitute, CancelsToZero) {
  auto qp = qp_from(
      "quiver S\nvertices: 1, 2, 3\narrows: a: 2 -> 1; b: 1 -> 2; c: 3 -> 1; d: 2 -> 3\n"
      "potential: 1 * a.b + 1 * b.c.d\n");
  PathAlgebra alg = qp.algebra();
  NCPoly minus_cd = NCPoly(path_of(qp, {"c", "d"}), -1);
  Potential got = substitute_arrow(alg, qp.potential, {{"a", minus_cd}, {"b", NCPoly()}});
  EXPECT_TRUE(got.is_zero());
}

TEST(ReduceTrivial, PureQuadratic) {
  auto qp = qp_from("quiver R\nvertices: 1, 2\narrows: a: 2 -> 1; b: 1 -> 2\npotential: 1 * a.b\n");
  auto r = reduce_trivial(qp);
  EXPECT_TRUE(r.quiver.arrows().empty());
  EXPECT_TRUE(r.potential.is_zero());
}

TEST(ReduceTrivial, QuadraticWithCubicTail) {
  auto qp = qp_from(
      "quiver R\nvertices: 1, 2, 3\narrows: a: 2 -> 1; b: 1 -> 2; c: 3 -> 1; d: 2 -> 3\n"
      "potential: 1 * a.b + 1 * b.c.d\n");
  auto r = reduce_trivial_with_steps(qp);
  EXPECT_TRUE(r.qp.potential.is_zero());
  EXPECT_EQ(r.qp.quiver.arrows().size(), 2u);
  EXPECT_NE(r.qp.quiver.find_arrow("c"), nullptr);
  EXPECT_NE(r.qp.quiver.find_arrow("d"), nullptr);
  EXPECT_EQ(r.steps.size(), 1u);
}

TEST(ReduceTrivial, NoQuadraticPartIsIdentity) {
  auto qp = three_cycle();
  qp.potential.add(path_of(qp, {"a", "b", "c"}), 3);
  EXPECT_EQ(reduce_trivial(qp), qp);
}

TEST(PathProperty, NormalFormRotationInvariant) {
  for (int n = 1; n <= 6; ++n) {
    auto qp = cycle_quiver(n);
    Path p = cycle_word(qp, n);
    CyclicWord base = cyclic_normal_form(p);
    for (const Word& r : rotations(p.word())) {
      CyclicWord c = cyclic_normal_form(qp.algebra().path(r));
      EXPECT_EQ(c, base);
      EXPECT_EQ(cyclic_normal_form(qp.algebra().path(c.word())), c);
    }
  }
}

TEST(PathProperty, EulerIdentityForDistinctLetters) {
  for (int n = 1; n <= 6; ++n) {
    auto qp = cycle_quiver(n);
    PathAlgebra alg = qp.algebra();
    Potential w;
    w.add(cycle_word(qp, n), 1);
    NCPoly sum;
    for (const auto& a : qp.quiver.arrows())
      sum = sum + NCPoly(alg.path(a.id)) * cyclic_derivative(alg, w, a.id);
    EXPECT_EQ(potential_from(alg, sum), w * Rational(n)) << "n = " << n;
  }
}

TEST(PathProperty, CyclicDerivativeLinear) {
  std::mt19937_64 rng(21);
  auto qp = qp_from(
      "quiver L\nvertices: 1, 2\narrows: a: 1 -> 2; b: 2 -> 1; c: 2 -> 1; l: 1 -> 1\n");
  PathAlgebra alg = qp.algebra();
  std::vector<Path> cycles{path_of(qp, {"b", "a"}), path_of(qp, {"c", "a"}), path_of(qp, {"b", "a", "l"}),
                           path_of(qp, {"l", "l", "c", "a"}), path_of(qp, {"b", "a", "c", "a"}),
                           path_of(qp, {"l"})};
  std::uniform_int_distribution<int> coef(-4, 4);
  auto random_w = [&] {
    Potential w;
    for (const auto& c : cycles) w.add(c, coef(rng));
    return w;
  };
  for (int k = 0; k < 50; ++k) {
    Potential u = random_w(), v = random_w();
    Rational s(coef(rng));
    for (const auto& a : qp.quiver.arrows()) {
      NCPoly lhs = cyclic_derivative(alg, u * s + v, a.id);
      NCPoly rhs = cyclic_derivative(alg, u, a.id) * s + cyclic_derivative(alg, v, a.id);
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(PathProperty, ReductionRemovesQuadraticTerms) {
  std::mt19937_64 rng(22);
  auto base = qp_from(
      "quiver R\nvertices: 1, 2, 3\narrows: a: 2 -> 1; b: 1 -> 2; c: 3 -> 1; d: 2 -> 3; e: 3 -> 2; f: 2 -> 3\n");
  std::vector<Path> cubic{path_of(base, {"b", "c", "d"}), path_of(base, {"b", "c", "f"}),
                          path_of(base, {"d", "e", "f", "e"})};
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int k = 0; k < 40; ++k) {
    auto qp = base;
    qp.potential.add(path_of(qp, {"a", "b"}), coef(rng) == 0 ? 1 : 2);
    if (k % 2) qp.potential.add(path_of(qp, {"e", "d"}), 1);
    for (const auto& c : cubic) qp.potential.add(c, coef(rng));
    QuiverWithPotential r;
    try {
      r = reduce_trivial(qp);
    } catch (const UnsupportedReduction&) {
      continue;
    }
    EXPECT_LT(r.quiver.arrows().size(), qp.quiver.arrows().size());
    for (const auto& [w, c] : r.potential.terms()) EXPECT_NE(w.word().size(), 2u) << w.to_string();
  }
}
