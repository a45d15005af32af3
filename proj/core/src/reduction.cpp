#include <algorithm>

#include "qpc/errors.hpp"
#include "qpc/path.hpp"

namespace qpc {

namespace {

bool is_quadratic(const CyclicWord& w) {
  const Word& s = w.word();
  return s.size() == 2 && !s[0].inverse && !s[1].inverse && s[0].arrow != s[1].arrow;
}

void eliminate(QuiverWithPotential& qp, const std::string& x, const std::string& y,
               const Rational& c) {
  if (c != 1 && c != -1)
    throw UnsupportedReduction("quadratic term " + x + "." + y + " has coefficient " +
                               to_string(c));
  if (qp.invertible && (*qp.invertible == x || *qp.invertible == y))
    throw UnsupportedReduction("quadratic term involves the invertible arrow");

  Potential reduced;
  {
    PathAlgebra alg = qp.algebra();
    NCPoly w1 = cyclic_derivative(alg, qp.potential, x) - NCPoly(alg.path(y), c);
    NCPoly w2 = cyclic_derivative(alg, qp.potential, y) - NCPoly(alg.path(x), c);
    for (const NCPoly* w : {&w1, &w2})
      if (w->mentions(x) || w->mentions(y))
        throw UnsupportedReduction("eliminating " + x + ", " + y +
                                   " would reintroduce an eliminated arrow");
    // c = +-1, so dividing by c is multiplying by c.
    Assignment assign{{y, w1 * Rational(-c)}, {x, w2 * Rational(-c)}};
    try {
      reduced = substitute_arrow(alg, qp.potential, assign);
    } catch (const TypingError& e) {
      throw UnsupportedReduction(std::string("trivial-part substitution is ill-typed: ") + e.what());
    } catch (const DegenerateTermError& e) {
      throw UnsupportedReduction(std::string("trivial-part substitution degenerates: ") + e.what());
    }
  }
  if (reduced.mentions(x) || reduced.mentions(y))
    throw InternalError("eliminated arrow survived substitution");

  std::vector<Arrow> arrows;
  for (const auto& a : qp.quiver.arrows())
    if (a.id != x && a.id != y) arrows.push_back(a);
  qp.quiver = Quiver(qp.quiver.vertices(), std::move(arrows));
  qp.potential = std::move(reduced);
}

}  // namespace

QuiverWithPotential eliminate_pair(const QuiverWithPotential& qp, const std::string& x,
                                   const std::string& y) {
  QuiverWithPotential out = qp;
  PathAlgebra alg = out.algebra();
  Rational c = out.potential.coefficient(cyclic_normal_form(alg.path(Word{{x, false}, {y, false}})));
  if (c == 0) throw PreconditionError("potential has no term " + x + "." + y);
  eliminate(out, x, y, c);
  return out;
}

ReductionResult reduce_trivial_with_steps(const QuiverWithPotential& input) {
  ReductionResult res{input, {}};
  const std::size_t max_steps = input.quiver.arrows().size() / 2 + 1;
  for (std::size_t step = 0;; ++step) {
    const auto& terms = res.qp.potential.terms();
    auto it = std::find_if(terms.begin(), terms.end(),
                           [](const auto& t) { return is_quadratic(t.first); });
    if (it == terms.end()) break;
    if (step >= max_steps) throw UnsupportedReduction("trivial-part elimination does not terminate");
    ReductionStep st{it->first.word()[0].arrow, it->first.word()[1].arrow, it->second};
    eliminate(res.qp, st.first, st.second, st.coefficient);
    res.steps.push_back(std::move(st));
  }
  return res;
}

QuiverWithPotential reduce_trivial(const QuiverWithPotential& qp) {
  return reduce_trivial_with_steps(qp).qp;
}

}  // namespace qpc
