#include "qpc/preprojective.hpp"

#include "qpc/contraction.hpp"
#include "qpc/errors.hpp"

namespace qpc {

std::string loop_name(std::string_view vertex) { return "l_" + std::string(vertex); }

QuiverWithPotential triple_qp(const Quiver& q) {
  Quiver dq = double_quiver(q);
  std::vector<Arrow> arrows = dq.arrows();
  for (const auto& v : q.vertices()) arrows.push_back({loop_name(v), v, v});
  QuiverWithPotential qp{Quiver(q.vertices(), std::move(arrows)), {}, std::nullopt};
  PathAlgebra alg = qp.algebra();
  for (const auto& a : q.arrows()) {
    Symbol x{a.id}, xs{star(a.id)};
    qp.potential.add(alg.path({x, xs, {loop_name(a.target)}}), 1);
    qp.potential.add(alg.path({xs, x, {loop_name(a.source)}}), -1);
  }
  return qp;
}

std::string RelationSet::to_string() const {
  std::string s;
  for (const auto& [v, p] : at) s += v + ": " + p.to_string() + "\n";
  return s;
}

RelationSet preprojective_relations(const Quiver& q) {
  RelationSet r{double_quiver(q), std::nullopt, {}};
  PathAlgebra alg(r.quiver);
  for (const auto& v : q.vertices()) r.at[v] = NCPoly();
  for (const auto& a : q.arrows()) {
    Symbol x{a.id}, xs{star(a.id)};
    r.at[a.target].add(alg.path({x, xs}), 1);
    r.at[a.source].add(alg.path({xs, x}), -1);
  }
  return r;
}

RelationSet cut_relations(const QuiverWithPotential& qp, const std::vector<std::string>& cut) {
  RelationSet r{qp.quiver, qp.invertible, {}};
  PathAlgebra alg = qp.algebra();
  for (const auto& l : cut) {
    const Arrow& a = qp.quiver.arrow(l);
    if (!a.is_loop()) throw PreconditionError("cut element '" + l + "' is not a loop");
    r.at[a.source] = r.at[a.source] + cyclic_derivative(alg, qp.potential, l);
  }
  return r;
}

TripleCheck contract_triple_detailed(const Quiver& q, std::string_view a0_id) {
  ContractionShape sh = contraction_shape(q, a0_id);
  QuiverWithPotential t = triple_qp(q);
  ContractionResult cr = contract_qp_detailed(t, sh.a0);
  const Quiver& tq = t.quiver;
  auto hat = [&](const std::string& id) { return hat_name(sh, tq.arrow(id)); };

  TripleCheck out;
  out.contracted = cr.qp.potential;
  PathAlgebra halg = cr.qp.algebra();
  Potential& f = out.formula;
  // l-hat [a-hat, a*-hat] for a != a0, with l-hat_{i-} on the terms that sat at i-.
  for (const auto& a : q.arrows()) {
    if (a.id == sh.a0) continue;
    Symbol x{hat(a.id)}, xs{hat(star(a.id))};
    f.add(halg.path({x, xs, {hat(loop_name(a.target))}}), 1);
    f.add(halg.path({xs, x, {hat(loop_name(a.source))}}), -1);
  }
  Symbol a0s{hat(star(sh.a0))};
  f.add(halg.path({{hat(loop_name(sh.minus))}, a0s}), 1);
  f.add(halg.path({{loop_name(sh.plus)}, a0s}), -1);

  auto expand = [&](const Word& hatted) {
    Word w;
    for (const auto& s : hatted)
      for (const auto& a : tq.arrows())
        if (hat_name(sh, a) == s.arrow) {
          Word part = hat_word(sh, a);
          w.insert(w.end(), part.begin(), part.end());
        }
    return w;
  };
  // Spelled out over Q-tilde with a0^-1, both sides read l_{i-} a0 a0^* - l_{i+} a0^* a0.
  PathAlgebra talg(tq, std::string(sh.a0));
  Symbol a0{sh.a0}, a0st{star(sh.a0)};
  Potential lhs_t, rhs_t;
  auto to_t = [&](const Word& hatted) { return talg.path(cancel_inverses(expand(hatted))); };
  lhs_t.add(to_t({{hat(loop_name(sh.minus))}, a0s}), 1);
  lhs_t.add(to_t({{loop_name(sh.plus)}, a0s}), -1);
  rhs_t.add(talg.path({{loop_name(sh.minus)}, a0, a0st}), 1);
  rhs_t.add(talg.path({{loop_name(sh.plus)}, a0st, a0}), -1);
  out.loop_identity = lhs_t == rhs_t;
  out.holds = out.loop_identity && out.contracted == out.formula;
  return out;
}

bool contract_triple_check(const Quiver& q, std::string_view a0) {
  return contract_triple_detailed(q, a0).holds;
}

AdhmCheck adhm_elimination_detailed(const Quiver& q, std::string_view a0_id) {
  ContractionShape sh = contraction_shape(q, a0_id);
  RelationSet adhm = preprojective_relations(q);
  const Quiver& dq = adhm.quiver;
  PathAlgebra alg(dq, sh.a0);

  AdhmCheck out;
  out.eliminated = RelationSet{dq, sh.a0, {}};
  for (const auto& [v, r] : adhm.at) {
    if (v == sh.minus) continue;
    if (v != sh.plus) {
      out.eliminated.at[v] = r;
      continue;
    }
    NCPoly left(alg.path(Word{{sh.a0, true}})), right(alg.path(Word{{sh.a0, false}}));
    NCPoly conj = reduce_inverses(alg, left * adhm.at.at(sh.minus) * right);
    out.eliminated.at[v] = reduce_inverses(alg, r + conj);
  }

  // Relations of the contracted quiver, each hatted arrow spelled out over Q-bar with a0^{+-1}.
  Quiver qh = contract_quiver(q, sh.a0);
  RelationSet hat_rel = preprojective_relations(qh);
  std::map<std::string, Word> spell;
  for (const auto& a : q.arrows()) {
    if (a.id == sh.a0) continue;
    std::string h = hat_name(sh, a);
    spell[h] = hat_word(sh, a);
    spell[star(h)] = hat_word(sh, dq.arrow(star(a.id)));
  }
  out.expected = RelationSet{dq, sh.a0, {}};
  for (const auto& [v, r] : hat_rel.at) {
    NCPoly e;
    for (const auto& [p, c] : r.terms()) {
      Word w;
      for (const auto& s : p.word()) {
        const Word& part = spell.at(s.arrow);
        w.insert(w.end(), part.begin(), part.end());
      }
      e.add(reduce_path(alg, alg.path(w)), c);
    }
    out.expected.at[v] = e;
  }
  out.holds = out.eliminated == out.expected;
  return out;
}

bool adhm_elimination_check(const Quiver& q, std::string_view a0) {
  return adhm_elimination_detailed(q, a0).holds;
}

}  // namespace qpc
