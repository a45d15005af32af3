#include "qpc/mutation.hpp"

#include <algorithm>
#include <set>

#include "qpc/contraction.hpp"
#include "qpc/errors.hpp"

namespace qpc {

std::string composite_name(std::string_view outgoing, std::string_view incoming) {
  return "[" + std::string(outgoing) + "*" + std::string(incoming) + "]";
}

namespace {

void check_mutable_at(const Quiver& q, std::string_view v) {
  if (!q.has_vertex(v)) throw LookupError("no vertex '" + std::string(v) + "'");
  for (const auto& a : q.arrows()) {
    if (a.source == v && a.target == v)
      throw AssumptionViolation("loop '" + a.id + "' at vertex '" + std::string(v) + "'");
    if (a.source == v && q.arrow_count(a.target, v) > 0)
      throw AssumptionViolation("2-cycle through vertex '" + std::string(v) + "' via '" +
                                a.target + "'");
  }
}

}  // namespace

QuiverWithPotential premutate(const QuiverWithPotential& qp, std::string_view vertex) {
  const Quiver& q = qp.quiver;
  check_mutable_at(q, vertex);
  for (const auto& [w, c] : qp.potential.terms())
    for (const auto& s : w.word())
      if (s.inverse) throw UnsupportedError("cannot mutate a potential containing inverted arrows");

  auto in = q.arrows_into(vertex);
  auto out = q.arrows_out_of(vertex);
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows()) {
    if (a.source == vertex || a.target == vertex)
      arrows.push_back({star(a.id), a.target, a.source});
    else
      arrows.push_back(a);
  }
  for (const Arrow* b : out)
    for (const Arrow* a : in) arrows.push_back({composite_name(b->id, a->id), a->source, b->target});

  QuiverWithPotential res;
  res.quiver = Quiver(q.vertices(), std::move(arrows));
  PathAlgebra old_alg = qp.algebra();
  PathAlgebra alg = res.algebra();

  for (const auto& [cw, c] : qp.potential.terms()) {
    const Word& w = cw.word();
    std::size_t k = 0;
    while (k < w.size() && old_alg.target(w[k]) == vertex) ++k;
    if (k == w.size()) throw InternalError("cyclic word lives entirely at the mutation vertex");
    Word rot(w.begin() + k, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + k);
    Word merged;
    for (std::size_t j = 0; j < rot.size();) {
      if (j + 1 < rot.size() && old_alg.source(rot[j]) == vertex) {
        merged.push_back({composite_name(rot[j].arrow, rot[j + 1].arrow), false});
        j += 2;
      } else {
        merged.push_back(rot[j]);
        ++j;
      }
    }
    res.potential.add(alg.path(std::move(merged)), c);
  }
  for (const Arrow* b : out)
    for (const Arrow* a : in) {
      Word tri{{composite_name(b->id, a->id), false}, {star(a->id), false}, {star(b->id), false}};
      res.potential.add(alg.path(std::move(tri)), 1);
    }
  return res;
}

MutationReport mutate(const QuiverWithPotential& qp, std::string_view vertex) {
  MutationReport r;
  r.input = qp;
  r.vertex = std::string(vertex);
  r.premutated = premutate(qp, vertex);
  ReductionResult red = reduce_trivial_with_steps(r.premutated);
  r.reduced = std::move(red.qp);
  r.reduction = std::move(red.steps);
  for (const auto& a : qp.quiver.arrows()) {
    std::string n = (a.source == vertex || a.target == vertex) ? star(a.id) : a.id;
    if (r.reduced.quiver.find_arrow(n)) r.naming[a.id] = n;
  }
  return r;
}

QuiverWithPotential rename_qp(const QuiverWithPotential& qp,
                              const std::map<std::string, SignedName>& arrows,
                              const std::map<std::string, std::string>& vertices) {
  auto vname = [&](const std::string& v) {
    auto it = vertices.find(v);
    return it == vertices.end() ? v : it->second;
  };
  auto aname = [&](const std::string& a) -> SignedName {
    auto it = arrows.find(a);
    return it == arrows.end() ? SignedName{a, 1} : it->second;
  };
  std::vector<std::string> vs;
  for (const auto& v : qp.quiver.vertices()) vs.push_back(vname(v));
  std::vector<Arrow> as;
  for (const auto& a : qp.quiver.arrows())
    as.push_back({aname(a.id).lhs, vname(a.source), vname(a.target)});
  QuiverWithPotential out;
  out.quiver = Quiver(std::move(vs), std::move(as));
  if (qp.invertible) out.invertible = aname(*qp.invertible).lhs;
  PathAlgebra alg = out.algebra();
  for (const auto& [cw, c] : qp.potential.terms()) {
    Word w;
    Rational k = c;
    for (const auto& s : cw.word()) {
      SignedName n = aname(s.arrow);
      w.push_back({n.lhs, s.inverse});
      if (n.sign < 0) k = -k;
    }
    out.potential.add(alg.path(std::move(w)), k);
  }
  return out;
}

namespace {

void check_theorem_assumptions(const Quiver& q, const ContractionShape& sh, const Quiver& qh) {
  for (const std::string& v : {sh.plus, sh.minus}) check_mutable_at(q, v);
  check_mutable_at(qh, sh.plus);
  for (const Arrow* x : q.arrows_out_of(sh.plus))
    for (const Arrow* y : q.arrows_out_of(x->target))
      if (q.arrow_count(y->target, sh.plus) > 0)
        throw AssumptionViolation("cycle of length three through '" + sh.plus + "'");
}

// Signs s_r in {0,1} (meaning +1/-1) with sum over each row = rhs (mod 2).
std::optional<std::vector<int>> solve_gf2(std::vector<std::vector<int>> rows, std::vector<int> rhs,
                                          std::size_t n) {
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || !rows[i][c]) continue;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] ^= rows[r][j];
      rhs[i] ^= rhs[r];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rhs[i]) return std::nullopt;
  std::vector<int> x(n, 0);
  for (std::size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = rhs[i];
  return x;
}

}  // namespace

TheoremCheck theorem_check_366(const QuiverWithPotential& qp, std::string_view a0) {
  TheoremCheck res;
  const Quiver& q = qp.quiver;
  ContractionShape sh = contraction_shape(q, a0);
  ContractionResult contracted = contract_qp_detailed(qp, a0);
  check_theorem_assumptions(q, sh, contracted.qp.quiver);

  if (q.arrows_out_of(sh.plus).size() == 1)
    res.sequence_case = 'A';
  else if (q.arrows_into(sh.minus).size() == 1)
    res.sequence_case = 'B';
  else
    throw AssumptionViolation("neither does i+ source only a0 nor does i- target only a0");

  QuiverWithPotential base = qp;
  base.invertible.reset();
  std::vector<std::string> order = res.sequence_case == 'A'
                                       ? std::vector<std::string>{sh.plus, sh.minus, sh.plus}
                                       : std::vector<std::string>{sh.minus, sh.plus, sh.minus};
  QuiverWithPotential l3 = base;
  for (const auto& v : order) l3 = mutate(l3, v).reduced;

  const std::string e = star(star(star(sh.a0)));
  const Arrow* ea = l3.quiver.find_arrow(e);
  if (!ea || ea->source != sh.minus || ea->target != sh.plus) {
    res.diff.push_back("expected arrow " + e + ": " + sh.minus + " -> " + sh.plus +
                       " after the three mutations");
    return res;
  }
  ContractionShape shl{e, sh.minus, sh.plus};
  res.lhs = contract_qp(l3, e);
  res.rhs = mutate(contracted.qp, sh.plus).reduced;

  auto lhs_name = [&](const std::string& id) -> std::string {
    const Arrow* a = l3.quiver.find_arrow(id);
    return a ? hat_name(shl, *a) : "<missing " + id + ">";
  };
  const auto& hat = contracted.alphabet.hat;
  std::map<std::string, std::string> predicted;
  std::vector<std::pair<std::string, std::string>> outs, ins;  // (Q-hat name, lhs stem)
  for (const auto& a : q.arrows()) {
    if (a.id == sh.a0) continue;
    const std::string& x = hat.at(a.id);
    if (res.sequence_case == 'A') {
      if (a.target == sh.plus) {
        predicted[star(x)] = lhs_name(star(composite_name(sh.a0, a.id)));
        ins.emplace_back(x, composite_name(sh.a0, a.id));
      } else if (a.target == sh.minus) {
        predicted[star(x)] = lhs_name(star(composite_name(star(sh.a0), a.id)));
        ins.emplace_back(x, a.id);
      } else if (a.source == sh.minus) {
        predicted[star(x)] = lhs_name(star(a.id));
        outs.emplace_back(x, a.id);
      } else {
        predicted[x] = lhs_name(a.id);
      }
    } else {
      if (a.target == sh.plus) {
        predicted[star(x)] = lhs_name(star(a.id));
        ins.emplace_back(x, a.id);
      } else if (a.source == sh.plus) {
        predicted[star(x)] = lhs_name(star(composite_name(a.id, star(sh.a0))));
        outs.emplace_back(x, a.id);
      } else if (a.source == sh.minus) {
        predicted[star(x)] = lhs_name(star(composite_name(a.id, sh.a0)));
        outs.emplace_back(x, composite_name(a.id, sh.a0));
      } else {
        predicted[x] = lhs_name(a.id);
      }
    }
  }
  for (const auto& [y, ystem] : outs)
    for (const auto& [x, xstem] : ins) predicted[composite_name(y, x)] = lhs_name(composite_name(ystem, xstem));

  std::set<std::string> covered;
  for (const auto& a : res.rhs.quiver.arrows()) {
    auto it = predicted.find(a.id);
    if (it == predicted.end()) {
      res.diff.push_back("no correspondence for arrow " + a.id);
      continue;
    }
    res.naming[a.id] = {it->second, 1};
    covered.insert(it->second);
  }
  for (const auto& a : res.lhs.quiver.arrows())
    if (!covered.count(a.id)) res.diff.push_back("unmatched arrow on the contracted side: " + a.id);
  if (!res.diff.empty()) return res;

  std::map<std::string, std::string> vmap{{sh.plus, sh.minus}};
  QuiverWithPotential renamed;
  try {
    renamed = rename_qp(res.rhs, res.naming, vmap);
  } catch (const Error& ex) {
    res.diff.push_back(std::string("renaming failed: ") + ex.what());
    return res;
  }
  if (!renamed.quiver.same_as(res.lhs.quiver)) {
    res.diff.push_back("quivers differ under the correspondence");
    return res;
  }

  std::vector<std::string> ids;
  std::map<std::string, std::size_t> index;
  for (const auto& [r, n] : res.naming) {
    index[n.lhs] = ids.size();
    ids.push_back(r);
  }
  std::vector<std::vector<int>> rows;
  std::vector<int> rhs;
  std::set<CyclicWord> keys;
  for (const auto& [w, c] : renamed.potential.terms()) keys.insert(w);
  for (const auto& [w, c] : res.lhs.potential.terms()) keys.insert(w);
  for (const auto& w : keys) {
    Rational l = res.lhs.potential.coefficient(w), r = renamed.potential.coefficient(w);
    if (l == 0 || r == 0) {
      res.diff.push_back("term " + w.to_string() + ": contracted side " + to_string(l) +
                         ", mutated side " + to_string(r));
      continue;
    }
    Rational ratio = l / r;
    if (ratio != 1 && ratio != -1) {
      res.diff.push_back("term " + w.to_string() + " differs by factor " + to_string(ratio));
      continue;
    }
    std::vector<int> row(ids.size(), 0);
    for (const auto& s : w.word()) row[index.at(s.arrow)] ^= 1;
    rows.push_back(std::move(row));
    rhs.push_back(ratio < 0 ? 1 : 0);
  }
  if (!res.diff.empty()) return res;
  auto signs = solve_gf2(rows, rhs, ids.size());
  if (!signs) {
    res.diff.push_back("no choice of arrow signs matches the potentials");
    return res;
  }
  for (std::size_t i = 0; i < ids.size(); ++i) res.naming[ids[i]].sign = (*signs)[i] ? -1 : 1;
  renamed = rename_qp(res.rhs, res.naming, vmap);
  res.holds = renamed.potential == res.lhs.potential && renamed.quiver.same_as(res.lhs.quiver);
  if (!res.holds) res.diff.push_back("potentials differ after sign normalization");
  return res;
}

}  // namespace qpc
