#include "qpc/contraction.hpp"

#include <algorithm>

#include "qpc/errors.hpp"

namespace qpc {

std::string hat_name(const ContractionShape& sh, const Arrow& a) {
  bool from = a.source == sh.minus, to = a.target == sh.minus;
  if (from && to) return sh.a0 + "^-1*" + a.id + "*" + sh.a0;
  if (from) return a.id + "*" + sh.a0;
  if (to) return sh.a0 + "^-1*" + a.id;
  return a.id;
}

Word hat_word(const ContractionShape& sh, const Arrow& a) {
  Symbol x{a.id, false}, f{sh.a0, false}, b{sh.a0, true};
  bool from = a.source == sh.minus, to = a.target == sh.minus;
  if (from && to) return {b, x, f};
  if (from) return {x, f};
  if (to) return {b, x};
  return {x};
}

namespace {

std::string hat_vertex(const ContractionShape& sh, const std::string& v) {
  return v == sh.minus ? sh.plus : v;
}

}  // namespace

Quiver contract_quiver(const Quiver& q, std::string_view a0) {
  ContractionShape sh = contraction_shape(q, a0);
  std::vector<std::string> vs;
  for (const auto& v : q.vertices())
    if (v != sh.minus) vs.push_back(v);
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows()) {
    if (a.id == sh.a0) continue;
    arrows.push_back({hat_name(sh, a), hat_vertex(sh, a.source), hat_vertex(sh, a.target)});
  }
  try {
    return Quiver(std::move(vs), std::move(arrows));
  } catch (const PreconditionError& e) {
    throw PreconditionError(std::string("hatted arrow names collide: ") + e.what());
  }
}

HatAlphabet hat_alphabet(const Quiver& q, std::string_view a0) {
  HatAlphabet h;
  h.shape = contraction_shape(q, a0);
  Quiver qh = contract_quiver(q, a0);
  if (qh.find_arrow(h.shape.a0))
    throw PreconditionError("a hatted arrow name collides with '" + h.shape.a0 + "'");
  std::vector<Arrow> arrows = qh.arrows();
  arrows.push_back(q.arrow(a0));
  h.combined = Quiver(q.vertices(), std::move(arrows));
  for (const auto& a : q.arrows())
    if (a.id != h.shape.a0) h.hat[a.id] = hat_name(h.shape, a);
  h.ends_ = {};
  for (const auto& a : q.arrows())
    h.ends_[a.id] = {a.source == h.shape.minus, a.target == h.shape.minus};
  return h;
}

Word HatAlphabet::rewrite(const Word& q_word) const {
  Word out;
  Symbol f{shape.a0, false}, b{shape.a0, true};
  for (const auto& s : q_word) {
    if (s.arrow == shape.a0) {
      out.push_back(s);
      continue;
    }
    if (s.inverse) throw TypingError("only '" + shape.a0 + "' may appear inverted");
    auto it = hat.find(s.arrow);
    if (it == hat.end()) throw LookupError("no arrow '" + s.arrow + "'");
    auto [from, to] = ends_.at(s.arrow);
    Symbol h{it->second, false};
    if (to) out.push_back(f);
    out.push_back(h);
    if (from) out.push_back(b);
  }
  return cancel_inverses(out);
}

ContractionResult contract_qp_detailed(const QuiverWithPotential& qp, std::string_view a0) {
  ContractionResult r{{}, hat_alphabet(qp.quiver, a0)};
  if (qp.invertible && *qp.invertible != a0)
    throw UnsupportedError("only one arrow may be formally inverted at a time");
  r.qp.quiver = contract_quiver(qp.quiver, a0);
  PathAlgebra comb = r.alphabet.algebra();
  for (const auto& [w, c] : qp.potential.terms()) {
    CyclicWord cw = cyclic_normal_form(comb.path(r.alphabet.rewrite(w.word())));
    for (const auto& s : cw.word())
      if (s.arrow == r.alphabet.shape.a0)
        throw InternalError("a0 survived contraction in " + cw.to_string());
    r.qp.potential.add(cw, c);
  }
  r.qp.validate();
  return r;
}

QuiverWithPotential contract_qp(const QuiverWithPotential& qp, std::string_view a0) {
  return contract_qp_detailed(qp, a0).qp;
}

template <class F>
void Representation<F>::validate(const Quiver& q) const {
  check_keys(q, dims);
  if (maps.size() != q.arrows().size())
    throw DimensionVectorError("representation must give one matrix per arrow");
  for (const auto& a : q.arrows()) {
    auto it = maps.find(a.id);
    if (it == maps.end()) throw DimensionVectorError("no matrix for arrow '" + a.id + "'");
    if (it->second.rows() != static_cast<std::size_t>(dims.at(a.target)) ||
        it->second.cols() != static_cast<std::size_t>(dims.at(a.source)))
      throw DimensionVectorError("matrix for '" + a.id + "' has the wrong shape");
    if (it->second.field() != field) throw DimensionVectorError("mixed fields in representation");
  }
}

template <class F>
Representation<F> contract_rep(const Quiver& q, std::string_view a0, const Representation<F>& m) {
  ContractionShape sh = contraction_shape(q, a0);
  m.validate(q);
  const Matrix<F>& ma0 = m.maps.at(sh.a0);
  if (ma0.rows() != ma0.cols())
    throw HeartLocusError("M_a0 is not square: ranks at i+ and i- differ");
  auto inv = ma0.inverse();
  if (!inv) throw HeartLocusError("M_a0 is singular");

  Representation<F> out;
  out.field = m.field;
  out.dims = m.dims;
  out.dims.erase(sh.minus);
  for (const auto& a : q.arrows()) {
    if (a.id == sh.a0) continue;
    Matrix<F> x = m.maps.at(a.id);
    if (a.target == sh.minus) x = *inv * x;
    if (a.source == sh.minus) x = x * ma0;
    out.maps.emplace(hat_name(sh, a), std::move(x));
  }
  return out;
}

template <class F>
Matrix<F> evaluate_path(const Quiver& q, const Representation<F>& m, const Path& p) {
  if (p.is_idempotent())
    return Matrix<F>::identity(static_cast<std::size_t>(m.dims.at(p.source())), m.field);
  Matrix<F> acc = Matrix<F>::identity(static_cast<std::size_t>(m.dims.at(p.target())), m.field);
  for (const auto& s : p.word()) {
    q.arrow(s.arrow);
    const Matrix<F>& x = m.maps.at(s.arrow);
    if (s.inverse) {
      auto inv = x.inverse();
      if (!inv) throw HeartLocusError("cannot invert M_" + s.arrow);
      acc = acc * *inv;
    } else {
      acc = acc * x;
    }
  }
  return acc;
}

template struct Representation<Rational>;
template struct Representation<Fp>;
template Representation<Rational> contract_rep(const Quiver&, std::string_view,
                                               const Representation<Rational>&);
template Representation<Fp> contract_rep(const Quiver&, std::string_view,
                                         const Representation<Fp>&);
template Matrix<Rational> evaluate_path(const Quiver&, const Representation<Rational>&,
                                        const Path&);
template Matrix<Fp> evaluate_path(const Quiver&, const Representation<Fp>&, const Path&);

HiggsResult higgs(const QuiverWithPotential& qp, std::string_view a0) {
  HiggsResult r;
  ContractionResult c = contract_qp_detailed(qp, a0);
  r.contracted = c.qp;
  r.higgsed = c.qp;

  std::vector<std::pair<std::string, std::string>> massive;
  for (const auto& [w, k] : qp.potential.terms()) {
    std::size_t n = 0;
    for (const auto& s : w.word()) n += s.arrow == a0;
    if (n == 0) continue;
    if (w.word().size() <= 2)
      throw UnsupportedError("a0 appears in a quadratic term " + w.to_string());
    if (w.word().size() == 3 && n == 1) {
      Word rot = w.word();
      while (rot.front().arrow != a0) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      // a0.b.c with c acting first; after contraction b-hat.c-hat is a mass term.
      massive.emplace_back(c.alphabet.hat.at(rot[1].arrow), c.alphabet.hat.at(rot[2].arrow));
    }
  }
  for (const auto& [x, y] : massive) {
    if (!r.higgsed.quiver.find_arrow(x) || !r.higgsed.quiver.find_arrow(y)) continue;
    PathAlgebra alg = r.higgsed.algebra();
    if (r.higgsed.potential.coefficient(cyclic_normal_form(alg.path(Word{{x, false}, {y, false}}))) ==
        0)
      continue;
    r.higgsed = eliminate_pair(r.higgsed, x, y);
    r.cubic_terms_integrated = true;
  }
  r.agrees_with_contraction = r.higgsed == r.contracted;
  return r;
}

}  // namespace qpc
