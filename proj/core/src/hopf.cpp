#include "qpc/hopf.hpp"

#include <algorithm>
#include <functional>

#include "qpc/contraction.hpp"
#include "qpc/errors.hpp"

namespace qpc {

namespace {

Var slot(const std::string& v, long a) { return Var::x(v, static_cast<int>(a)); }

// Arguments of phi-side Cartan factors live in their own variables y[i,alpha].
Var phi_arg(const std::string& v, long a) {
  return Var::formal("y[" + v + "," + std::to_string(a) + "]");
}

long off(const DimVector* offset, const std::string& v) { return offset ? (*offset)[v] : 0; }

FactoredFn fac_point(const Quiver& q, const std::string& k, const Var& u, const std::string& l,
                     const Var& w) {
  // fac(u|w) for one-variable blocks u at k and w at l.
  FactoredFn r = FactoredFn::factor(w, u, q.arrow_count(k, l));
  if (k == l) r = r * FactoredFn::factor(w, u, -1);
  return r;
}

}  // namespace

ActionRatio psi_action_ratio(const Quiver& q, std::string_view vertex, const DimVector& gamma,
                             const Var& z, const DimVector* offset) {
  check_keys(q, gamma.entries());
  const std::string i(vertex);
  if (!q.has_vertex(i)) throw LookupError("no vertex '" + i + "'");
  FactoredFn r(1);
  for (const auto& v : q.vertices())
    for (long a = off(offset, v) + 1; a <= off(offset, v) + gamma[v]; ++a) {
      Var x = slot(v, a);
      r = r * fac_point(q, i, z, v, x) / fac_point(q, v, x, i, z);
    }
  return {i, gamma, r};
}

bool contraction_ratio_check(const Quiver& q, std::string_view a0, const DimVector& gamma) {
  ContractionShape sh = contraction_shape(q, a0);
  DimVector gh = contract_dim(q, a0, gamma);
  Quiver qh = contract_quiver(q, a0);
  std::map<Var, Var> sub;
  for (long a = 1; a <= gamma[sh.minus]; ++a) sub.emplace(slot(sh.minus, a), slot(sh.plus, a));
  FactoredFn lhs =
      (psi_action_ratio(q, sh.plus, gamma).ratio * psi_action_ratio(q, sh.minus, gamma).ratio)
          .rename(sub);
  FactoredFn rhs = psi_action_ratio(qh, sh.plus, gh).ratio;
  return lhs == rhs;
}

FactoredFn localization_denominator(const Quiver& q, const DimVector& g1, const DimVector& g2) {
  check_keys(q, g1.entries());
  check_keys(q, g2.entries());
  FactoredFn r(1);
  for (const auto& i : q.vertices())
    for (const auto& j : q.vertices())
      for (long a1 = 1; a1 <= g1[i]; ++a1)
        for (long a2 = g1[j] + 1; a2 <= g1[j] + g2[j]; ++a2)
          r = r * FactoredFn::factor(slot(j, a2), slot(i, a1));
  return r;
}

namespace {

void normalize(std::vector<CartanFactor>& cs) {
  std::sort(cs.begin(), cs.end(), [](const CartanFactor& a, const CartanFactor& b) {
    return std::tie(a.series, a.vertex, a.arg) < std::tie(b.series, b.vertex, b.arg);
  });
  std::vector<CartanFactor> out;
  for (const auto& c : cs) {
    if (!out.empty() && out.back().series == c.series && out.back().vertex == c.vertex &&
        out.back().arg == c.arg)
      out.back().power += c.power;
    else
      out.push_back(c);
    if (out.back().power == 0) out.pop_back();
  }
  cs = std::move(out);
}

}  // namespace

HopfWord HopfWord::of(const SymPoly& f) {
  HopfWord w;
  w.poly = f;
  return w;
}

HopfWord HopfWord::psi(std::string vertex, Var arg, int power) {
  HopfWord w;
  w.cartan.push_back({Series::Psi, std::move(vertex), std::move(arg), power});
  normalize(w.cartan);
  return w;
}

HopfWord HopfWord::phi(std::string vertex, Var arg, int power) {
  HopfWord w;
  w.cartan.push_back({Series::Phi, std::move(vertex), std::move(arg), power});
  normalize(w.cartan);
  return w;
}

HopfWord HopfWord::operator*(const HopfWord& o) const {
  if (poly && o.poly) throw ScopeError("product of two polynomial words is out of scope");
  if (poly && !o.cartan.empty())
    throw ScopeError("Cartan factors must stand to the left of the polynomial");
  HopfWord r;
  r.cartan = cartan;
  r.cartan.insert(r.cartan.end(), o.cartan.begin(), o.cartan.end());
  normalize(r.cartan);
  r.poly = poly ? poly : o.poly;
  return r;
}

std::string HopfWord::key() const {
  std::string s;
  for (const auto& c : cartan) {
    if (!s.empty()) s += "*";
    s += (c.series == Series::Psi ? "psi_" : "phi_") + c.vertex + "(" + c.arg.to_string() + ")";
    if (c.power != 1) s += "^" + std::to_string(c.power);
  }
  if (poly) {
    if (!s.empty()) s += "*";
    s += "{" + poly->to_string() + "}";
  }
  return s.empty() ? "1" : s;
}

void TensorElement::add(std::vector<HopfWord> factors, const RationalFn& c) {
  if (c.is_zero()) return;
  std::string k;
  for (const auto& f : factors) k += (k.empty() ? "" : " (x) ") + f.key();
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, Term{std::move(factors), c});
    return;
  }
  it->second.coefficient = it->second.coefficient + c;
  if (it->second.coefficient.is_zero()) terms_.erase(it);
}

bool TensorElement::operator==(const TensorElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [k, t] : terms_) {
    auto it = o.terms_.find(k);
    if (it == o.terms_.end() || !(it->second.coefficient == t.coefficient)) return false;
  }
  return true;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, t] : terms_) {
    if (!s.empty()) s += "\n";
    s += "(" + t.coefficient.to_string() + ") " + k;
  }
  return s;
}

namespace {

RationalFn one() { return RationalFn(Poly::constant(1)); }

std::vector<std::string> support(const DimVector& g) {
  std::vector<std::string> vs;
  for (const auto& [v, n] : g.entries())
    if (n) vs.push_back(v);
  return vs;
}

// The Cartan word psi_{[1,gamma]}(x) (or phi with y arguments).
HopfWord cartan_of(const DimVector& g, Series s, int power) {
  HopfWord w;
  for (const auto& [v, n] : g.entries())
    for (long a = 1; a <= n; ++a)
      w.cartan.push_back({s, v, s == Series::Psi ? slot(v, a) : phi_arg(v, a), power});
  normalize(w.cartan);
  return w;
}

void check_small(const SymPoly& f) {
  auto vs = support(f.gamma());
  long n = f.gamma().total();
  bool rank_one = n == 1;
  bool rank_11 = n == 2 && vs.size() == 2;
  if (n != 0 && !rank_one && !rank_11)
    throw ScopeError("coproduct is implemented for ranks e_i and (1,1) only");
}

TensorElement delta_poly(const SymPoly& f, bool op) {
  check_small(f);
  TensorElement t;
  if (f.gamma().is_zero()) {
    t.add({HopfWord::unit(), HopfWord::unit()}, RationalFn(f.poly()));
    return t;
  }
  HopfWord fw = HopfWord::of(f);
  if (!op) {
    t.add({cartan_of(f.gamma(), Series::Psi, 1), fw}, one());
    t.add({fw, HopfWord::unit()}, one());
  } else {
    t.add({fw, cartan_of(f.gamma(), Series::Phi, 1)}, one());
    t.add({HopfWord::unit(), fw}, one());
  }
  return t;
}

TensorElement delta(const HopfWord& w, bool op) {
  HopfWord c;
  c.cartan = w.cartan;
  if (!w.poly) {
    TensorElement t;
    t.add({c, c}, one());
    return t;
  }
  TensorElement inner = delta_poly(*w.poly, op), out;
  for (const auto& [k, term] : inner.terms())
    out.add({c * term.factors[0], c * term.factors[1]}, term.coefficient);
  return out;
}

}  // namespace

TensorElement coproduct_small(const HopfWord& w) { return delta(w, false); }
TensorElement coproduct_small(const SymPoly& f) { return delta(HopfWord::of(f), false); }
TensorElement coproduct_op_small(const HopfWord& w) { return delta(w, true); }

TensorElement apply_coproduct(const TensorElement& t, std::size_t pos, bool op) {
  TensorElement out;
  for (const auto& [k, term] : t.terms()) {
    if (pos >= term.factors.size()) throw PreconditionError("tensor slot out of range");
    TensorElement split = delta(term.factors[pos], op);
    for (const auto& [k2, d] : split.terms()) {
      std::vector<HopfWord> fs(term.factors.begin(), term.factors.begin() + pos);
      fs.insert(fs.end(), d.factors.begin(), d.factors.end());
      fs.insert(fs.end(), term.factors.begin() + pos + 1, term.factors.end());
      out.add(std::move(fs), term.coefficient * d.coefficient);
    }
  }
  return out;
}

Rational counit(const HopfWord& w) {
  if (!w.poly) return 1;
  if (w.poly->gamma().is_zero()) return w.poly->poly().constant_term();
  return 0;
}

SignedWord antipode_small(const HopfWord& w) {
  if (!w.poly) {
    HopfWord r = w;
    for (auto& c : r.cartan) c.power = -c.power;
    return {1, r};
  }
  if (!w.cartan.empty()) throw ScopeError("antipode of a mixed word is out of scope");
  const SymPoly& f = *w.poly;
  check_small(f);
  int sign = f.gamma().total() % 2 ? -1 : 1;
  // The psi side multiplies by psi^{-1} on the left; the phi side by phi^{-1} on the right.
  // Words are stored Cartan part first in both cases.
  HopfWord r = cartan_of(f.gamma(), Series::Psi, -1);
  r.poly = f;
  return {sign, r};
}

namespace {

SignedWord antipode_phi(const HopfWord& w) {
  SignedWord s = antipode_small(w);
  if (w.poly)
    for (auto& c : s.word.cartan) {
      c.series = Series::Phi;
      c.arg = phi_arg(c.vertex, c.arg.slot);
    }
  return s;
}

Rational scalar_part(const HopfWord& w) {
  return w.poly && w.poly->gamma().is_zero() ? w.poly->poly().constant_term() : Rational(1);
}

bool has_graded_poly(const HopfWord& w) { return w.poly && !w.poly->gamma().is_zero(); }

}  // namespace

RationalFn skew_pairing(const Quiver& q, const SymPoly& f, const SymPoly& g) {
  if (!(f.gamma() == g.gamma())) return RationalFn();
  if (f.gamma().is_zero()) return RationalFn(f.poly() * g.poly());
  auto vs = support(f.gamma());
  if (f.gamma().total() != 1) throw ScopeError("pairing of polynomials beyond rank e_i");
  (void)q;
  Var x = slot(vs[0], 1);
  Poly gm = g.poly().substitute({{x, Poly::variable(x) * Rational(-1)}});
  return residue_at_infinity(RationalFn(f.poly() * gm), x);
}

RationalFn skew_pairing(const Quiver& q, const HopfWord& a, const HopfWord& b) {
  Rational scalar = scalar_part(a) * scalar_part(b);
  bool pa = has_graded_poly(a), pb = has_graded_poly(b);
  if (pa && pb) return skew_pairing(q, *a.poly, *b.poly) * scalar;
  if (pa || pb) return RationalFn();
  FactoredFn r(scalar);
  for (const auto& x : a.cartan) {
    if (x.series != Series::Psi) throw ScopeError("left pairing argument must use psi");
    for (const auto& y : b.cartan) {
      if (y.series != Series::Phi) throw ScopeError("right pairing argument must use phi");
      FactoredFn ratio = fac_point(q, x.vertex, x.arg, y.vertex, y.arg) /
                         fac_point(q, y.vertex, y.arg, x.vertex, x.arg);
      for (int k = 0; k < std::abs(x.power * y.power); ++k)
        r = x.power * y.power > 0 ? r * ratio : r / ratio;
    }
  }
  return RationalFn::from(r);
}

HopfWord contract_word(const Quiver& q, std::string_view a0, const HopfWord& w) {
  ContractionShape sh = contraction_shape(q, a0);
  auto rename_arg = [&](const Var& v) {
    if (!v.is_formal()) return v.vertex == sh.minus ? slot(sh.plus, v.slot) : v;
    std::string prefix = "y[" + sh.minus + ",";
    if (v.vertex.rfind(prefix, 0) == 0) return Var::formal("y[" + sh.plus + "," + v.vertex.substr(prefix.size()));
    return v;
  };
  HopfWord out;
  std::vector<CartanFactor> plus, minus;
  for (const auto& c : w.cartan) {
    CartanFactor d = c;
    d.arg = rename_arg(c.arg);
    if (c.vertex == sh.plus)
      plus.push_back(d);
    else if (c.vertex == sh.minus)
      minus.push_back({d.series, sh.plus, d.arg, d.power});
    else
      out.cartan.push_back(d);
  }
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  if (plus != minus)
    throw ScopeError("Cartan word " + w.key() + " is not in the equal sector of the contraction");
  out.cartan.insert(out.cartan.end(), plus.begin(), plus.end());
  normalize(out.cartan);
  if (w.poly) out.poly = contract_shuffle(q, a0, *w.poly);
  return out;
}

namespace {

TensorElement contract_tensor(const Quiver& q, std::string_view a0, const TensorElement& t) {
  TensorElement out;
  for (const auto& [k, term] : t.terms()) {
    std::vector<HopfWord> fs;
    for (const auto& f : term.factors) fs.push_back(contract_word(q, a0, f));
    out.add(std::move(fs), term.coefficient);
  }
  return out;
}

using Pairing = std::function<RationalFn(const HopfWord&, const HopfWord&)>;

// sum (a1, S(b1)) a2 (x) b2 (a3, b3); `pair` evaluates (or contracts then evaluates).
TensorElement drinfeld_expand(const TensorElement& a3, const TensorElement& b3,
                              const std::function<HopfWord(const HopfWord&)>& image,
                              const Pairing& pair) {
  TensorElement out;
  for (const auto& [ka, ta] : a3.terms())
    for (const auto& [kb, tb] : b3.terms()) {
      SignedWord sb1 = antipode_phi(tb.factors[0]);
      RationalFn c = ta.coefficient * tb.coefficient * Rational(sb1.sign);
      c = c * pair(ta.factors[0], sb1.word);
      if (c.is_zero()) continue;
      c = c * pair(ta.factors[2], tb.factors[2]);
      out.add({image(ta.factors[1]), image(tb.factors[1])}, c);
    }
  return out;
}

}  // namespace

bool coproduct_contraction_check(const Quiver& q, std::string_view a0, const SymPoly& f) {
  TensorElement lhs = contract_tensor(q, a0, coproduct_small(f));
  TensorElement rhs = coproduct_small(contract_shuffle(q, a0, f));
  return lhs == rhs;
}

bool double_cross_check(const Quiver& q, std::string_view a0, const SymPoly& f, const SymPoly& g) {
  ContractionShape sh = contraction_shape(q, a0);
  for (const SymPoly* x : {&f, &g}) {
    const DimVector& gm = x->gamma();
    if (!x->gamma().is_zero() &&
        (gm.total() != 2 || gm[sh.plus] != 1 || gm[sh.minus] != 1))
      throw ScopeError("double_cross_check needs rank (1,1) on {i+, i-}");
  }
  Quiver qh = contract_quiver(q, a0);

  auto three = [](const HopfWord& w, bool op) {
    TensorElement t = op ? coproduct_op_small(w) : coproduct_small(w);
    return apply_coproduct(t, 0, op);
  };

  // Q side: pairings stay symbolic until every ingredient has been contracted.
  auto image = [&](const HopfWord& w) { return contract_word(q, a0, w); };
  Pairing contracted_pair = [&](const HopfWord& x, const HopfWord& y) {
    return skew_pairing(qh, image(x), image(y));
  };
  TensorElement lhs = drinfeld_expand(three(HopfWord::of(f), false), three(HopfWord::of(g), true),
                                      image, contracted_pair);

  SymPoly fh = contract_shuffle(q, a0, f), gh = contract_shuffle(q, a0, g);
  Pairing direct = [&](const HopfWord& x, const HopfWord& y) { return skew_pairing(qh, x, y); };
  TensorElement rhs = drinfeld_expand(three(HopfWord::of(fh), false), three(HopfWord::of(gh), true),
                                      [](const HopfWord& w) { return w; }, direct);
  return lhs == rhs;
}

Poly symmetrize(const Poly& h, const DimVector& gamma) {
  std::vector<std::map<Var, Var>> perms{{}};
  for (const auto& [v, n] : gamma.entries()) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) idx[static_cast<std::size_t>(k)] = k + 1;
    std::vector<std::map<Var, Var>> next;
    do {
      for (const auto& p : perms) {
        auto m = p;
        for (int k = 0; k < n; ++k) m.emplace(slot(v, k + 1), slot(v, idx[static_cast<std::size_t>(k)]));
        next.push_back(std::move(m));
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
    perms = std::move(next);
  }
  Poly s;
  for (const auto& p : perms) s += h.rename(p);
  return s;
}

bool pairing_normalization_check(const Quiver& q, std::string_view a0, const DimVector& gamma,
                                 const Poly& h_hat) {
  ContractionShape sh = contraction_shape(q, a0);
  DimVector gh = contract_dim(q, a0, gamma);
  std::map<Var, Var> sub;
  for (long a = 1; a <= gamma[sh.minus]; ++a) sub.emplace(slot(sh.minus, a), slot(sh.plus, a));
  Poly lhs = symmetrize(h_hat, gamma).rename(sub);
  long fact = 1;
  for (long k = 2; k <= gamma[sh.minus]; ++k) fact *= k;
  Poly rhs = symmetrize(h_hat, gh) * Rational(fact);
  return lhs == rhs;
}

}  // namespace qpc
