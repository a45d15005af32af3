#include "qpc/quantum_torus.hpp"

#include "qpc/errors.hpp"

namespace qpc {

Laurent::Laurent(const Rational& c, int half_exponent) {
  if (c != 0) terms_[half_exponent] = c;
}

Rational Laurent::at(int half_exponent) const {
  auto it = terms_.find(half_exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) {
    Rational& slot = r.terms_[e];
    slot += c;
    if (slot == 0) r.terms_.erase(e);
  }
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + o * Rational(-1); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r = r + Laurent(c1 * c2, e1 + e2);
  return r;
}

Laurent Laurent::operator*(const Rational& c) const {
  Laurent r;
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_[e] = x * c;
  return r;
}

Laurent Laurent::shifted(int half_exponent) const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e + half_exponent] = c;
  return r;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (s.empty())
      s = neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string l;
    if (e != 0) {
      Rational ex(e, 2);
      ex.canonicalize();
      l = "L^" + (ex.get_den() == 1 ? qpc::to_string(ex) : "(" + qpc::to_string(ex) + ")");
    }
    if (l.empty())
      s += qpc::to_string(a);
    else if (a == 1)
      s += l;
    else
      s += qpc::to_string(a) + "*" + l;
  }
  return s;
}

QTElement QTElement::one(const Quiver& q) { return basis(DimVector::zero(q)); }

QTElement QTElement::basis(const DimVector& gamma, const Laurent& c) {
  QTElement x;
  x.add(gamma, c);
  return x;
}

void QTElement::add(const DimVector& gamma, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(gamma);
  if (it == terms_.end()) {
    terms_.emplace(gamma, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

Laurent QTElement::scalar_part() const {
  for (const auto& [g, c] : terms_)
    if (g.is_zero()) return c;
  return {};
}

QTElement QTElement::operator+(const QTElement& o) const {
  QTElement r = *this;
  for (const auto& [g, c] : o.terms_) r.add(g, c);
  return r;
}

QTElement QTElement::operator-(const QTElement& o) const { return *this + o * Rational(-1); }

QTElement QTElement::operator*(const Rational& c) const {
  QTElement r;
  for (const auto& [g, x] : terms_) r.add(g, x * c);
  return r;
}

std::string QTElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [g, c] : terms_) {
    if (!s.empty()) s += " + ";
    std::string e;
    for (const auto& [v, n] : g.entries()) e += (e.empty() ? "" : ",") + v + "=" + std::to_string(n);
    s += "(" + c.to_string() + ")*e[" + e + "]";
  }
  return s;
}

QTElement truncate(const TorusContext& ctx, const QTElement& x) {
  QTElement r;
  for (const auto& [g, c] : x.terms())
    if (g.total() <= ctx.truncation) r.add(g, c);
  return r;
}

QTElement mul(const TorusContext& ctx, const QTElement& x, const QTElement& y) {
  QTElement r;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      DimVector s = a + b;
      if (s.total() > ctx.truncation) continue;
      long chi = euler_form(ctx.quiver, a, b);
      r.add(s, (ca * cb).shifted(static_cast<int>(-2 * chi)));
    }
  return r;
}

QTElement exp_truncated(const TorusContext& ctx, const QTElement& x) {
  if (!x.scalar_part().is_zero()) throw NotInLieAlgebra("exp needs an element without e_0 part");
  QTElement r = QTElement::one(ctx.quiver), power = r;
  Rational fact = 1;
  for (int n = 1; n <= ctx.truncation; ++n) {
    power = mul(ctx, power, x);
    fact *= n;
    r = r + power * (1 / fact);
  }
  return truncate(ctx, r);
}

QTElement log_truncated(const TorusContext& ctx, const QTElement& g) {
  QTElement one = QTElement::one(ctx.quiver);
  QTElement y = truncate(ctx, g) - one;
  if (!y.scalar_part().is_zero()) throw NotInLieAlgebra("log needs scalar part 1");
  QTElement r, power = one;
  for (int n = 1; n <= ctx.truncation; ++n) {
    power = mul(ctx, power, y);
    r = r + power * Rational(n % 2 ? 1 : -1, n);
  }
  return r;
}

QTElement group_inverse(const TorusContext& ctx, const QTElement& g) {
  QTElement one = QTElement::one(ctx.quiver);
  QTElement y = truncate(ctx, g) - one;
  if (!y.scalar_part().is_zero()) throw NotInLieAlgebra("group element needs scalar part 1");
  QTElement r = one, power = one;
  for (int n = 1; n <= ctx.truncation; ++n) {
    power = mul(ctx, power, y) * Rational(-1);
    r = r + power;
  }
  return r;
}

}  // namespace qpc
