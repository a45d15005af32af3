#include "qpc/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "qpc/errors.hpp"

namespace qpc {

std::string Var::to_string() const {
  if (is_formal()) return vertex;
  return "x[" + vertex + "," + std::to_string(slot) + "]";
}

bool GrLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

namespace {

Poly::Terms lift(const Poly& p, const std::vector<Var>& to) {
  if (p.vars() == to) return p.terms();
  std::vector<std::size_t> pos;
  for (const auto& v : p.vars()) {
    auto it = std::lower_bound(to.begin(), to.end(), v);
    if (it == to.end() || !(*it == v)) throw InternalError("variable missing when lifting");
    pos.push_back(static_cast<std::size_t>(it - to.begin()));
  }
  Poly::Terms out;
  for (const auto& [m, c] : p.terms()) {
    Monomial n(to.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) n[pos[i]] = m[i];
    out.emplace(std::move(n), c);
  }
  return out;
}

void add_into(Poly::Terms& t, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

}  // namespace

std::vector<Var> Poly::merge_vars(const std::vector<Var>& a, const std::vector<Var>& b) {
  std::vector<Var> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void Poly::add_term(const Monomial& m, const Rational& c) { add_into(terms_, m, c); }

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.add_term({}, c);
  return p;
}

Poly Poly::variable(const Var& v) {
  Poly p;
  p.vars_ = {v};
  p.add_term({1}, 1);
  return p;
}

Poly Poly::linear(const Var& a, const std::optional<Var>& b) {
  if (!b) return variable(a);
  return variable(a) - variable(*b);
}

bool Poly::is_constant() const { return terms_.empty() || degree() == 0; }

Rational Poly::constant_term() const {
  Monomial z(vars_.size(), 0);
  auto it = terms_.find(z);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  const Monomial& m = terms_.begin()->first;
  return std::accumulate(m.begin(), m.end(), 0);
}

int Poly::degree_in(const Var& v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || !(*it == v)) return terms_.empty() ? -1 : 0;
  std::size_t i = static_cast<std::size_t>(it - vars_.begin());
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
  return d;
}

std::vector<Var> Poly::support() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (const auto& [m, c] : terms_)
      if (m[i]) {
        out.push_back(vars_[i]);
        break;
      }
  return out;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree();
  for (const auto& [m, c] : terms_)
    if (std::accumulate(m.begin(), m.end(), 0) != d) return false;
  return true;
}

Rational Poly::coefficient(const std::map<Var, int>& mono) const {
  Monomial m(vars_.size(), 0);
  for (const auto& [v, e] : mono) {
    if (e == 0) continue;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || !(*it == v)) return 0;
    m[static_cast<std::size_t>(it - vars_.begin())] = e;
  }
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.vars_ = merge_vars(vars_, o.vars_);
  r.terms_ = lift(*this, r.vars_);
  for (const auto& [m, c] : lift(o, r.vars_)) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const { return *this * Rational(-1); }

Poly Poly::operator*(const Rational& c) const {
  Poly r;
  r.vars_ = vars_;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, k * c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  r.vars_ = merge_vars(vars_, o.vars_);
  Terms a = lift(*this, r.vars_), b = lift(o, r.vars_);
  Monomial m(r.vars_.size());
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (vars_ == o.vars_) return terms_ == o.terms_;
  return (*this - o).is_zero();
}

Poly Poly::mul_linear(const Var& a, const std::optional<Var>& b) const {
  Poly r;
  r.vars_ = vars_;
  r.vars_ = merge_vars(r.vars_, {a});
  if (b) r.vars_ = merge_vars(r.vars_, {*b});
  Terms t = lift(*this, r.vars_);
  std::size_t ia = static_cast<std::size_t>(std::lower_bound(r.vars_.begin(), r.vars_.end(), a) -
                                            r.vars_.begin());
  for (const auto& [m, c] : t) {
    Monomial n = m;
    ++n[ia];
    r.add_term(n, c);
  }
  if (b) {
    std::size_t ib = static_cast<std::size_t>(
        std::lower_bound(r.vars_.begin(), r.vars_.end(), *b) - r.vars_.begin());
    for (const auto& [m, c] : t) {
      Monomial n = m;
      ++n[ib];
      r.add_term(n, -c);
    }
  }
  return r;
}

std::optional<Poly> Poly::divide_linear(const Var& a, const std::optional<Var>& b) const {
  if (b && *b == a) throw DivisionError("division by zero factor");
  if (b && *b < a) {
    auto q = divide_linear(*b, a);
    if (!q) return std::nullopt;
    return -*q;
  }
  Poly q;
  q.vars_ = merge_vars(vars_, {a});
  if (b) q.vars_ = merge_vars(q.vars_, {*b});
  Terms r = lift(*this, q.vars_);
  auto index = [&](const Var& v) {
    return static_cast<std::size_t>(std::lower_bound(q.vars_.begin(), q.vars_.end(), v) -
                                    q.vars_.begin());
  };
  std::size_t ia = index(a), ib = b ? index(*b) : 0;
  while (!r.empty()) {
    auto it = r.begin();
    Monomial m = it->first;
    Rational c = it->second;
    if (m[ia] == 0) return std::nullopt;
    r.erase(it);
    --m[ia];
    add_into(q.terms_, m, c);
    if (b) {
      ++m[ib];
      add_into(r, m, c);
    }
  }
  return q;
}

Poly Poly::rename(const std::map<Var, Var>& m) const {
  std::vector<Var> target;
  std::vector<Var> mapped;
  for (const auto& v : vars_) {
    auto it = m.find(v);
    mapped.push_back(it == m.end() ? v : it->second);
  }
  target = mapped;
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  std::vector<std::size_t> pos;
  for (const auto& v : mapped)
    pos.push_back(static_cast<std::size_t>(std::lower_bound(target.begin(), target.end(), v) -
                                           target.begin()));
  Poly r;
  r.vars_ = target;
  for (const auto& [mono, c] : terms_) {
    Monomial n(target.size(), 0);
    for (std::size_t i = 0; i < mono.size(); ++i) n[pos[i]] += mono[i];
    r.add_term(n, c);
  }
  return r;
}

Poly Poly::substitute(const std::map<Var, Poly>& m) const {
  Poly out;
  std::map<std::pair<std::size_t, int>, Poly> powers;
  auto power = [&](std::size_t i, int e) -> const Poly& {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto sub = m.find(vars_[i]);
    Poly base = sub == m.end() ? variable(vars_[i]) : sub->second;
    Poly r = constant(1);
    for (int k = 0; k < e; ++k) r = r * base;
    return powers.emplace(key, std::move(r)).first->second;
  };
  for (const auto& [mono, c] : terms_) {
    Poly t = constant(c);
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (mono[i]) t = t * power(i, mono[i]);
    out += t;
  }
  return out;
}

std::map<int, Poly> Poly::coefficients_in(const Var& v) const {
  std::map<int, Poly> out;
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  bool present = it != vars_.end() && *it == v;
  std::size_t i = static_cast<std::size_t>(it - vars_.begin());
  for (const auto& [m, c] : terms_) {
    int e = present ? m[i] : 0;
    Monomial n = m;
    if (present) n[i] = 0;
    Poly& slot = out[e];
    if (slot.vars_.empty() && !vars_.empty()) slot.vars_ = vars_;
    slot.add_term(n, c);
  }
  return out;
}

Poly Poly::homogeneous_part(int d) const {
  Poly r;
  r.vars_ = vars_;
  for (const auto& [m, c] : terms_)
    if (std::accumulate(m.begin(), m.end(), 0) == d) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::over(const std::vector<Var>& vars) const {
  std::vector<std::optional<std::size_t>> pos;
  for (const auto& v : vars_) {
    auto it = std::lower_bound(vars.begin(), vars.end(), v);
    if (it != vars.end() && *it == v)
      pos.push_back(static_cast<std::size_t>(it - vars.begin()));
    else
      pos.push_back(std::nullopt);
  }
  Poly r;
  r.vars_ = vars;
  for (const auto& [m, c] : terms_) {
    Monomial n(vars.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!pos[i])
        throw PreconditionError("polynomial uses variable " + vars_[i].to_string() +
                                " outside its range");
      n[*pos[i]] = m[i];
    }
    r.terms_.emplace(std::move(n), c);
  }
  return r;
}

std::map<std::map<Var, int>, Rational> Poly::sparse() const {
  std::map<std::map<Var, int>, Rational> out;
  for (const auto& [m, c] : terms_) {
    std::map<Var, int> k;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) k[vars_[i]] = m[i];
    out[k] = c;
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i].to_string();
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    Rational a = first ? c : Rational(abs(c));
    if (!first) out += c < 0 ? " - " : " + ";
    if (mono.empty())
      out += qpc::to_string(a);
    else if (a == 1)
      out += mono;
    else if (a == -1)
      out += "-" + mono;
    else
      out += qpc::to_string(a) + "*" + mono;
    first = false;
  }
  return out;
}

std::string LinearFactor::to_string() const {
  if (!tail) return lead.to_string();
  return "(" + lead.to_string() + " - " + tail->to_string() + ")";
}

int normalize_factor(LinearFactor& f) {
  if (f.tail && *f.tail < f.lead) {
    std::swap(f.lead, *f.tail);
    return -1;
  }
  return 1;
}

FactoredFn FactoredFn::factor(const Var& a, const std::optional<Var>& b, int power) {
  FactoredFn f;
  if (power == 0) return f;
  if (b && *b == a) {
    if (power < 0) throw DivisionError("division by the zero factor " + a.to_string() + " - " + a.to_string());
    f.constant_ = 0;
    return f;
  }
  LinearFactor lf{a, b};
  int s = normalize_factor(lf);
  if (s < 0 && (power % 2)) f.constant_ = -1;
  f.exponents_[lf] = power;
  return f;
}

FactoredFn FactoredFn::operator*(const FactoredFn& o) const {
  FactoredFn r;
  r.constant_ = constant_ * o.constant_;
  if (r.constant_ == 0) return r;
  r.exponents_ = exponents_;
  for (const auto& [f, e] : o.exponents_) {
    int& x = r.exponents_[f];
    x += e;
    if (x == 0) r.exponents_.erase(f);
  }
  return r;
}

FactoredFn FactoredFn::inverse() const {
  if (constant_ == 0) throw DivisionError("inverse of zero");
  FactoredFn r;
  r.constant_ = 1 / constant_;
  for (const auto& [f, e] : exponents_) r.exponents_[f] = -e;
  return r;
}

FactoredFn FactoredFn::operator/(const FactoredFn& o) const { return *this * o.inverse(); }

FactoredFn FactoredFn::rename(const std::map<Var, Var>& m) const {
  auto ren = [&](const Var& v) {
    auto it = m.find(v);
    return it == m.end() ? v : it->second;
  };
  FactoredFn r(constant_);
  for (const auto& [f, e] : exponents_) {
    std::optional<Var> t;
    if (f.tail) t = ren(*f.tail);
    r = r * factor(ren(f.lead), t, e);
  }
  return r;
}

std::string FactoredFn::to_string() const {
  std::string num, den;
  for (const auto& [f, e] : exponents_) {
    std::string s = f.to_string() + (std::abs(e) > 1 ? "^" + std::to_string(std::abs(e)) : "");
    std::string& dst = e > 0 ? num : den;
    if (!dst.empty()) dst += "*";
    dst += s;
  }
  std::string out = qpc::to_string(constant_);
  if (!num.empty()) out += "*" + num;
  if (!den.empty()) out += " / (" + den + ")";
  return out;
}

RationalFn::RationalFn(Poly num, std::map<LinearFactor, int> den)
    : num_(std::move(num)), den_(std::move(den)) {
  for (const auto& [f, e] : den_) {
    LinearFactor g = f;
    if (normalize_factor(g) < 0 || e <= 0) throw InternalError("denominator factor not normalized");
  }
  reduce();
}

RationalFn RationalFn::from(const FactoredFn& f) {
  Poly num = Poly::constant(f.constant());
  std::map<LinearFactor, int> den;
  for (const auto& [lf, e] : f.exponents()) {
    if (e > 0)
      for (int k = 0; k < e; ++k) num = num.mul_linear(lf.lead, lf.tail);
    else
      den[lf] = -e;
  }
  return RationalFn(std::move(num), std::move(den));
}

void RationalFn::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = num_.divide_linear(it->first.lead, it->first.tail);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

Poly RationalFn::denominator_poly() const {
  Poly d = Poly::constant(1);
  for (const auto& [f, e] : den_)
    for (int k = 0; k < e; ++k) d = d.mul_linear(f.lead, f.tail);
  return d;
}

namespace {

Poly times_factors(Poly p, const std::map<LinearFactor, int>& fs) {
  for (const auto& [f, e] : fs)
    for (int k = 0; k < e; ++k) p = p.mul_linear(f.lead, f.tail);
  return p;
}

}  // namespace

RationalFn RationalFn::operator+(const RationalFn& o) const {
  std::map<LinearFactor, int> common = den_;
  for (const auto& [f, e] : o.den_) common[f] = std::max(common[f], e);
  std::map<LinearFactor, int> ma, mb;
  for (const auto& [f, e] : common) {
    auto a = den_.find(f);
    auto b = o.den_.find(f);
    int ea = a == den_.end() ? 0 : a->second, eb = b == o.den_.end() ? 0 : b->second;
    if (e - ea) ma[f] = e - ea;
    if (e - eb) mb[f] = e - eb;
  }
  return RationalFn(times_factors(num_, ma) + times_factors(o.num_, mb), common);
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + o * Rational(-1); }

RationalFn RationalFn::operator*(const RationalFn& o) const {
  std::map<LinearFactor, int> d = den_;
  for (const auto& [f, e] : o.den_) d[f] += e;
  return RationalFn(num_ * o.num_, d);
}

RationalFn RationalFn::operator*(const Rational& c) const {
  RationalFn r = *this;
  r.num_ = r.num_ * c;
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

RationalFn RationalFn::divide(const FactoredFn& f) const { return *this * from(f.inverse()); }

RationalFn RationalFn::rename(const std::map<Var, Var>& m) const {
  Poly num = num_.rename(m);
  FactoredFn den(1);
  for (const auto& [f, e] : den_) {
    std::optional<Var> t;
    auto ren = [&](const Var& v) {
      auto it = m.find(v);
      return it == m.end() ? v : it->second;
    };
    if (f.tail) t = ren(*f.tail);
    den = den * FactoredFn::factor(ren(f.lead), t, e);
  }
  if (den.is_zero()) throw DivisionError("denominator vanishes after substitution");
  return RationalFn(num, {}).divide(den);
}

bool RationalFn::operator==(const RationalFn& o) const { return den_ == o.den_ && num_ == o.num_; }

std::string RationalFn::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string d;
  for (const auto& [f, e] : den_) {
    if (!d.empty()) d += "*";
    d += f.to_string() + (e > 1 ? "^" + std::to_string(e) : "");
  }
  return "(" + num_.to_string() + ") / (" + d + ")";
}

RationalFn residue_at_infinity(const RationalFn& h, const Var& v) {
  std::map<LinearFactor, int> with, without;
  for (const auto& [f, e] : h.denominator()) {
    bool uses = f.lead == v || (f.tail && *f.tail == v);
    (uses ? with : without)[f] = e;
  }
  Poly d = times_factors(Poly::constant(1), with);
  std::map<int, Poly> n = h.numerator().coefficients_in(v);
  std::map<int, Poly> dc = d.coefficients_in(v);
  int m = dc.empty() ? 0 : dc.rbegin()->first;
  if (m == 0) return RationalFn();
  const Poly& lcp = dc.rbegin()->second;
  if (!lcp.is_constant() || lcp.is_zero()) throw InternalError("non-constant leading coefficient");
  Rational lc = lcp.constant_term();
  // Long division in v; only the remainder's v^(m-1) coefficient matters.
  for (int deg = n.empty() ? -1 : n.rbegin()->first; deg >= m; --deg) {
    auto it = n.find(deg);
    if (it == n.end() || it->second.is_zero()) continue;
    Poly q = it->second * Rational(1 / lc);
    for (const auto& [k, c] : dc) {
      Poly& slot = n[deg - m + k];
      slot = slot - q * c;
    }
  }
  auto it = n.find(m - 1);
  if (it == n.end()) return RationalFn();
  Poly r = it->second * Rational(-1 / lc);
  return RationalFn(r, without);
}

}  // namespace qpc
