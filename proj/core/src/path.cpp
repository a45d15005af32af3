#include "qpc/path.hpp"

#include <algorithm>

#include "qpc/errors.hpp"

namespace qpc {

std::string word_to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += w[i].to_string();
  }
  return out;
}

Path Path::idempotent(std::string vertex) {
  Path p;
  p.source_ = vertex;
  p.target_ = std::move(vertex);
  return p;
}

Path Path::after(const Path& rhs) const {
  if (rhs.target_ != source_)
    throw TypingError("cannot compose " + to_string() + " after " + rhs.to_string());
  Path p;
  p.word_ = word_;
  p.word_.insert(p.word_.end(), rhs.word_.begin(), rhs.word_.end());
  p.source_ = rhs.source_;
  p.target_ = target_;
  return p;
}

std::string Path::to_string() const {
  if (word_.empty()) return "e[" + source_ + "]";
  return word_to_string(word_);
}

PathAlgebra::PathAlgebra(const Quiver& q, std::optional<std::string> invertible)
    : quiver_(q), invertible_(std::move(invertible)) {
  if (invertible_) {
    const Arrow& a = q.arrow(*invertible_);
    if (a.is_loop()) throw ContractionUndefined("the invertible arrow may not be a loop");
  }
}

void PathAlgebra::check_symbol(const Symbol& s) const {
  quiver_.arrow(s.arrow);
  if (s.inverse && (!invertible_ || *invertible_ != s.arrow))
    throw TypingError("arrow '" + s.arrow + "' is not designated invertible");
}

std::string PathAlgebra::source(const Symbol& s) const {
  check_symbol(s);
  const Arrow& a = quiver_.arrow(s.arrow);
  return s.inverse ? a.target : a.source;
}

std::string PathAlgebra::target(const Symbol& s) const {
  check_symbol(s);
  const Arrow& a = quiver_.arrow(s.arrow);
  return s.inverse ? a.source : a.target;
}

Path PathAlgebra::path(Word w) const {
  if (w.empty()) throw TypingError("use idempotent() for length-0 paths");
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (target(w[k + 1]) != source(w[k]))
      throw TypingError("'" + w[k].to_string() + "' cannot follow '" + w[k + 1].to_string() + "'");
  }
  Path p;
  p.source_ = source(w.back());
  p.target_ = target(w.front());
  p.word_ = std::move(w);
  return p;
}

Path PathAlgebra::idempotent(std::string_view vertex) const {
  if (!quiver_.has_vertex(vertex)) throw LookupError("no vertex '" + std::string(vertex) + "'");
  return Path::idempotent(std::string(vertex));
}

NCPoly::NCPoly(const Path& p, const Rational& c) { add(p, c); }

void NCPoly::add(const Path& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational NCPoly::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool NCPoly::mentions(std::string_view arrow) const {
  for (const auto& [p, c] : terms_)
    for (const auto& s : p.word())
      if (s.arrow == arrow) return true;
  return false;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  for (const auto& [p, c] : o.terms_) r.add(p, c);
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator-() const { return *this * Rational(-1); }

NCPoly NCPoly::operator*(const Rational& c) const {
  NCPoly r;
  if (c == 0) return r;
  for (const auto& [p, k] : terms_) r.terms_.emplace(p, k * c);
  return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  NCPoly r;
  for (const auto& [p, c] : terms_)
    for (const auto& [q, d] : o.terms_)
      if (q.target() == p.source()) r.add(p.after(q), c * d);
  return r;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (first) {
      out += qpc::to_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += qpc::to_string(Rational(abs(c)));
    }
    out += " * " + p.to_string();
    first = false;
  }
  return out;
}

Word cancel_inverses(const Word& w) {
  Word out;
  for (const auto& s : w) {
    if (!out.empty() && out.back() == s.inverted())
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

Path reduce_path(const PathAlgebra& alg, const Path& p) {
  Word w = cancel_inverses(p.word());
  if (w.size() == p.word().size()) return p;
  if (w.empty()) return Path::idempotent(p.source());
  return alg.path(std::move(w));
}

NCPoly reduce_inverses(const PathAlgebra& alg, const NCPoly& p) {
  NCPoly r;
  for (const auto& [path, c] : p.terms()) r.add(reduce_path(alg, path), c);
  return r;
}

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word r(w.begin() + k, w.end());
    r.insert(r.end(), w.begin(), w.begin() + k);
    out.push_back(std::move(r));
  }
  return out;
}

CyclicWord cyclic_normal_form(const Path& closed) {
  if (!closed.is_closed()) throw TypingError("cyclic word of an open path " + closed.to_string());
  Word w = cancel_inverses(closed.word());
  while (w.size() >= 2 && w.front() == w.back().inverted()) {
    w.pop_back();
    w.erase(w.begin());
  }
  if (w.empty())
    throw DegenerateTermError("cyclic word " + closed.to_string() + " cancels to an idempotent");
  CyclicWord cw;
  cw.word_ = w;
  for (auto& r : rotations(w))
    if (r < cw.word_) cw.word_ = std::move(r);
  return cw;
}

void Potential::add(const CyclicWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Potential::coefficient(const CyclicWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Potential::mentions(std::string_view arrow) const {
  for (const auto& [w, c] : terms_)
    for (const auto& s : w.word())
      if (s.arrow == arrow) return true;
  return false;
}

Potential Potential::operator+(const Potential& o) const {
  Potential r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

Potential Potential::operator-(const Potential& o) const { return *this + o * Rational(-1); }

Potential Potential::operator*(const Rational& c) const {
  Potential r;
  if (c == 0) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

std::string Potential::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (first)
      out += qpc::to_string(c);
    else
      out += (c < 0 ? " - " : " + ") + qpc::to_string(Rational(abs(c)));
    out += " * " + w.to_string();
    first = false;
  }
  return out;
}

void QuiverWithPotential::validate() const {
  PathAlgebra alg = algebra();
  for (const auto& [w, c] : potential.terms()) {
    Path p = alg.path(w.word());
    if (!p.is_closed()) throw TypingError("potential term " + w.to_string() + " is not closed");
  }
}

Path closed_path(const PathAlgebra& alg, const CyclicWord& w) { return alg.path(w.word()); }

Potential potential_from(const PathAlgebra& alg, const NCPoly& closed_terms) {
  Potential w;
  for (const auto& [p, c] : closed_terms.terms()) w.add(reduce_path(alg, p), c);
  return w;
}

NCPoly cyclic_derivative(const PathAlgebra& alg, const Potential& w, std::string_view arrow) {
  NCPoly out;
  for (const auto& [cw, c] : w.terms()) {
    const Word& word = cw.word();
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (word[k].arrow != arrow || word[k].inverse) continue;
      Word d(word.begin() + k + 1, word.end());
      d.insert(d.end(), word.begin(), word.begin() + k);
      if (d.empty())
        out.add(alg.idempotent(alg.target(word[k])), c);
      else
        out.add(alg.path(std::move(d)), c);
    }
  }
  return out;
}

namespace {

void check_assignment(const PathAlgebra& alg, const Assignment& assign) {
  for (const auto& [id, poly] : assign) {
    const Arrow& a = alg.quiver().arrow(id);
    for (const auto& [p, c] : poly.terms())
      if (p.source() != a.source || p.target() != a.target)
        throw TypingError("replacement " + p.to_string() + " for '" + id +
                          "' has the wrong endpoints");
  }
}

NCPoly expand(const PathAlgebra& alg, const Path& p, const Rational& c, const Assignment& assign) {
  NCPoly acc(Path::idempotent(p.source()), c);
  const Word& w = p.word();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto found = assign.find(it->arrow);
    if (found == assign.end()) {
      Word one{*it};
      acc = NCPoly(alg.path(one)) * acc;
    } else {
      if (it->inverse)
        throw UnsupportedError("cannot substitute for the inverted arrow '" + it->arrow + "'");
      acc = found->second * acc;
    }
    if (acc.is_zero()) break;
  }
  return acc;
}

}  // namespace

NCPoly substitute_arrow(const PathAlgebra& alg, const NCPoly& p, const Assignment& assign) {
  check_assignment(alg, assign);
  NCPoly out;
  for (const auto& [path, c] : p.terms()) out = out + expand(alg, path, c, assign);
  return reduce_inverses(alg, out);
}

Potential substitute_arrow(const PathAlgebra& alg, const Potential& w, const Assignment& assign) {
  check_assignment(alg, assign);
  Potential out;
  for (const auto& [cw, c] : w.terms()) {
    NCPoly e = expand(alg, closed_path(alg, cw), c, assign);
    for (const auto& [p, k] : e.terms()) out.add(p, k);
  }
  return out;
}

}  // namespace qpc
