#include "qpc/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace qpc {

std::string Diagnostic::to_string(std::string_view source) const {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < source.size(); ++i) {
    if (source[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col) + ": " +
         (severity == Severity::Error ? "error: " : "warning: ") + message;
}

namespace {

std::string join_messages(const std::vector<Diagnostic>& d) {
  std::string s;
  for (const auto& x : d) s += (s.empty() ? "" : "; ") + x.message;
  return s;
}

struct Span {
  std::string_view text;
  std::size_t offset = 0;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Span trim(Span s) {
  while (!s.text.empty() && is_space(s.text.front())) {
    s.text.remove_prefix(1);
    ++s.offset;
  }
  while (!s.text.empty() && is_space(s.text.back())) s.text.remove_suffix(1);
  return s;
}

std::vector<Span> split(Span s, char sep) {
  std::vector<Span> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.text.size(); ++i)
    if (i == s.text.size() || s.text[i] == sep) {
      out.push_back(trim({s.text.substr(start, i - start), s.offset + start}));
      start = i + 1;
    }
  return out;
}

std::vector<Span> tokens(Span s) {
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < s.text.size()) {
    while (i < s.text.size() && is_space(s.text[i])) ++i;
    std::size_t j = i;
    while (j < s.text.size() && !is_space(s.text[j])) ++j;
    if (j > i) out.push_back({s.text.substr(i, j - i), s.offset + i});
    i = j;
  }
  return out;
}

class PolyParser {
 public:
  PolyParser(std::string_view t, std::size_t base) : t_(t), base_(base) {}

  Poly parse() {
    Poly out;
    skip();
    if (at_end()) fail(0, "empty polynomial");
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++i_;
        skip();
      } else if (!first) {
        fail(i_, "expected '+' or '-'");
      }
      out += term() * sign;
      first = false;
      skip();
    }
    return out;
  }

 private:
  Poly term() {
    Poly t = factor();
    skip();
    while (!at_end() && peek() == '*') {
      ++i_;
      skip();
      t = t * factor();
      skip();
    }
    return t;
  }

  Poly factor() {
    if (at_end()) fail(i_, "expected a factor");
    std::size_t start = i_;
    Poly base;
    if (peek() == 'x' && i_ + 1 < t_.size() && t_[i_ + 1] == '[') {
      std::size_t close = t_.find(']', i_);
      if (close == std::string_view::npos) fail(start, "unterminated variable");
      std::string_view inner = t_.substr(i_ + 2, close - i_ - 2);
      std::size_t comma = inner.rfind(',');
      if (comma == std::string_view::npos || comma == 0) fail(start, "variable needs the form x[vertex,slot]");
      std::string vertex(inner.substr(0, comma));
      int slot = number(inner.substr(comma + 1), start);
      if (slot < 1) fail(start, "slot index must be positive");
      base = Poly::variable(Var::x(vertex, slot));
      i_ = close + 1;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t j = i_;
      while (j < t_.size() && (std::isdigit(static_cast<unsigned char>(t_[j])) || t_[j] == '/')) ++j;
      try {
        base = Poly::constant(parse_rational(t_.substr(i_, j - i_)));
      } catch (const PreconditionError& e) {
        fail(start, e.what());
      }
      i_ = j;
    } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      std::size_t j = i_;
      while (j < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[j])) || t_[j] == '_')) ++j;
      base = Poly::variable(Var::formal(std::string(t_.substr(i_, j - i_))));
      i_ = j;
    } else {
      fail(start, std::string("unexpected character '") + peek() + "'");
    }
    skip();
    if (!at_end() && peek() == '^') {
      ++i_;
      skip();
      std::size_t j = i_;
      while (j < t_.size() && std::isdigit(static_cast<unsigned char>(t_[j]))) ++j;
      int e = number(t_.substr(i_, j - i_), i_);
      i_ = j;
      Poly r = Poly::constant(1);
      for (int k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  int number(std::string_view s, std::size_t at) {
    if (s.empty() || s.size() > 6 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(at, "expected a small non-negative integer");
    return std::stoi(std::string(s));
  }

  [[noreturn]] void fail(std::size_t at, const std::string& msg) {
    throw ParseError({{Diagnostic::Severity::Error, base_ + at, 1, msg}});
  }
  void skip() {
    while (!at_end() && is_space(peek())) ++i_;
  }
  bool at_end() const { return i_ >= t_.size(); }
  char peek() const { return t_[i_]; }

  std::string_view t_;
  std::size_t base_;
  std::size_t i_ = 0;
};

Poly parse_poly_at(Span s) { return PolyParser(s.text, s.offset).parse(); }

DimVector parse_gamma_at(const Quiver& q, Span s, std::vector<Diagnostic>& diags) {
  DimVector g = DimVector::zero(q);
  if (trim(s).text.empty()) return g;
  for (const auto& part : split(s, ',')) {
    auto eq = part.text.find('=');
    if (eq == std::string_view::npos) {
      diags.push_back({Diagnostic::Severity::Error, part.offset, part.text.size(), "expected vertex=count"});
      continue;
    }
    Span v = trim({part.text.substr(0, eq), part.offset});
    Span n = trim({part.text.substr(eq + 1), part.offset + eq + 1});
    if (!q.has_vertex(v.text)) {
      diags.push_back({Diagnostic::Severity::Error, v.offset, v.text.size(),
                       "unknown vertex '" + std::string(v.text) + "'"});
      continue;
    }
    bool ok = !n.text.empty() && n.text.size() < 7 &&
              std::all_of(n.text.begin(), n.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!ok) {
      diags.push_back({Diagnostic::Severity::Error, n.offset, n.text.size(), "expected a non-negative count"});
      continue;
    }
    g.set(std::string(v.text), std::stol(std::string(n.text)));
  }
  return g;
}

struct SidecarLine {
  Span gamma;
  Span poly;
};

bool split_sidecar(Span rest, SidecarLine& out) {
  auto semi = rest.text.find(';');
  if (semi == std::string_view::npos) return false;
  Span g{rest.text.substr(0, semi), rest.offset};
  Span tail = trim({rest.text.substr(semi + 1), rest.offset + semi + 1});
  if (tail.text.rfind("poly:", 0) != 0) return false;
  out.gamma = trim(g);
  out.poly = trim({tail.text.substr(5), tail.offset + 5});
  return true;
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> d) : Error(join_messages(d)), diags_(std::move(d)) {}

QPDocument parse_qp(std::string_view text) {
  std::vector<Diagnostic> diags;
  auto err = [&](Span s, std::string msg) {
    diags.push_back({Diagnostic::Severity::Error, s.offset, std::max<std::size_t>(s.text.size(), 1), std::move(msg)});
  };

  QPDocument doc;
  std::optional<Span> vertices, arrows, invert;
  std::vector<Span> potentials;
  std::vector<SidecarLine> sidecars;
  bool named = false;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Span line = trim({raw, pos});
    pos = end + 1;
    if (line.text.empty()) continue;

    auto keyword = [&](std::string_view k, Span& rest) {
      if (line.text.rfind(k, 0) != 0) return false;
      rest = trim({line.text.substr(k.size()), line.offset + k.size()});
      return true;
    };
    Span rest;
    if (keyword("quiver ", rest) || line.text == "quiver") {
      if (named) err(line, "second 'quiver' line");
      if (rest.text.empty()) err(line, "quiver needs a name");
      doc.name = std::string(rest.text);
      named = true;
    } else if (keyword("vertices:", rest)) {
      if (vertices) err(line, "second 'vertices:' line");
      vertices = rest;
    } else if (keyword("arrows:", rest)) {
      if (arrows) err(line, "second 'arrows:' line");
      arrows = rest;
    } else if (keyword("potential:", rest)) {
      potentials.push_back(rest);
    } else if (keyword("invert:", rest)) {
      if (invert) err(line, "second 'invert:' line");
      invert = rest;
    } else if (keyword("gamma:", rest)) {
      SidecarLine sc;
      if (!split_sidecar(rest, sc))
        err(line, "expected 'gamma: v=n,...; poly: ...'");
      else
        sidecars.push_back(sc);
    } else {
      err(line, "unrecognized line");
    }
  }
  if (!named) err({text.substr(0, 0), 0}, "missing 'quiver NAME' line");
  if (!vertices) err({text.substr(0, 0), 0}, "missing 'vertices:' line");
  if (!diags.empty()) throw ParseError(diags);

  std::vector<std::string> vs;
  std::set<std::string> vset;
  if (!vertices->text.empty())
    for (const auto& v : split(*vertices, ',')) {
      if (v.text.empty()) {
        err(v, "empty vertex id");
        continue;
      }
      if (!vset.insert(std::string(v.text)).second) {
        err(v, "duplicate vertex '" + std::string(v.text) + "'");
        continue;
      }
      vs.emplace_back(v.text);
    }

  std::vector<Arrow> as;
  std::set<std::string> aset;
  if (arrows && !arrows->text.empty())
    for (const auto& a : split(*arrows, ';')) {
      if (a.text.empty()) continue;
      auto colon = a.text.find(':');
      auto arrow = a.text.find("->");
      if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon) {
        err(a, "expected 'id: source -> target'");
        continue;
      }
      Span id = trim({a.text.substr(0, colon), a.offset});
      Span src = trim({a.text.substr(colon + 1, arrow - colon - 1), a.offset + colon + 1});
      Span tgt = trim({a.text.substr(arrow + 2), a.offset + arrow + 2});
      bool ok = true;
      if (id.text.empty() || id.text.find_first_of(" .,") != std::string_view::npos) {
        err(id, "bad arrow id '" + std::string(id.text) + "'");
        ok = false;
      }
      for (const Span& e : {src, tgt})
        if (!vset.count(std::string(e.text))) {
          err(e, "unknown vertex '" + std::string(e.text) + "'");
          ok = false;
        }
      if (ok && !aset.insert(std::string(id.text)).second) {
        err(id, "duplicate arrow '" + std::string(id.text) + "'");
        ok = false;
      }
      if (ok) as.push_back({std::string(id.text), std::string(src.text), std::string(tgt.text)});
    }
  if (!diags.empty()) throw ParseError(diags);

  doc.qp.quiver = Quiver(vs, as);
  const Quiver& q = doc.qp.quiver;
  if (invert) {
    if (!q.find_arrow(invert->text))
      err(*invert, "unknown arrow '" + std::string(invert->text) + "'");
    else if (q.arrow(invert->text).is_loop())
      err(*invert, "a loop cannot be inverted");
    else
      doc.qp.invertible = std::string(invert->text);
  }
  if (!diags.empty()) throw ParseError(diags);

  PathAlgebra alg = doc.qp.algebra();
  auto symbol = [&](Span s, Symbol& out) {
    if (q.find_arrow(s.text)) {
      out = {std::string(s.text), false};
      return true;
    }
    constexpr std::string_view inv = "^-1";
    if (s.text.size() > inv.size() && s.text.substr(s.text.size() - inv.size()) == inv) {
      std::string base(s.text.substr(0, s.text.size() - inv.size()));
      if (q.find_arrow(base)) {
        if (doc.qp.invertible != base) {
          err(s, "arrow '" + base + "' is not designated invertible");
          return false;
        }
        out = {base, true};
        return true;
      }
    }
    err(s, "unknown arrow '" + std::string(s.text) + "'");
    return false;
  };

  for (const auto& pl : potentials) {
    std::vector<Span> tok = tokens(pl);
    if (tok.size() == 1 && tok[0].text == "0") continue;
    std::size_t i = 0;
    bool first = true;
    while (i < tok.size()) {
      Rational sign = 1;
      if (tok[i].text == "+" || tok[i].text == "-") {
        sign = tok[i].text == "-" ? -1 : 1;
        ++i;
      } else if (!first) {
        err(tok[i], "expected '+' or '-' between terms");
        break;
      }
      if (i >= tok.size()) {
        err(tok[i - 1], "dangling sign");
        break;
      }
      Rational coef = 1;
      if (i + 1 < tok.size() && tok[i + 1].text == "*") {
        try {
          coef = parse_rational(tok[i].text);
        } catch (const PreconditionError& e) {
          err(tok[i], e.what());
          break;
        }
        i += 2;
        if (i >= tok.size()) {
          err(tok[i - 1], "missing path after '*'");
          break;
        }
      }
      Span path = tok[i++];
      first = false;
      Word w;
      bool ok = true;
      for (const auto& s : split(path, '.')) {
        Symbol sym;
        if (s.text.empty()) {
          err(path, "empty symbol in path");
          ok = false;
          break;
        }
        if (!symbol(s, sym)) {
          ok = false;
          break;
        }
        w.push_back(sym);
      }
      if (!ok) continue;
      try {
        Path p = alg.path(w);
        if (!p.is_closed()) {
          err(path, "potential term '" + std::string(path.text) + "' is not closed");
          continue;
        }
        doc.qp.potential.add(p, sign * coef);
      } catch (const TypingError&) {
        err(path, "path '" + std::string(path.text) + "' is not composable");
      } catch (const DegenerateTermError& e) {
        err(path, e.what());
      }
    }
  }

  for (const auto& sc : sidecars) {
    std::size_t before = diags.size();
    DimVector g = parse_gamma_at(q, sc.gamma, diags);
    if (diags.size() != before) continue;
    try {
      Poly p = parse_poly_at(sc.poly);
      SymPoly f(g, p);
      doc.shuffle.push_back({g, p});
    } catch (const ParseError& e) {
      diags.insert(diags.end(), e.diagnostics().begin(), e.diagnostics().end());
    } catch (const PreconditionError& e) {
      err(sc.poly, e.what());
    }
  }
  if (!diags.empty()) throw ParseError(diags);
  return doc;
}

std::string print_qp(const QuiverWithPotential& qp, const std::string& name) {
  std::vector<std::string> vs = qp.quiver.vertices();
  std::sort(vs.begin(), vs.end());
  std::vector<Arrow> as = qp.quiver.arrows();
  std::sort(as.begin(), as.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  std::string s = "quiver " + name + "\nvertices: ";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + vs[i];
  s += "\narrows:";
  for (std::size_t i = 0; i < as.size(); ++i)
    s += std::string(i ? "; " : " ") + as[i].id + ": " + as[i].source + " -> " + as[i].target;
  s += "\npotential: " + qp.potential.to_string() + "\n";
  if (qp.invertible) s += "invert: " + *qp.invertible + "\n";
  return s;
}

std::string print_qp(const QPDocument& doc) {
  std::string s = print_qp(doc.qp, doc.name);
  for (const auto& e : doc.shuffle) s += "gamma: " + print_gamma(e.gamma) + "; poly: " + e.poly.to_string() + "\n";
  return s;
}

DimVector parse_gamma(const Quiver& q, std::string_view text) {
  std::vector<Diagnostic> diags;
  DimVector g = parse_gamma_at(q, {text, 0}, diags);
  if (!diags.empty()) throw ParseError(diags);
  return g;
}

std::string print_gamma(const DimVector& gamma) {
  std::string s;
  for (const auto& [v, n] : gamma.entries()) s += (s.empty() ? "" : ",") + v + "=" + std::to_string(n);
  return s;
}

Poly parse_poly(std::string_view text) { return parse_poly_at({text, 0}); }

SymPoly parse_sympoly(const Quiver& q, std::string_view text) {
  Span all = trim({text, 0});
  if (all.text.rfind("gamma:", 0) == 0) all = trim({all.text.substr(6), all.offset + 6});
  SidecarLine sc;
  if (!split_sidecar(all, sc))
    throw ParseError({{Diagnostic::Severity::Error, 0, text.size(), "expected 'gamma: v=n,...; poly: ...'"}});
  std::vector<Diagnostic> diags;
  DimVector g = parse_gamma_at(q, sc.gamma, diags);
  if (!diags.empty()) throw ParseError(diags);
  return SymPoly(g, parse_poly_at(sc.poly));
}

std::string print_sympoly(const SymPoly& f) {
  return "gamma: " + print_gamma(f.gamma()) + "; poly: " + f.poly().to_string();
}

}  // namespace qpc
