#include "qpc/rational.hpp"

#include "qpc/errors.hpp"

namespace qpc {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw PreconditionError("empty rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digit = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/' && !slash && digit) {
      slash = true;
      digit = false;
    } else if (s[i] >= '0' && s[i] <= '9') {
      digit = true;
    } else {
      throw PreconditionError("bad rational literal '" + s + "'");
    }
  }
  if (!digit) throw PreconditionError("bad rational literal '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw PreconditionError("bad rational literal '" + s + "'");
  if (slash && q.get_den() == 0) throw PreconditionError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

int sign(const Rational& q) { return sgn(q); }

Rational ratio(long p, long q) {
  if (q == 0) throw DivisionError("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace qpc
