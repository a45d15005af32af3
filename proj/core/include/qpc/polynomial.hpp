#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpc/rational.hpp"

namespace qpc {

// x[vertex,slot] for slot >= 1; a free-standing formal variable (z, u, w) for slot 0.
struct Var {
  std::string vertex;
  int slot = 0;

  static Var x(std::string vertex, int slot) { return {std::move(vertex), slot}; }
  static Var formal(std::string name) { return {std::move(name), 0}; }
  bool is_formal() const { return slot == 0; }
  std::string to_string() const;

  // x-variables first, ordered by (vertex id, slot); formal variables after.
  friend std::strong_ordering operator<=>(const Var& a, const Var& b) {
    if (auto c = a.is_formal() <=> b.is_formal(); c != 0) return c;
    if (auto c = a.vertex.compare(b.vertex); c != 0) return c <=> 0;
    return a.slot <=> b.slot;
  }
  friend bool operator==(const Var&, const Var&) = default;
};

using Monomial = std::vector<int>;

// Graded lex, larger first (so begin() is the leading term).
struct GrLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GrLexGreater>;

  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly variable(const Var& v);
  // (a - b); b absent means just a.
  static Poly linear(const Var& a, const std::optional<Var>& b);

  const std::vector<Var>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int degree() const;  // -1 for zero
  int degree_in(const Var& v) const;
  std::vector<Var> support() const;
  bool is_homogeneous() const;
  Rational coefficient(const std::map<Var, int>& mono) const;
  std::size_t size() const { return terms_.size(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  bool operator==(const Poly& o) const;

  Poly mul_linear(const Var& a, const std::optional<Var>& b) const;
  // Exact division by (a - b); nullopt if not divisible.
  std::optional<Poly> divide_linear(const Var& a, const std::optional<Var>& b) const;

  Poly rename(const std::map<Var, Var>& m) const;
  Poly substitute(const std::map<Var, Poly>& m) const;
  // Coefficients as polynomials in the remaining variables.
  std::map<int, Poly> coefficients_in(const Var& v) const;
  // Sum of per-degree parts with the given total degree.
  Poly homogeneous_part(int d) const;

  // Restricted to (and expressed over) exactly these variables, which must cover support().
  Poly over(const std::vector<Var>& vars) const;
  std::map<std::map<Var, int>, Rational> sparse() const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  static std::vector<Var> merge_vars(const std::vector<Var>& a, const std::vector<Var>& b);

  std::vector<Var> vars_;
  Terms terms_;
};

struct LinearFactor {
  Var lead;
  std::optional<Var> tail;  // factor is (lead - tail), or lead alone

  std::string to_string() const;
  friend auto operator<=>(const LinearFactor&, const LinearFactor&) = default;
};

// Normalizes (a - b) so that lead < tail; returns the sign picked up.
int normalize_factor(LinearFactor& f);

// c * prod f^e with integer exponents; canonical up to nothing.
class FactoredFn {
 public:
  FactoredFn() = default;
  explicit FactoredFn(const Rational& c) : constant_(c) {}
  static FactoredFn factor(const Var& a, const std::optional<Var>& b, int power = 1);

  const Rational& constant() const { return constant_; }
  const std::map<LinearFactor, int>& exponents() const { return exponents_; }
  bool is_zero() const { return constant_ == 0; }

  FactoredFn operator*(const FactoredFn& o) const;
  FactoredFn operator/(const FactoredFn& o) const;
  FactoredFn inverse() const;
  FactoredFn rename(const std::map<Var, Var>& m) const;  // throws if a factor collapses to 0
  bool operator==(const FactoredFn& o) const = default;

  std::string to_string() const;

 private:
  Rational constant_ = 1;
  std::map<LinearFactor, int> exponents_;
};

// num / prod(factors); reduced by cancelling every factor that divides num.
class RationalFn {
 public:
  RationalFn() = default;
  explicit RationalFn(Poly num, std::map<LinearFactor, int> den = {});
  static RationalFn from(const FactoredFn& f);

  const Poly& numerator() const { return num_; }
  const std::map<LinearFactor, int>& denominator() const { return den_; }
  Poly denominator_poly() const;
  bool is_polynomial() const { return den_.empty(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;
  RationalFn operator*(const Rational& c) const;
  RationalFn divide(const FactoredFn& f) const;
  RationalFn rename(const std::map<Var, Var>& m) const;
  bool operator==(const RationalFn& o) const;

  std::string to_string() const;

 private:
  void reduce();
  Poly num_;
  std::map<LinearFactor, int> den_;
};

// -(coefficient of v^-1) in the expansion of h at v = infinity.
RationalFn residue_at_infinity(const RationalFn& h, const Var& v);

}  // namespace qpc
