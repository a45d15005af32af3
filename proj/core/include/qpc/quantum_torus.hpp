#pragma once

#include <map>
#include <string>

#include "qpc/quiver.hpp"
#include "qpc/rational.hpp"

namespace qpc {

// Finite Laurent polynomial in L^{1/2}; keys are exponents of L^{1/2}.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Rational& c, int half_exponent = 0);

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational at(int half_exponent) const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator*(const Rational& c) const;
  Laurent shifted(int half_exponent) const;
  bool operator==(const Laurent& o) const = default;
  std::string to_string() const;

 private:
  std::map<int, Rational> terms_;
};

struct TorusContext {
  Quiver quiver;
  int truncation = 3;  // keep |gamma| <= truncation
};

// Finite sum of e_gamma with Laurent coefficients.
class QTElement {
 public:
  QTElement() = default;
  static QTElement one(const Quiver& q);
  static QTElement basis(const DimVector& gamma, const Laurent& c = Laurent(1));

  const std::map<DimVector, Laurent>& terms() const { return terms_; }
  void add(const DimVector& gamma, const Laurent& c);
  bool is_zero() const { return terms_.empty(); }
  // Coefficient of e_0.
  Laurent scalar_part() const;

  QTElement operator+(const QTElement& o) const;
  QTElement operator-(const QTElement& o) const;
  QTElement operator*(const Rational& c) const;
  bool operator==(const QTElement& o) const = default;
  std::string to_string() const;

 private:
  std::map<DimVector, Laurent> terms_;
};

// e_a e_b = L^{-chi(a,b)} e_{a+b}, dropping |gamma| > truncation.
QTElement mul(const TorusContext& ctx, const QTElement& x, const QTElement& y);
QTElement truncate(const TorusContext& ctx, const QTElement& x);

// x must have zero scalar part.
QTElement exp_truncated(const TorusContext& ctx, const QTElement& x);
// g must have scalar part 1.
QTElement log_truncated(const TorusContext& ctx, const QTElement& g);
QTElement group_inverse(const TorusContext& ctx, const QTElement& g);

}  // namespace qpc
