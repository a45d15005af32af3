#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/polynomial.hpp"
#include "qpc/quiver.hpp"

namespace qpc {

// Variables x[i,1..gamma^i] in canonical order.
std::vector<Var> slot_variables(const DimVector& gamma);
bool is_symmetric(const Poly& p, const DimVector& gamma);

class SymPoly {
 public:
  SymPoly() = default;
  // Throws PreconditionError unless p lives in the gamma variables and is Sym_gamma-invariant.
  SymPoly(DimVector gamma, const Poly& p);

  const DimVector& gamma() const { return gamma_; }
  const Poly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator*(const Rational& c) const;
  bool operator==(const SymPoly& o) const { return gamma_ == o.gamma_ && poly_ == o.poly_; }
  std::string to_string() const;

 private:
  DimVector gamma_;
  Poly poly_;
};

// Rank-one generator x[i,1]^k at e_i.
SymPoly generator(const Quiver& q, std::string_view vertex, int k);
DimVector unit_vector(const Quiver& q, std::string_view vertex);

class ShuffleElement {
 public:
  ShuffleElement() = default;
  explicit ShuffleElement(const SymPoly& f) { add(f); }
  void add(const SymPoly& f);
  const std::map<DimVector, SymPoly>& components() const { return parts_; }
  bool operator==(const ShuffleElement& o) const { return parts_ == o.parts_; }

 private:
  std::map<DimVector, SymPoly> parts_;
};

FactoredFn fac_factored(const Quiver& q, const DimVector& g1, const DimVector& g2);
RationalFn fac_kernel(const Quiver& q, const DimVector& g1, const DimVector& g2);

// threads > 1 splits the shuffle sum; the result does not depend on it.
SymPoly shuffle_mul(const Quiver& q, const SymPoly& f, const SymPoly& g, unsigned threads = 1);
ShuffleElement shuffle_mul(const Quiver& q, const ShuffleElement& f, const ShuffleElement& g);

DimVector contract_dim(const Quiver& q, std::string_view a0, const DimVector& gamma);
SymPoly contract_shuffle(const Quiver& q, std::string_view a0, const SymPoly& f);

std::vector<SymPoly> spherical_span(const Quiver& q, const DimVector& gamma, int max_degree);

enum class Membership { Member, NotMember, Inconclusive };
std::string to_string(Membership m);
Membership spherical_membership(const Quiver& q, const SymPoly& f, int max_degree);

}  // namespace qpc
