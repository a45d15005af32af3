#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/polynomial.hpp"
#include "qpc/quiver.hpp"
#include "qpc/shuffle.hpp"

namespace qpc {

inline const Var kZ = Var::formal("z");

struct ActionRatio {
  std::string vertex;
  DimVector gamma;
  FactoredFn ratio;  // in z and the x[i,alpha]

  RationalFn as_rational() const { return RationalFn::from(ratio); }
};

// fac(z|x)/fac(x|z) with z at `vertex`; slot numbering of x starts after `offset`.
ActionRatio psi_action_ratio(const Quiver& q, std::string_view vertex, const DimVector& gamma,
                             const Var& z = kZ, const DimVector* offset = nullptr);

bool contraction_ratio_check(const Quiver& q, std::string_view a0, const DimVector& gamma);

FactoredFn localization_denominator(const Quiver& q, const DimVector& g1, const DimVector& g2);

enum class Series { Psi, Phi };

struct CartanFactor {
  Series series = Series::Psi;
  std::string vertex;
  Var arg;
  int power = 1;
  friend auto operator<=>(const CartanFactor&, const CartanFactor&) = default;
};

// A product of Cartan factors together with at most one shuffle polynomial.
struct HopfWord {
  std::vector<CartanFactor> cartan;  // sorted by (series, vertex, arg), merged
  std::optional<SymPoly> poly;

  static HopfWord unit() { return {}; }
  static HopfWord of(const SymPoly& f);
  static HopfWord psi(std::string vertex, Var arg, int power = 1);
  static HopfWord phi(std::string vertex, Var arg, int power = 1);

  bool is_grouplike() const { return !poly; }
  HopfWord operator*(const HopfWord& o) const;  // left factor must be grouplike or o trivial
  std::string key() const;
  std::string to_string() const { return key(); }
  bool operator==(const HopfWord& o) const { return key() == o.key(); }
};

class TensorElement {
 public:
  struct Term {
    std::vector<HopfWord> factors;
    RationalFn coefficient;
  };

  TensorElement() = default;
  void add(std::vector<HopfWord> factors, const RationalFn& c);
  const std::map<std::string, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const TensorElement& o) const;
  std::string to_string() const;

 private:
  std::map<std::string, Term> terms_;
};

// Delta on a word: grouplike on Cartan factors; the two-term formula on polynomials
// of rank e_i; the equal-sector restriction at rank (1,1).
TensorElement coproduct_small(const HopfWord& w);
TensorElement coproduct_small(const SymPoly& f);
TensorElement coproduct_op_small(const HopfWord& w);  // Delta^op on the phi side
// Applies Delta (or Delta^op) to tensor slot `pos`.
TensorElement apply_coproduct(const TensorElement& t, std::size_t pos, bool op = false);

Rational counit(const HopfWord& w);

struct SignedWord {
  int sign = 1;
  HopfWord word;
};
SignedWord antipode_small(const HopfWord& w);

RationalFn skew_pairing(const Quiver& q, const HopfWord& a, const HopfWord& b);
RationalFn skew_pairing(const Quiver& q, const SymPoly& f, const SymPoly& g);

// Image under contraction: psi+ psi- -> psi0 (same for phi); polynomials via contract_shuffle.
HopfWord contract_word(const Quiver& q, std::string_view a0, const HopfWord& w);

// Delta(contract f) vs contract applied factorwise to Delta(f), at rank (1,1).
bool coproduct_contraction_check(const Quiver& q, std::string_view a0, const SymPoly& f);

// Expands (1 (x) g)(f (x) 1) on Q, contracts, and compares with the expansion on Q-hat.
bool double_cross_check(const Quiver& q, std::string_view a0, const SymPoly& f, const SymPoly& g);

// Sum over Sym_gamma of sigma(h).
Poly symmetrize(const Poly& h, const DimVector& gamma);
// contract(Sym_gamma H) = gamma^{i-}! Sym_gamma-hat(h) for H = h pulled back along i+.
bool pairing_normalization_check(const Quiver& q, std::string_view a0, const DimVector& gamma,
                                 const Poly& h_hat);

}  // namespace qpc
