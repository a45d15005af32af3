#pragma once

#include <map>
#include <string>
#include <string_view>

#include "qpc/matrix.hpp"
#include "qpc/path.hpp"
#include "qpc/quiver.hpp"

namespace qpc {

// Name of the arrow of Q-hat that replaces a (a != a0).
std::string hat_name(const ContractionShape& sh, const Arrow& a);
// The composite that the hatted arrow stands for, as a word over Q with a0^-1.
Word hat_word(const ContractionShape& sh, const Arrow& a);

Quiver contract_quiver(const Quiver& q, std::string_view a0);

// Q-hat plus a0 (invertible): the alphabet in which both Q-words and
// Q-hat-words can be written.
struct HatAlphabet {
  ContractionShape shape;
  Quiver combined;
  std::map<std::string, std::string> hat;  // Q arrow id -> Q-hat arrow id

  PathAlgebra algebra() const { return PathAlgebra(combined, shape.a0); }
  // a -> hat(a) with compensating a0^{+-1} factors.
  Word rewrite(const Word& q_word) const;

  std::map<std::string, std::pair<bool, bool>> ends_;  // touches i_- as (source, target)
};
HatAlphabet hat_alphabet(const Quiver& q, std::string_view a0);

struct ContractionResult {
  QuiverWithPotential qp;
  HatAlphabet alphabet;
};

ContractionResult contract_qp_detailed(const QuiverWithPotential& qp, std::string_view a0);
QuiverWithPotential contract_qp(const QuiverWithPotential& qp, std::string_view a0);

template <class F>
struct Representation {
  FieldSpec field;
  std::map<std::string, long> dims;
  std::map<std::string, Matrix<F>> maps;

  void validate(const Quiver& q) const;
};

template <class F>
Representation<F> contract_rep(const Quiver& q, std::string_view a0, const Representation<F>& m);

// Matrix of a path (a0^-1 allowed when a0 is given and M_a0 is invertible).
template <class F>
Matrix<F> evaluate_path(const Quiver& q, const Representation<F>& m, const Path& p);

struct HiggsResult {
  QuiverWithPotential higgsed;
  QuiverWithPotential contracted;
  bool cubic_terms_integrated = false;
  bool agrees_with_contraction = false;
};

HiggsResult higgs(const QuiverWithPotential& qp, std::string_view a0);

extern template struct Representation<Rational>;
extern template struct Representation<Fp>;

}  // namespace qpc
