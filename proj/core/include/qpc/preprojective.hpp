#pragma once

#include <map>
#include <string>
#include <string_view>

#include "qpc/path.hpp"
#include "qpc/quiver.hpp"

namespace qpc {

// Loop l_<v> added at each vertex of the triple quiver.
std::string loop_name(std::string_view vertex);

// Double quiver plus loops, W = sum_a (a.a^*.l_t(a) - a^*.a.l_s(a)).
QuiverWithPotential triple_qp(const Quiver& q);

// Per-vertex components of a relation; `quiver` is the alphabet the paths live in.
struct RelationSet {
  Quiver quiver;
  std::optional<std::string> invertible;
  std::map<std::string, NCPoly> at;

  std::string to_string() const;
  bool operator==(const RelationSet& o) const { return at == o.at; }
};

// Sum_{t(a)=i} a.a^* - sum_{s(a)=i} a^*.a at every vertex i, over the double quiver.
RelationSet preprojective_relations(const Quiver& q);

// Cyclic derivatives of W by each loop in `cut`, keyed by the loop's vertex.
RelationSet cut_relations(const QuiverWithPotential& qp, const std::vector<std::string>& cut);

struct TripleCheck {
  bool holds = false;
  Potential contracted;  // contract_qp(triple_qp(Q), a0)
  Potential formula;     // the displayed expression in hatted arrows
  bool loop_identity = false;  // l-hat_{i-} a0*-hat - l_{i+} a0*-hat = l_{i0}[a0, a0^*] after expansion
};

TripleCheck contract_triple_detailed(const Quiver& q, std::string_view a0);
bool contract_triple_check(const Quiver& q, std::string_view a0);

struct AdhmCheck {
  bool holds = false;
  RelationSet eliminated;  // ADHM at i+ plus a0^-1 (ADHM at i-) a0, and ADHM elsewhere
  RelationSet expected;    // relations of the contracted double quiver, expanded over a0^{+-1}
};

AdhmCheck adhm_elimination_detailed(const Quiver& q, std::string_view a0);
bool adhm_elimination_check(const Quiver& q, std::string_view a0);

}  // namespace qpc
