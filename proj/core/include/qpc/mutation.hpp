#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/path.hpp"

namespace qpc {

std::string composite_name(std::string_view outgoing, std::string_view incoming);  // "[b*a]"

QuiverWithPotential premutate(const QuiverWithPotential& qp, std::string_view vertex);

struct MutationReport {
  QuiverWithPotential input;
  std::string vertex;
  QuiverWithPotential premutated;
  QuiverWithPotential reduced;
  std::vector<ReductionStep> reduction;
  std::map<std::string, std::string> naming;  // surviving old arrow -> new arrow
};

MutationReport mutate(const QuiverWithPotential& qp, std::string_view vertex);

// Arrow correspondence allowing a sign per arrow: rhs id -> (lhs id, +-1).
struct SignedName {
  std::string lhs;
  int sign = 1;
};

struct TheoremCheck {
  bool holds = false;
  char sequence_case = '?';  // 'A': i+ sources only a0; 'B': i- targets only a0
  QuiverWithPotential lhs;   // contraction after the three mutations
  QuiverWithPotential rhs;   // mutation at i0 after contraction
  std::map<std::string, SignedName> naming;
  std::vector<std::string> diff;
};

TheoremCheck theorem_check_366(const QuiverWithPotential& qp, std::string_view a0);

// Rename arrows and vertices of a QP; arrow signs rescale potential terms.
QuiverWithPotential rename_qp(const QuiverWithPotential& qp,
                              const std::map<std::string, SignedName>& arrows,
                              const std::map<std::string, std::string>& vertices);

}  // namespace qpc
