#pragma once

#include <random>
#include <string>

#include "qpc/io.hpp"
#include "qpc/path.hpp"
#include "qpc/quiver.hpp"

namespace qpc::test {

inline QuiverWithPotential qp_from(const std::string& text) { return parse_qp(text).qp; }

inline Quiver quiver_from(const std::string& vertices, const std::string& arrows) {
  return parse_qp("quiver T\nvertices: " + vertices + "\narrows: " + arrows + "\n").qp.quiver;
}

inline Quiver a2() { return quiver_from("1, 2", "a: 1 -> 2"); }
inline Quiver jordan() { return quiver_from("o", "l: o -> o"); }
inline Quiver point() { return quiver_from("o", ""); }

inline Path path_of(const QuiverWithPotential& qp, std::initializer_list<const char*> ids) {
  Word w;
  for (const char* id : ids) {
    std::string s(id);
    bool inv = s.size() > 3 && s.substr(s.size() - 3) == "^-1";
    w.push_back({inv ? s.substr(0, s.size() - 3) : s, inv});
  }
  return qp.algebra().path(std::move(w));
}

}  // namespace qpc::test
