#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qpc/errors.hpp"
#include "qpc/path.hpp"
#include "qpc/shuffle.hpp"

namespace qpc {

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::size_t offset = 0;  // byte span in the source
  std::size_t length = 0;
  std::string message;

  std::string to_string(std::string_view source) const;  // "line:col: error: ..."
};

class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> d);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

struct ShuffleEntry {
  DimVector gamma;
  Poly poly;
};

struct QPDocument {
  std::string name;
  QuiverWithPotential qp;
  std::vector<ShuffleEntry> shuffle;  // `gamma: ...; poly: ...` lines, in file order
};

// Throws ParseError with every diagnostic found.
QPDocument parse_qp(std::string_view text);
// Canonical text: vertices and arrows sorted by id, potential in canonical term order.
std::string print_qp(const QPDocument& doc);
std::string print_qp(const QuiverWithPotential& qp, const std::string& name = "Q");

// `i=1,j=2`; vertices not mentioned are 0.
DimVector parse_gamma(const Quiver& q, std::string_view text);
std::string print_gamma(const DimVector& gamma);
// `2/3*x[a,1]^2*x[b,1] - 1`.
Poly parse_poly(std::string_view text);
// Both at once, as in the sidecar syntax `gamma: ...; poly: ...`.
SymPoly parse_sympoly(const Quiver& q, std::string_view text);
std::string print_sympoly(const SymPoly& f);

}  // namespace qpc
