#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/quiver.hpp"
#include "qpc/rational.hpp"

namespace qpc {

struct Symbol {
  std::string arrow;
  bool inverse = false;

  Symbol inverted() const { return {arrow, !inverse}; }
  std::string to_string() const { return inverse ? arrow + "^-1" : arrow; }
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

// Symbols are stored in written order: word {f, g} is "f.g" and g acts first.
using Word = std::vector<Symbol>;

std::string word_to_string(const Word& w);

class Path {
 public:
  Path() = default;
  static Path idempotent(std::string vertex);

  const Word& word() const { return word_; }
  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }
  bool is_idempotent() const { return word_.empty(); }
  bool is_closed() const { return source_ == target_; }

  // this after rhs; requires rhs.target() == source().
  Path after(const Path& rhs) const;

  std::string to_string() const;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  friend class PathAlgebra;
  Word word_;
  std::string source_;
  std::string target_;
};

// A quiver together with the (at most one) arrow allowed to appear inverted.
class PathAlgebra {
 public:
  explicit PathAlgebra(const Quiver& q, std::optional<std::string> invertible = std::nullopt);

  const Quiver& quiver() const { return quiver_; }
  const std::optional<std::string>& invertible() const { return invertible_; }

  std::string source(const Symbol& s) const;
  std::string target(const Symbol& s) const;
  void check_symbol(const Symbol& s) const;

  // Throws TypingError if the word is not composable.
  Path path(Word w) const;
  Path path(std::string_view arrow_id) const { return path(Word{{std::string(arrow_id), false}}); }
  Path idempotent(std::string_view vertex) const;

 private:
  const Quiver& quiver_;
  std::optional<std::string> invertible_;
};

class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(const Path& p, const Rational& c = 1);

  const std::map<Path, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Path& p, const Rational& c);
  Rational coefficient(const Path& p) const;
  bool mentions(std::string_view arrow) const;

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator-() const;
  NCPoly operator*(const Rational& c) const;
  // Path-algebra product: sum over composable pairs (this term after o term).
  NCPoly operator*(const NCPoly& o) const;

  std::string to_string() const;
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  std::map<Path, Rational> terms_;
};

// Cancels adjacent a a^-1 pairs inside an open word. Endpoints are unchanged.
Word cancel_inverses(const Word& w);
Path reduce_path(const PathAlgebra& alg, const Path& p);
NCPoly reduce_inverses(const PathAlgebra& alg, const NCPoly& p);

class CyclicWord {
 public:
  CyclicWord() = default;
  const Word& word() const { return word_; }
  std::string to_string() const { return word_to_string(word_); }
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  friend CyclicWord cyclic_normal_form(const Path& closed);
  Word word_;
};

// Cancels inverse pairs (also across the seam) and picks the least rotation.
CyclicWord cyclic_normal_form(const Path& closed);
std::vector<Word> rotations(const Word& w);

class Potential {
 public:
  Potential() = default;

  const std::map<CyclicWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const CyclicWord& w, const Rational& c);
  void add(const Path& closed, const Rational& c) { add(cyclic_normal_form(closed), c); }
  Rational coefficient(const CyclicWord& w) const;
  bool mentions(std::string_view arrow) const;

  Potential operator+(const Potential& o) const;
  Potential operator-(const Potential& o) const;
  Potential operator*(const Rational& c) const;

  std::string to_string() const;
  friend bool operator==(const Potential&, const Potential&) = default;

 private:
  std::map<CyclicWord, Rational> terms_;
};

struct QuiverWithPotential {
  Quiver quiver;
  Potential potential;
  std::optional<std::string> invertible;

  PathAlgebra algebra() const { return PathAlgebra(quiver, invertible); }
  void validate() const;  // every term closed and composable
  friend bool operator==(const QuiverWithPotential&, const QuiverWithPotential&) = default;
};

// Closed path for the stored representative of w.
Path closed_path(const PathAlgebra& alg, const CyclicWord& w);
Potential potential_from(const PathAlgebra& alg, const NCPoly& closed_terms);

NCPoly cyclic_derivative(const PathAlgebra& alg, const Potential& w, std::string_view arrow);

using Assignment = std::map<std::string, NCPoly>;

NCPoly substitute_arrow(const PathAlgebra& alg, const NCPoly& p, const Assignment& assign);
Potential substitute_arrow(const PathAlgebra& alg, const Potential& w, const Assignment& assign);

struct ReductionStep {
  std::string first;   // x in the quadratic term x.y
  std::string second;  // y
  Rational coefficient;
};

struct ReductionResult {
  QuiverWithPotential qp;
  std::vector<ReductionStep> steps;
};

QuiverWithPotential reduce_trivial(const QuiverWithPotential& qp);
// One elimination step for the quadratic term x.y (must be present in W).
QuiverWithPotential eliminate_pair(const QuiverWithPotential& qp, const std::string& x,
                                   const std::string& y);
ReductionResult reduce_trivial_with_steps(const QuiverWithPotential& qp);

}  // namespace qpc
