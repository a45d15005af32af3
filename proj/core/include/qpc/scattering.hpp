#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/quantum_torus.hpp"
#include "qpc/quiver.hpp"
#include "qpc/rational.hpp"

namespace qpc {

// A point of M_R = Q^I, keyed by vertex.
using Stability = std::map<std::string, Rational>;

Rational pair(const Stability& kappa, const DimVector& gamma);
std::string to_string(const Stability& kappa);

// Codimension-one cone: the hyperplane normal^perp cut out by y(c) >= 0 for each c.
struct Wall {
  DimVector normal;
  std::vector<DimVector> inequalities;
  QTElement element;  // f_d, support on positive multiples of normal
  std::string label;

  bool contains(const Stability& y) const;
};

struct GComplex {
  TorusContext torus;
  std::vector<Wall> walls;

  // Throws PreconditionError if some f_d is not supported on d^perp.
  void validate() const;
};

// Piecewise-linear path through the listed breakpoints.
struct PathSpec {
  std::vector<Stability> points;
};

struct Crossing {
  std::size_t wall = 0;
  int sign = 1;  // exponent applied to exp(f_d)
};

std::vector<Crossing> crossings(const GComplex& d, const PathSpec& p);
QTElement path_ordered_product(const GComplex& d, const PathSpec& p);

// Two half-loops around a joint: c - r*u - r*v -> c + r*u - r*v -> c + r*u + r*v, and via c - r*u + r*v.
struct JointSample {
  Stability center;
  Stability u;
  Stability v;
  Rational radius = 1;
};

struct JointVerdict {
  bool consistent = false;
  QTElement first;
  QTElement second;
};

std::vector<JointVerdict> check_joints(const GComplex& d, const std::vector<JointSample>& joints);
bool consistency_check(const GComplex& d, const std::vector<JointSample>& joints);

// kappa_i = hat_i off {i+, i-}; kappa_+ = hat_0/(1+k); kappa_- = k hat_0/(1+k).
Stability eta_embed(const Quiver& q, std::string_view a0, const Stability& kappa_hat,
                    const Rational& k);

}  // namespace qpc
