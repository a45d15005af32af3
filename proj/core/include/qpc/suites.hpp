#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/path.hpp"
#include "qpc/quiver.hpp"
#include "qpc/rational.hpp"
#include "qpc/shuffle.hpp"

namespace qpc {

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  int truncation = 3;
  std::vector<unsigned> fields{2, 3};
  unsigned threads = 1;
  double scale = 1.0;  // multiplies the number of random cases
};

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> details;  // one line per finding, failures prefixed "FAIL"

  void check(bool ok, const std::string& what);
  std::string to_string() const;
};

std::vector<std::string> suite_names();
// Throws LookupError for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opt = {});

SuiteReport suite_example31(const SuiteOptions& opt = {});
SuiteReport suite_homomorphism(const SuiteOptions& opt = {});
SuiteReport suite_euler(const SuiteOptions& opt = {});
SuiteReport suite_mutation366(const SuiteOptions& opt = {});
SuiteReport suite_adhm(const SuiteOptions& opt = {});
SuiteReport suite_hopf(const SuiteOptions& opt = {});
SuiteReport suite_eta(const SuiteOptions& opt = {});
SuiteReport suite_fermion(const SuiteOptions& opt = {});
SuiteReport suite_spherical(const SuiteOptions& opt = {});

struct SphericalReport {
  SymPoly contracted;  // contract(e_2 * e_3 * e_1) on the 3-cycle with a0 = a1: 1 -> 2
  Membership product = Membership::Inconclusive;
  std::vector<std::pair<std::string, Membership>> generators;
};
SphericalReport spherical_counterexample(int max_degree = 4);

// Shared fixtures.
std::string example31_text();
QuiverWithPotential example31();
QuiverWithPotential example31_expected_contraction();  // typed in from the printed example

using Rng = std::mt19937_64;

struct Contractible {
  Quiver quiver;
  std::string a0;
};

// Up to max_vertices vertices (at least 2) and max_arrows arrows; a0 is a non-loop arrow.
Contractible random_contractible(Rng& rng, int max_vertices, int max_arrows, bool loops = true);
DimVector random_equal_sector(Rng& rng, const Quiver& q, const std::string& a0, int max_rank,
                              long max_total);
// Random Sym_gamma-invariant polynomial of degree <= max_degree.
SymPoly random_sympoly(Rng& rng, const DimVector& gamma, int max_degree);

// Admissible quivers with potential for the mutation check, case 'A' or 'B'.
std::vector<QuiverWithPotential> mutation_family(Rng& rng, char which, std::size_t count);

}  // namespace qpc
