#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/quiver.hpp"
#include "qpc/scattering.hpp"

namespace qpc {

// Representation over F_p; maps[a][r][c] with rows indexed by t(a), columns by s(a).
struct FpRep {
  unsigned p = 2;
  DimVector dims;
  std::map<std::string, std::vector<std::vector<unsigned>>> maps;

  std::string to_string() const;
};

struct KingLimits {
  long max_total = 4;
  unsigned long long max_representations = 1ULL << 22;
  unsigned threads = 1;
};

struct KingResult {
  bool exists = false;
  std::optional<FpRep> witness;
  unsigned long long representations = 0;
};

// Brute force over all representations of dimension gamma; relations are not imposed.
KingResult king_semistable_exists(const Quiver& q, const DimVector& gamma, const Stability& kappa,
                                  unsigned p, const KingLimits& limits = {});

bool is_semistable(const Quiver& q, const FpRep& rep, const Stability& kappa);
// Dimension vectors of all subrepresentations, with multiplicity.
std::vector<DimVector> subrep_dimensions(const Quiver& q, const FpRep& rep);
// Successive quotients of the Harder-Narasimhan filtration for slope kappa(d)/|d|.
std::vector<DimVector> hn_factors(const Quiver& q, const FpRep& rep, const Stability& kappa);

struct WallSample {
  Stability kappa;
  bool semistable = false;
};

struct WallScanEntry {
  DimVector gamma;  // also the hyperplane normal
  std::vector<WallSample> samples;
  bool is_wall() const;
};

// Nonzero {-1,0,1} combinations of a lattice basis of gamma^perp (just 0 when that space is 0).
std::vector<Stability> perp_samples(const Quiver& q, const DimVector& gamma);

std::vector<WallScanEntry> wall_support_scan(const Quiver& q, const DimVector& max_gamma,
                                             unsigned p, const KingLimits& limits = {});
// One line per sample: gamma; normal; kappa; verdict.
std::string export_wall_scan(const std::vector<WallScanEntry>& entries);

std::vector<Rational> default_eta_grid();

struct EtaSample {
  unsigned p = 2;
  DimVector gamma_hat;
  Stability kappa_hat;
  std::vector<Rational> working_k;
};

struct EtaReport {
  std::vector<EtaSample> samples;  // wall samples of the contracted quiver
  std::optional<Rational> common_k;
  bool all_embedded = false;
};

// Lifted totals stay within limits.max_total.
EtaReport eta_check(const Quiver& q, std::string_view a0, const std::vector<unsigned>& fields,
                    const std::vector<Rational>& grid, const KingLimits& limits = {});

}  // namespace qpc
