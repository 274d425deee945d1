#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "infmult/check_record.hpp"
#include "infmult/clifford.hpp"
#include "infmult/scalar.hpp"

namespace infmult {

/// Point of (C^n \ {0}) / R^x with Gaussian-rational coordinates.
struct ProjPoint {
  std::vector<GaussianRational> coords;

  /// Throws std::invalid_argument when all coordinates vanish.
  void validate() const;
  std::size_t dim() const { return coords.size(); }
  /// e_j (1-based).
  static ProjPoint basis(std::size_t n, std::size_t j);
};

struct Stratum {
  std::size_t j = 0;
  std::size_t dimension() const { return 2 * j - 1; }
  friend bool operator==(const Stratum&, const Stratum&) = default;
};

/// Largest j with z_j != 0.
Stratum stratum_of(const ProjPoint& p);

/// rank_Q span{X v : X in the Lie algebra basis of H} + R v, minus one.
std::size_t orbit_dimension(const ProjPoint& p);

/// r h p = q with h = phase * I + sum_k a_k eps^k E^k (phase on the diagonal).
struct TransitivityWitness {
  double theta = 0.0;
  std::vector<std::complex<double>> a;
  double r = 1.0;
  double residual = 0.0;
  /// Set when the phase is a Gaussian-rational unit and r is rational; then
  /// r h p == q was checked in exact arithmetic.
  bool exact = false;
  std::optional<GaussianRational> exact_phase;
  std::vector<GaussianRational> exact_a;
};

std::optional<TransitivityWitness> transitivity_witness(const ProjPoint& p, const ProjPoint& q);

/// r h p evaluated in floating point.
std::vector<std::complex<double>> apply_witness(const TransitivityWitness& w, const ProjPoint& p);

struct OrbitCensus {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::map<std::size_t, std::size_t> bucket_sizes;     // stratum -> number of points
  std::map<std::size_t, std::size_t> dimensions;       // stratum -> tangent-rank dimension
  std::size_t dimension_mismatches = 0;
  std::size_t same_stratum_pairs = 0;
  std::size_t witness_failures = 0;
  std::size_t exact_witnesses = 0;
  std::size_t cross_stratum_pairs = 0;
  std::size_t cross_stratum_false_witnesses = 0;
  double max_residual = 0.0;

  std::size_t strata_count() const { return bucket_sizes.size(); }
  bool ok() const;
  nlohmann::json to_json() const;
};

/// Random Gaussian-rational points (plus every e_j) bucketed by stratum;
/// tangent-rank dimension checked on every point and transitivity witnesses on
/// `pairs_per_stratum` random same-stratum pairs per stratum.
OrbitCensus enumerate_strata(std::size_t n, std::size_t samples, std::uint64_t seed,
                             std::size_t pairs_per_stratum = 50);

CheckRecord orbit_census_check(std::size_t n, std::size_t samples, std::uint64_t seed);

/// Point of ((C + Cbar)^n \ {0}) / C^x, coordinates (z_j, w_j).
struct CplxProjPoint {
  std::vector<std::pair<GaussianRational, GaussianRational>> coords;

  void validate() const;
  std::size_t dim() const { return coords.size(); }
  /// c.((z, w), ...) = ((c z, conj(c) w), ...).
  CplxProjPoint scaled(const GaussianRational& c) const;
};

/// z_{n-1} / z_n on the locus w_n = 0, z_n != 0.
std::optional<GaussianRational> zeta_invariant(const CplxProjPoint& p);

/// Applies an element of H_C with Gaussian-rational entries.
CplxProjPoint act(const CplxPairMatrix& h, const CplxProjPoint& p);

/// Symbolic zeta invariance for a generic point of Y^zeta and a generic
/// element of H_C, then `samples` random rational H_C images per zeta value
/// and pairwise distinctness of the labels.
CheckRecord complex_orbit_check(std::size_t n, const std::vector<GaussianRational>& zetas, std::size_t samples,
                                std::uint64_t seed = 1);

/// `count` pairwise distinct rational zeta values (deterministic).
std::vector<GaussianRational> default_zetas(std::size_t count);

}  // namespace infmult
