#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gridsight/geometry.hpp"
#include "gridsight/lattice.hpp"
#include "gridsight/modular.hpp"
#include "gridsight/poset.hpp"

namespace gridsight {

struct FamilyPlan {
  ResidueVector base;
  std::vector<bool> signs;
  std::vector<long long> t_signed;   // effective coordinates after flips
  std::size_t width = 0;             // chosen poset width
  std::vector<long long> heights;    // selected antichain heights, all > (p-1)/2
  bool lattice_won = false;          // lattice antichain beat the exact-width witness
};

// Bases on the stride-`spacing` sublattice {1, 1+spacing, ...} of [1,p-1]^{d-1}.
std::vector<ResidueVector> enumerate_families(long long p, int d, long long spacing = 6);

struct ConstructionResult {
  long long p = 0;
  int d = 0;
  Configuration config;
  std::size_t predicted_count = 0;  // distinct cubes over all families
  std::size_t collisions = 0;       // cubes demanded by more than one family
  std::vector<FamilyPlan> families;
};

// One obstructing cube per selected (family, height): corner
// (floor(t'_1 k/p), ..., k), the cube the lateral edge crosses between
// heights k and k+1. Families merged with deduplication.
ConstructionResult build_lower_bound_config(long long p, int d);

// Restricted-direction witness segments, one per selected cube: from the
// observer floor to the cube's bottom facet, parallel to the family's
// lateral edge, offset 1/(4p^2) inside the free corner of the projected
// square. Paired with the cube corner they certify.
std::vector<SightlineHint> floor_witness_segments(const ConstructionResult& r);

// Number of distinct cubes whose witness segment is unobstructed (exact).
std::size_t certify_floor(const ConstructionResult& r);

struct ScalingRow {
  long long p = 0;
  std::size_t families = 0;
  std::size_t predicted = 0;
  long long sampled = -1;  // -1 when not run
};

struct ScalingResult {
  std::vector<ScalingRow> rows;
  bool has_slope = false;
  double slope = 0.0;      // least-squares d log(predicted) / d log(p)
  double intercept = 0.0;
};

// mode geometric (d = 3 only) also runs the sampling oracle on each
// configuration. Needs >= 3 primes for a fit.
ScalingResult scaling_experiment(const std::vector<long long>& primes, int d,
                                 bool geometric, int rays_per_pair, std::uint64_t seed);

std::string scaling_csv(const ScalingResult& r);
std::string scaling_svg(const ScalingResult& r);

}  // namespace gridsight
