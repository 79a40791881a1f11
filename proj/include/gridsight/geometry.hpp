#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gridsight/modular.hpp"
#include "gridsight/poset.hpp"
#include "gridsight/rational.hpp"

namespace gridsight {

// Obstructing unit hypercubes inside [0,n)^d, identified by their integer
// corner. The observer is the unit hypercube at the origin and is never
// obstructing.
struct Configuration {
  long long n = 0;
  int d = 0;
  std::vector<std::vector<long long>> cubes;
};

using RatPoint = std::vector<Rat>;

// Blocking convention: obstructing interiors are open, endpoints may touch
// surfaces. True iff the open segment (A,B) meets the open unit box at
// `corner`.
bool segment_hits_open_box(const RatPoint& a, const RatPoint& b,
                           const std::vector<long long>& corner);

bool segment_blocked(const RatPoint& a, const RatPoint& b, const Configuration& c,
                     const std::vector<long long>* skip_cube = nullptr);

// Projection of the height-k cube corner onto the observer face along the
// lateral edge: (1 - {t_1 k/p}, ..., 1 - {t_{d-1} k/p}).
RatPoint project_corner(long long k, const ResidueVector& t);

struct RestrictedVisibility {
  std::size_t count = 0;                 // max simultaneously visible cubes
  std::vector<long long> heights;        // a realizing set of heights k
  std::vector<std::vector<bool>> blocks; // blocks[k2][k1]: k2 occludes k1
};

// Direct simulation of the projected-square blocking rule for sight lines
// parallel to the lateral edge.
RestrictedVisibility restricted_visible_set(const ResidueVector& t);

// Exact 2D visibility via critical segments through corner pairs (n <= 64).
// Returns indices into c.cubes.
std::vector<std::size_t> visible_2d_exact(const Configuration& c);

// Dense boundary-grid sampling reference; sound underestimate.
std::vector<std::size_t> visible_2d_dense_rays(const Configuration& c, int grid);

// Candidate sightline supplied by a caller, keyed by the cube corner it
// targets; tested exactly like every sampled segment.
using SightlineHint = std::pair<std::vector<long long>, std::pair<RatPoint, RatPoint>>;

// Seeded stratified + corner-biased endpoint sampling with exact segment
// tests; every reported cube is truly visible (d in {2,3}). Hints, when
// given, are extra candidate segments tried first.
std::vector<std::size_t> visible_sampled(const Configuration& c, int rays_per_pair,
                                         std::uint64_t seed,
                                         const std::vector<SightlineHint>* hints = nullptr);

// Shallow-angle blocking: the direction meets the facet normal (axis
// `normal_axis`) within 90-theta degrees. Exact squared-cosine comparison;
// theta = 45 uses the exact threshold 1/2.
bool shallow_blocks(const RatPoint& direction, int normal_axis, double theta_deg);

// Bottom facet [c_1,c_1+1] x ... x {a} (corner includes the height a as its
// last entry) is a primitive obstruction of the parallelotope with
// characteristic vertex (t_1,...,t_{d-1},p): its open interior is crossed by
// both the origin line and the (1,...,1,0) line to that vertex (boundary
// grazing does not count). Throws when the facet misses the origin edge.
bool is_primitive_obstruction(const std::vector<long long>& facet_corner,
                              const ResidueVector& t);

// Heights a in [1,p) whose E_P-intersecting bottom facet is primitive, by
// the geometric characterization above.
std::vector<long long> primitive_heights_geometric(const ResidueVector& t);

}  // namespace gridsight
