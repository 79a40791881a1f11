#include "doctest.h"

#include <set>

#include "gridsight/construct.hpp"

using namespace gridsight;

TEST_CASE("family enumeration on the stride-6 sublattice") {
  CHECK(enumerate_families(13, 3).size() == 4);  // {1,7} per axis
  CHECK(enumerate_families(7, 3).size() == 1);
  CHECK(enumerate_families(7, 3, 1).size() == 36);
  CHECK(enumerate_families(13, 4).size() == 8);
  CHECK_THROWS(enumerate_families(12, 3));
}

TEST_CASE("lower-bound configuration at p=5") {
  ConstructionResult r = build_lower_bound_config(5, 3);
  CHECK(r.families.size() == 1);
  CHECK(r.predicted_count >= r.families.size());
  for (const FamilyPlan& f : r.families) {
    CHECK(!f.heights.empty());
    for (long long k : f.heights) CHECK(k > 2);  // upper half only
  }
  std::set<std::vector<long long>> uniq(r.config.cubes.begin(), r.config.cubes.end());
  CHECK(uniq.size() == r.config.cubes.size());
  CHECK(r.predicted_count == r.config.cubes.size());
}

TEST_CASE("restricted-direction witnesses certify the p=11 floor") {
  ConstructionResult r = build_lower_bound_config(11, 3);
  CHECK(r.families.size() == 4);
  CHECK(certify_floor(r) == r.predicted_count);
  auto hints = floor_witness_segments(r);
  CHECK(hints.size() == r.predicted_count);
  std::vector<std::size_t> seen = visible_sampled(r.config, 16, 99, &hints);
  CHECK(seen.size() >= r.predicted_count);
}

TEST_CASE("scaling table and fit") {
  ScalingResult one = scaling_experiment({11}, 3, false, 8, 1);
  CHECK(one.rows.size() == 1);
  CHECK(!one.has_slope);

  ScalingResult r = scaling_experiment({5, 7, 11, 13}, 3, false, 8, 1);
  CHECK(r.rows.size() == 4);
  CHECK(r.has_slope);
  std::string csv = scaling_csv(r);
  CHECK(csv.rfind("p,families,predicted,sampled,slope\n", 0) == 0);
  std::string svg = scaling_svg(r);
  CHECK(svg.find("<svg") != std::string::npos);
}
