#include "doctest.h"

#include "gridsight/cover.hpp"
#include "gridsight/modular.hpp"

using namespace gridsight;

TEST_CASE("multiples-walk cover at p=5, t=(2,3)") {
  CoverReport r = toy_chain_cover(ResidueVector(5, 3, {2, 3}));
  CHECK(r.generator == std::vector<long long>{2, 3, 1});  // h=3 at witness a=1
  CHECK(r.bound == 9);
  CHECK(r.cover.chains.size() == 4);
  CHECK(r.wrap_steps == 3);
  CHECK(r.width == 4);
  CHECK(validate_cover(r.poset, r.cover));
}

TEST_CASE("multiples-walk cover sweep stays within d*h") {
  for (long long p : {7, 11, 13}) {
    for (long long a = 1; a < p; ++a)
      for (long long b = 1; b < p; ++b) {
        ResidueVector t(p, 3, {a, b});
        CoverReport r = toy_chain_cover(t);
        long long h = height(t).value;
        CHECK(static_cast<long long>(r.cover.chains.size()) <= 3 * h);
        CHECK(r.width <= r.cover.chains.size());
      }
  }
}

TEST_CASE("primitive cover at p=5, t=(2,3)") {
  CoverReport r = primitive_chain_cover(ResidueVector(5, 3, {2, 3}));
  CHECK(r.poset.size() == 1);
  CHECK(r.cover.chains.size() == 1);
  // shifted tuple (1,2) has height 2, so the bound is (2d-1)*2
  CHECK(r.bound == 10);
  CHECK(r.width == 1);
}

TEST_CASE("primitive cover rejects unit coordinates") {
  CHECK_THROWS_AS(primitive_chain_cover(ResidueVector(5, 3, {1, 2})), std::invalid_argument);
}

TEST_CASE("primitive cover sweep validates") {
  for (long long p : {7, 11, 13}) {
    for (long long a = 2; a < p; ++a)
      for (long long b = 2; b < p; ++b) {
        CoverReport r = primitive_chain_cover(ResidueVector(p, 3, {a, b}));
        CHECK(validate_cover(r.poset, r.cover));
        CHECK(static_cast<long long>(r.cover.chains.size()) <= r.bound);
        CHECK(r.width <= r.cover.chains.size());
      }
  }
}
