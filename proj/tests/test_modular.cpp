#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "gridsight/modular.hpp"

using namespace gridsight;

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(53));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
  CHECK(next_prime_leq(100) == 97);
  CHECK(next_prime_leq(53) == 53);
}

TEST_CASE("residue vector validation") {
  CHECK_THROWS_AS(ResidueVector(10, 3, {2, 3}), std::invalid_argument);  // composite p
  CHECK_THROWS_AS(ResidueVector(5, 3, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ResidueVector(5, 3, {2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(ResidueVector(5, 2, {2}), std::invalid_argument);  // d >= 3
  ResidueVector rv(5, 3, {2, 3});
  CHECK(rv.full() == std::vector<long long>{2, 3, 1});
}

TEST_CASE("height at small fixtures") {
  // max(10a%11, a) is minimized at a=5 and a=6; smallest multiplier wins
  HeightResult h = height(ResidueVector(11, 3, {10, 10}));
  CHECK(h.value == 6);
  CHECK(h.witness == 5);

  HeightResult h2 = height(ResidueVector(5, 3, {2, 3}));
  CHECK(h2.value == 3);
  CHECK(h2.witness == 1);

  HeightResult h3 = height(ResidueVector(13, 4, {1, 1, 1}));
  CHECK(h3.value == 1);
  CHECK(h3.witness == 1);
}

TEST_CASE("dual height finds a valid minimal relation") {
  ResidueVector rv(5, 3, {2, 3});
  DualHeightResult r = dual_height(rv);
  CHECK(r.value == 1);  // (-1,-1,0) . (2,3,1) = -5
  long long dot = 0;
  auto full = rv.full();
  for (int i = 0; i < 3; ++i) dot += r.alpha[i] * full[i];
  CHECK(((dot % 5) + 5) % 5 == 0);
  long long mx = 0;
  for (long long a : r.alpha) mx = std::max(mx, a < 0 ? -a : a);
  CHECK(mx == r.value);
}

TEST_CASE("duality bound holds on a small sweep") {
  for (long long p : {5, 7, 11, 13}) {
    for (long long a = 1; a < p; ++a)
      for (long long b = 1; b < p; ++b) {
        DualityReport r = check_height_duality(ResidueVector(p, 3, {a, b}));
        CHECK(r.holds);
        CHECK(static_cast<double>(r.hp) <= r.bound + 1e-9);
      }
  }
}

TEST_CASE("mean height: parallel agrees with serial, sampling is seeded") {
  MeanHeightStats par = mean_height(7, 3, 0, 1);
  MeanHeightStats ser = mean_height_serial(7, 3, 0, 1);
  CHECK(par.exhaustive);
  CHECK(par.count == 36);
  CHECK(par.max == ser.max);
  CHECK(par.mean == doctest::Approx(ser.mean).epsilon(1e-12));

  MeanHeightStats s1 = mean_height(31, 3, 100, 42);
  MeanHeightStats s2 = mean_height(31, 3, 100, 42);
  CHECK(!s1.exhaustive);
  CHECK(s1.count == 100);
  CHECK(s1.mean == s2.mean);
  CHECK(s1.max == s2.max);
}
