#include "doctest.h"

#include <random>

#include "gridsight/poset.hpp"

using namespace gridsight;

TEST_CASE("s-poset construction and width at p=5, t=(2,3)") {
  ResidueVector rv(5, 3, {2, 3});
  Poset P = build_s_poset(rv, {false, false});
  REQUIRE(P.size() == 5);
  // k=0 sits below every other element; the remaining four are mutually
  // incomparable, so the width is 4
  for (std::size_t j = 1; j < 5; ++j) CHECK(P.less(0, j));
  WidthResult w = width_exact(P);
  CHECK(w.width == 4);
  CHECK(w.antichain.members.size() == 4);
  CHECK(w.cover.chains.size() == 4);
  CHECK(validate_antichain(P, w.antichain));
  CHECK(validate_cover(P, w.cover));
  CHECK(width_bruteforce(P) == 4);
}

TEST_CASE("sign flips are coordinate negations") {
  ResidueVector rv(7, 3, {2, 5});
  Poset flipped = build_s_poset(rv, {true, false});
  Poset direct = build_s_poset(ResidueVector(7, 3, {5, 5}), {false, false});
  REQUIRE(flipped.size() == direct.size());
  for (std::size_t i = 0; i < flipped.size(); ++i)
    for (std::size_t j = 0; j < flipped.size(); ++j)
      CHECK(flipped.less(i, j) == direct.less(i, j));
}

TEST_CASE("matching width equals bruteforce on seeded posets") {
  std::mt19937_64 rng(7);
  const long long primes[] = {5, 7, 11, 13};
  for (int trial = 0; trial < 60; ++trial) {
    long long p = primes[rng() % 4];
    std::uniform_int_distribution<long long> coord(1, p - 1);
    ResidueVector rv(p, 3, {coord(rng), coord(rng)});
    std::vector<bool> signs{bool(rng() & 1), bool(rng() & 1)};
    Poset P = build_s_poset(rv, signs);
    CHECK(width_exact(P).width == width_bruteforce(P));
  }
}

TEST_CASE("validators reject bad witnesses") {
  ResidueVector rv(5, 3, {2, 3});
  Poset P = build_s_poset(rv, {false, false});
  CHECK(!validate_antichain(P, Antichain{{0, 1}}));     // comparable pair
  CHECK(!validate_chain(P, {1, 2}));                    // incomparable pair
  CHECK(validate_chain(P, {0, 1}));
  CHECK(!validate_cover(P, ChainCover{{{0, 1}}}));      // misses elements
}

TEST_CASE("half split at p=5, t=(2,3)") {
  ResidueVector rv(5, 3, {2, 3});
  SplitReport r = split_halves(build_s_poset(rv, {false, false}), 5);
  CHECK(r.w == 4);
  CHECK(r.w_plus == 2);
  CHECK(r.w_minus == 2);
  CHECK(r.equal_halves);
  CHECK(r.inequality);
}

TEST_CASE("best family member at p=5") {
  // t=(1,1) is a chain; flipping either sign already yields width 4, and
  // the first such sign vector in enumeration order is (+,-)
  FamilyBest best = best_in_family(ResidueVector(5, 3, {1, 1}));
  CHECK(best.width.width == 4);
  CHECK(best.signs == std::vector<bool>{false, true});

  FamilyBest best2 = best_in_family(ResidueVector(5, 3, {2, 3}));
  CHECK(best2.width.width == 4);
  CHECK(best2.signs == std::vector<bool>{false, false});  // all-plus wins ties
}

TEST_CASE("primitive poset membership") {
  Poset P = build_primitive_poset(ResidueVector(5, 3, {2, 3}));
  REQUIRE(P.size() == 1);  // only k=4 satisfies (t_i k)%5 < k
  CHECK(P.elements[0].k_index == 4);
  CHECK(P.elements[0].coords[0] == Rat(3, 4));
  CHECK(P.elements[0].coords[1] == Rat(1, 2));
  CHECK(P.elements[0].coords[2] == Rat(4));

  CHECK(build_primitive_poset(ResidueVector(7, 3, {1, 1})).size() == 0);
}

TEST_CASE("sign vector enumeration order") {
  auto all = all_sign_vectors(2);
  REQUIRE(all.size() == 4);
  CHECK(all[0] == std::vector<bool>{false, false});
  CHECK(all[3] == std::vector<bool>{true, true});
}
