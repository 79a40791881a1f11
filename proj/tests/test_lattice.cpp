#include "doctest.h"

#include <random>

#include "gridsight/lattice.hpp"

using namespace gridsight;

namespace {

// v lies in the multiples of (t_1, t_2, 1) mod p (any residue representative)
bool in_s(const IntVec& v, const ResidueVector& t) {
  long long p = t.p;
  long long k = ((v[2] % p) + p) % p;
  for (int i = 0; i < 2; ++i)
    if (((v[i] - k * t.t[i]) % p + p) % p != 0) return false;
  return true;
}

long long inf_norm(const IntVec& v) {
  long long m = 0;
  for (long long c : v) m = std::max(m, c < 0 ? -c : c);
  return m;
}

}  // namespace

TEST_CASE("parallelotope lattice covolume is p^(d-1)") {
  for (long long p : {5, 7, 13}) {
    for (int d : {3, 4}) {
      std::vector<long long> t(d - 1, 2);
      IntegerLattice L = parallelotope_lattice(ResidueVector(p, d, t));
      BigInt expect = 1;
      for (int i = 0; i < d - 1; ++i) expect *= p;
      CHECK(covolume(L) == expect);
    }
  }
}

TEST_CASE("lll reduction certifies and preserves covolume") {
  std::mt19937_64 rng(11);
  const long long primes[] = {7, 13, 31, 53};
  for (int trial = 0; trial < 20; ++trial) {
    long long p = primes[rng() % 4];
    int d = 3 + int(rng() % 3);
    std::uniform_int_distribution<long long> coord(1, p - 1);
    std::vector<long long> t(d - 1);
    for (auto& c : t) c = coord(rng);
    IntegerLattice L = parallelotope_lattice(ResidueVector(p, d, t));
    BigInt covol = covolume(L);
    ReducedBasis R = lll_reduce(L);
    CHECK(is_lll_reduced(R.vectors));
    CHECK(covolume(IntegerLattice{R.vectors}) == covol);
  }
}

TEST_CASE("degenerate basis is rejected") {
  IntegerLattice L;
  L.basis = {{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}};
  CHECK_THROWS(covolume(L));
}

TEST_CASE("pigeonhole short vector") {
  for (long long p : {11, 31, 101, 199}) {
    ResidueVector t(p, 3, {2, (p + 1) / 2});
    IntVec v = small_vector_3d(t);
    CHECK(inf_norm(v) > 0);
    CHECK(in_s(v, t));
    long long m = 1;
    while ((m + 1) * (m + 1) * (m + 1) <= p) ++m;
    CHECK(inf_norm(v) <= (p + m - 1) / m);
  }
}

TEST_CASE("independent pair spans a plane inside S") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    long long p = trial % 2 ? 53 : 97;
    std::uniform_int_distribution<long long> coord(1, p - 1);
    ResidueVector t(p, 3, {coord(rng), coord(rng)});
    auto [v1, v2] = independent_pair_3d(t);
    CHECK(in_s(v1, t));
    CHECK(in_s(v2, t));
    // nonzero cross product = linear independence
    long long cx = v1[1] * v2[2] - v1[2] * v2[1];
    long long cy = v1[2] * v2[0] - v1[0] * v2[2];
    long long cz = v1[0] * v2[1] - v1[1] * v2[0];
    CHECK((cx != 0 || cy != 0 || cz != 0));
  }
}

TEST_CASE("interior point scan") {
  auto v = interior_point(ResidueVector(5, 3, {2, 3}), Rat(1), Rat(3));
  REQUIRE(v.has_value());
  CHECK(*v == IntVec{2, 3, 1});  // k=1 already lands inside [1,3]^3

  auto none = interior_point(ResidueVector(5, 3, {2, 3}), Rat(4), Rat(4));
  CHECK(!none.has_value());
}

TEST_CASE("lattice antichain validates against its poset") {
  std::mt19937_64 rng(17);
  for (long long p : {11, 13, 17, 29}) {
    std::uniform_int_distribution<long long> coord(1, p - 1);
    for (int trial = 0; trial < 5; ++trial) {
      ResidueVector t(p, 3, {coord(rng), coord(rng)});
      LatticeAntichain la = antichain_from_lattice(t);
      CHECK(la.antichain.members.size() >= 1);
      CHECK(validate_antichain(la.poset, la.antichain));
    }
  }
}
