#pragma once

#include <cstdint>
#include <vector>

namespace gridsight {

// Residue tuple (t_1,...,t_{d-1},1) mod a prime p, with d >= 3 and every
// t_i in [1, p-1]. The trailing 1 is implicit; `t` stores the d-1 free
// coordinates.
struct ResidueVector {
  long long p = 0;
  int d = 0;
  std::vector<long long> t;

  ResidueVector() = default;
  ResidueVector(long long p_, int d_, std::vector<long long> t_);

  // Full d-vector including the implicit trailing 1.
  std::vector<long long> full() const;
};

bool is_prime(long long n);

// Largest prime p <= n (n >= 3). Deterministic trial division.
long long next_prime_leq(long long n);

struct HeightResult {
  long long value = 0;
  long long witness = 0;  // minimizing multiplier a, smallest on ties
};

struct DualHeightResult {
  long long value = 0;
  std::vector<long long> alpha;  // lexicographically least witness, size d
};

// h_p(t) = min over a in [1,p-1] of max((a t_1)%p, ..., (a t_{d-1})%p, a).
HeightResult height(const ResidueVector& t);

// h_p^*(t) = min over nonzero integer alpha with alpha . (t_1..t_{d-1},1) = 0
// (mod p) of max|alpha_i|. Radius-growing enumeration, lexicographic ties.
DualHeightResult dual_height(const ResidueVector& t);

struct DualityReport {
  long long hp = 0;
  long long hp_witness = 0;
  long long hp_star = 0;
  std::vector<long long> hp_star_witness;
  double bound = 0.0;  // e*(d-1)*p*ceil(ln p) / (2*hp_star)
  bool holds = false;
};

DualityReport check_height_duality(const ResidueVector& t);

struct MeanHeightStats {
  double mean = 0.0;
  long long max = 0;
  double ratio = 0.0;  // mean / (p^{(d-1)/d} * ln p)
  std::size_t count = 0;
  bool exhaustive = false;
};

// Mean of h_p over all (p-1)^{d-1} tuples t, or over `sample_size` tuples
// drawn uniformly with the given seed when sample_size > 0 and smaller than
// the full space. OpenMP-parallel over tuples.
MeanHeightStats mean_height(long long p, int d, std::size_t sample_size, std::uint64_t seed);

// Single-threaded reference used by tests and the kernel benchmark.
MeanHeightStats mean_height_serial(long long p, int d, std::size_t sample_size, std::uint64_t seed);

}  // namespace gridsight
