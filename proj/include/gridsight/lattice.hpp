#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gridsight/modular.hpp"
#include "gridsight/poset.hpp"
#include "gridsight/rational.hpp"

namespace gridsight {

using BigInt = boost::multiprecision::cpp_int;
using IntVec = std::vector<long long>;

struct IntegerLattice {
  std::vector<std::vector<BigInt>> basis;  // rows are basis vectors
};

// Basis (t_1,...,t_{d-1},1), p*e_1, ..., p*e_{d-1}.
IntegerLattice parallelotope_lattice(const ResidueVector& t);

// |det(basis)| by fraction-free (Bareiss) elimination. Throws on a
// degenerate basis.
BigInt covolume(const IntegerLattice& L);

struct ReducedBasis {
  std::vector<std::vector<BigInt>> vectors;
};

// Textbook LLL with delta = 3/4 and exact rational Gram-Schmidt.
ReducedBasis lll_reduce(const IntegerLattice& L);

// Exact check of the size and Lovasz conditions.
bool is_lll_reduced(const std::vector<std::vector<BigInt>>& basis);

// Pigeonhole short vector in S for d = 3: bucket the p multiples of t into
// an m^3 grid, m = floor(p^{1/3}), take the first colliding difference in
// symmetric range. max|coord| <= ceil(p/m).
IntVec small_vector_3d(const ResidueVector& t);

// Two linearly independent members of S with s_1*s_2 small (d = 3).
std::pair<IntVec, IntVec> independent_pair_3d(const ResidueVector& t);

// First k in scan order whose multiple k*t mod p has every coordinate in
// [lo, hi]. Empty when no multiple qualifies.
std::optional<IntVec> interior_point(const ResidueVector& t, const Rat& lo, const Rat& hi);

struct LatticeAntichain {
  std::vector<bool> signs;   // chosen family member
  Poset poset;               // that member
  Antichain antichain;       // indices into poset
  bool normal_uniform = false;  // sign-uniform normal found (vs fallback extraction)
};

// Shifted sublattice antichain: rank-2 construction for d = 3, LLL-prefix
// construction for d > 3. Output always validates against the chosen poset.
LatticeAntichain antichain_from_lattice(const ResidueVector& t);

}  // namespace gridsight
