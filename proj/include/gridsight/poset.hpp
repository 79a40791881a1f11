#pragma once

#include <cstddef>
#include <vector>

#include "gridsight/modular.hpp"
#include "gridsight/rational.hpp"

namespace gridsight {

struct PosetElement {
  std::vector<Rat> coords;  // size d
  long long k_index = 0;    // generating multiplier
};

// Finite set of d-tuples compared by strict domination in every coordinate.
// Elements equal in some coordinate are incomparable.
struct Poset {
  int d = 0;
  std::vector<PosetElement> elements;

  std::size_t size() const { return elements.size(); }

  bool less(std::size_t i, std::size_t j) const {
    for (int c = 0; c < d; ++c)
      if (!(elements[i].coords[c] < elements[j].coords[c])) return false;
    return true;
  }
  bool comparable(std::size_t i, std::size_t j) const { return less(i, j) || less(j, i); }
};

using IndexList = std::vector<std::size_t>;

struct Antichain {
  IndexList members;
};

struct ChainCover {
  std::vector<IndexList> chains;
};

bool validate_antichain(const Poset& P, const Antichain& A);
bool validate_chain(const Poset& P, const IndexList& chain);
bool validate_cover(const Poset& P, const ChainCover& C);

// Elements ((+-k t_1)%p, ..., (+-k t_{d-1})%p, k) for k = 0..p-1.
// minus_signs[i] flips coordinate i.
Poset build_s_poset(const ResidueVector& t, const std::vector<bool>& minus_signs);

// Elements (((t_1 k)%p)/k, ..., ((t_{d-1} k)%p)/k, k) over k in [1,p) with
// (t_i k)%p < k for every i. May be empty.
Poset build_primitive_poset(const ResidueVector& t);

struct WidthResult {
  std::size_t width = 0;
  Antichain antichain;  // maximum antichain witness
  ChainCover cover;     // minimum chain cover witness, |cover| == width
};

// Exact width by minimum chain partition: maximum bipartite matching on the
// split comparability DAG (Hopcroft-Karp), antichain recovered via Konig.
// Both witnesses are validated before return.
WidthResult width_exact(const Poset& P);

// Exhaustive maximum-antichain search; rejects |P| > 24.
std::size_t width_bruteforce(const Poset& P);

struct SplitReport {
  std::size_t w = 0;
  std::size_t w_minus = 0;  // width over k > (p-1)/2
  std::size_t w_plus = 0;   // width over k <= (p-1)/2
  bool equal_halves = false;
  bool inequality = false;  // w_minus >= (w-1)/2
};

// Split an S-poset at k = p/2 and compare half widths.
SplitReport split_halves(const Poset& P, long long p);

struct FamilyBest {
  std::vector<bool> signs;
  Poset poset;
  WidthResult width;
};

// Maximum width over all 2^{d-1} sign choices; ties go to the
// lexicographically first sign vector (all-plus first).
FamilyBest best_in_family(const ResidueVector& t);

// All sign vectors of length n in lexicographic order, all-plus first.
std::vector<std::vector<bool>> all_sign_vectors(int n);

}  // namespace gridsight
