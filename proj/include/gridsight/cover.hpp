#pragma once

#include <vector>

#include "gridsight/modular.hpp"
#include "gridsight/poset.hpp"

namespace gridsight {

struct CoverReport {
  Poset poset;
  ChainCover cover;
  long long bound = 0;              // guaranteed size bound, asserted
  std::vector<long long> generator; // u for the toy cover, (l) for the primitive one
  std::size_t width = 0;            // exact width, for the Dilworth direction
  std::size_t wrap_steps = 0;       // toy cover: steps where some coordinate wrapped
};

// Multiples-of-u walk over the all-plus S-poset, u = (hp witness)*t mod p.
// A new chain starts whenever some coordinate wraps; |cover| <= d*h_p(t).
CoverReport toy_chain_cover(const ResidueVector& t);

// Additive-step partition of the primitive-obstruction poset with step l
// chosen from h_p(t-1); |cover| <= (2d-1)*h_p(t_1-1,...,t_{d-1}-1,1)
// (or (d-1)*p when l = 1). Rejects inputs with any t_i = 1.
CoverReport primitive_chain_cover(const ResidueVector& t);

}  // namespace gridsight
