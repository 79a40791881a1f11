#include "gridsight/cover.hpp"

#include <stdexcept>

namespace gridsight {

CoverReport toy_chain_cover(const ResidueVector& t) {
  const long long p = t.p;
  const int d = t.d;
  HeightResult h = height(t);

  std::vector<long long> u;
  for (long long ti : t.t) u.push_back((h.witness * ti) % p);
  u.push_back(h.witness);

  CoverReport rep;
  rep.poset = build_s_poset(t, std::vector<bool>(d - 1, false));
  rep.generator = u;
  rep.bound = static_cast<long long>(d) * h.value;

  // Walk k*u for k = 1..p-1; k*u is the poset element with index (k*w)%p.
  std::vector<IndexList> chains;
  IndexList cur;
  std::vector<long long> prev(d, 0);
  for (long long k = 1; k < p; ++k) {
    std::vector<long long> tup(d);
    for (int i = 0; i < d; ++i) tup[i] = (k * u[i]) % p;
    bool wrap = false;
    for (int i = 0; i < d; ++i)
      if (tup[i] < prev[i]) wrap = true;
    if (k > 1 && wrap) {
      chains.push_back(cur);
      cur.clear();
      ++rep.wrap_steps;
    }
    cur.push_back(static_cast<std::size_t>((k * h.witness) % p));
    prev = tup;
  }
  chains.push_back(cur);
  chains.front().insert(chains.front().begin(), 0);  // 0*u below everything
  rep.cover.chains = std::move(chains);

  if (static_cast<long long>(rep.cover.chains.size()) > rep.bound)
    throw std::logic_error("toy_chain_cover: bound violated");
  if (!validate_cover(rep.poset, rep.cover))
    throw std::logic_error("toy_chain_cover: invalid cover");
  rep.width = width_exact(rep.poset).width;
  return rep;
}

CoverReport primitive_chain_cover(const ResidueVector& t) {
  const long long p = t.p;
  const int d = t.d;
  for (long long ti : t.t)
    if (ti < 2)
      throw std::invalid_argument(
          "primitive_chain_cover: t_i = 1 unsupported (shifted height undefined)");

  std::vector<long long> shifted;
  for (long long ti : t.t) shifted.push_back(ti - 1);
  HeightResult hshift = height(ResidueVector(p, d, shifted));

  long long l;
  CoverReport rep;
  if (2 * hshift.value > p) {
    l = 1;
    rep.bound = static_cast<long long>(d - 1) * p;
  } else {
    l = hshift.witness;
    rep.bound = static_cast<long long>(2 * d - 1) * hshift.value;
  }
  for (long long ti : t.t)
    if ((ti * l) % p < l)
      throw std::logic_error("primitive_chain_cover: step l violates (t_i l)%p >= l");

  rep.generator = {l};
  rep.poset = build_primitive_poset(t);

  std::vector<long long> index_of(p, -1);
  for (std::size_t i = 0; i < rep.poset.size(); ++i)
    index_of[rep.poset.elements[i].k_index] = static_cast<long long>(i);

  auto admissible = [&](long long a) { return index_of[a] >= 0; };
  auto cut_after = [&](long long a) {
    for (long long ti : t.t) {
      long long sa = (ti * a) % p, sl = (ti * l) % p;
      if (sa + sl >= p) return true;
      // step identity when the sum stays below p
      if ((ti * (a + l)) % p != sa + sl)
        throw std::logic_error("primitive_chain_cover: step identity violated");
    }
    return false;
  };

  std::vector<IndexList> chains;
  for (long long r = 1; r <= l && r < p; ++r) {
    IndexList cur;
    long long prev_idx = -1;
    for (long long a = r; a < p; a += l) {
      if (admissible(a)) {
        long long idx = index_of[a];
        if (prev_idx >= 0 &&
            !rep.poset.less(static_cast<std::size_t>(prev_idx), static_cast<std::size_t>(idx))) {
          chains.push_back(cur);  // domination check failed, start fresh
          cur.clear();
        }
        cur.push_back(static_cast<std::size_t>(idx));
        prev_idx = idx;
      }
      if (a + l < p && cut_after(a) && !cur.empty()) {
        chains.push_back(cur);
        cur.clear();
        prev_idx = -1;
      }
    }
    if (!cur.empty()) chains.push_back(cur);
  }
  rep.cover.chains = std::move(chains);

  if (static_cast<long long>(rep.cover.chains.size()) > rep.bound)
    throw std::logic_error("primitive_chain_cover: bound violated");
  if (!validate_cover(rep.poset, rep.cover))
    throw std::logic_error("primitive_chain_cover: invalid cover");
  rep.width = width_exact(rep.poset).width;
  return rep;
}

}  // namespace gridsight
