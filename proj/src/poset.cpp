#include "gridsight/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>

namespace gridsight {

bool validate_antichain(const Poset& P, const Antichain& A) {
  for (std::size_t i = 0; i < A.members.size(); ++i) {
    if (A.members[i] >= P.size()) return false;
    for (std::size_t j = i + 1; j < A.members.size(); ++j) {
      if (A.members[i] == A.members[j]) return false;
      if (P.comparable(A.members[i], A.members[j])) return false;
    }
  }
  return true;
}

bool validate_chain(const Poset& P, const IndexList& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] >= P.size()) return false;
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      if (!P.comparable(chain[i], chain[j])) return false;
  }
  return true;
}

bool validate_cover(const Poset& P, const ChainCover& C) {
  std::vector<bool> seen(P.size(), false);
  for (const auto& chain : C.chains) {
    if (!validate_chain(P, chain)) return false;
    for (std::size_t idx : chain) {
      if (seen[idx]) return false;
      seen[idx] = true;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Poset build_s_poset(const ResidueVector& t, const std::vector<bool>& minus_signs) {
  if (minus_signs.size() != t.t.size())
    throw std::invalid_argument("build_s_poset: need d-1 sign flags");
  Poset P;
  P.d = t.d;
  P.elements.reserve(t.p);
  for (long long k = 0; k < t.p; ++k) {
    PosetElement e;
    e.k_index = k;
    e.coords.reserve(t.d);
    for (std::size_t i = 0; i < t.t.size(); ++i) {
      long long r = (k * t.t[i]) % t.p;
      if (minus_signs[i]) r = (t.p - r) % t.p;
      e.coords.emplace_back(r);
    }
    e.coords.emplace_back(k);
    P.elements.push_back(std::move(e));
  }
  return P;
}

Poset build_primitive_poset(const ResidueVector& t) {
  Poset P;
  P.d = t.d;
  for (long long k = 1; k < t.p; ++k) {
    bool ok = true;
    for (long long ti : t.t)
      if ((ti * k) % t.p >= k) { ok = false; break; }
    if (!ok) continue;
    PosetElement e;
    e.k_index = k;
    for (long long ti : t.t) e.coords.emplace_back((ti * k) % t.p, k);
    e.coords.emplace_back(k);
    P.elements.push_back(std::move(e));
  }
  return P;
}

namespace {

// Hopcroft-Karp on the split graph: left u -> right v iff element u < v.
struct HopcroftKarp {
  std::size_t n;
  const std::vector<std::vector<std::size_t>>& adj;
  std::vector<long long> match_l, match_r, dist;
  static constexpr long long INF = -1;

  HopcroftKarp(std::size_t n_, const std::vector<std::vector<std::size_t>>& adj_)
      : n(n_), adj(adj_), match_l(n, -1), match_r(n, -1), dist(n) {}

  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < n; ++u) {
      dist[u] = match_l[u] == -1 ? 0 : INF;
      if (match_l[u] == -1) q.push(u);
    }
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj[u]) {
        long long w = match_r[v];
        if (w == -1) {
          found = true;
        } else if (dist[w] == INF) {
          dist[w] = dist[u] + 1;
          q.push(static_cast<std::size_t>(w));
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (std::size_t v : adj[u]) {
      long long w = match_r[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && dfs(static_cast<std::size_t>(w)))) {
        match_l[u] = static_cast<long long>(v);
        match_r[v] = static_cast<long long>(u);
        return true;
      }
    }
    dist[u] = INF;
    return false;
  }

  std::size_t run() {
    std::size_t m = 0;
    while (bfs())
      for (std::size_t u = 0; u < n; ++u)
        if (match_l[u] == -1 && dfs(u)) ++m;
    return m;
  }
};

}  // namespace

WidthResult width_exact(const Poset& P) {
  const std::size_t n = P.size();
  WidthResult res;
  if (n == 0) return res;

  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && P.less(i, j)) adj[i].push_back(j);

  HopcroftKarp hk(n, adj);
  std::size_t matching = hk.run();
  res.width = n - matching;

  // Chains from matched successor edges.
  std::vector<bool> is_head(n, true);
  for (std::size_t u = 0; u < n; ++u)
    if (hk.match_l[u] != -1) is_head[static_cast<std::size_t>(hk.match_l[u])] = false;
  for (std::size_t u = 0; u < n; ++u) {
    if (!is_head[u]) continue;
    IndexList chain;
    long long cur = static_cast<long long>(u);
    while (cur != -1) {
      chain.push_back(static_cast<std::size_t>(cur));
      cur = hk.match_l[static_cast<std::size_t>(cur)];
    }
    res.cover.chains.push_back(std::move(chain));
  }

  // Konig: Z = vertices reachable by alternating paths from unmatched left.
  // Cover = (L \ Z_L) union Z_R; antichain = elements outside the cover on
  // both sides.
  std::vector<bool> zl(n, false), zr(n, false);
  std::queue<std::size_t> q;
  for (std::size_t u = 0; u < n; ++u)
    if (hk.match_l[u] == -1) { zl[u] = true; q.push(u); }
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    for (std::size_t v : adj[u]) {
      if (zr[v]) continue;
      zr[v] = true;
      long long w = hk.match_r[v];
      if (w != -1 && !zl[static_cast<std::size_t>(w)]) {
        zl[static_cast<std::size_t>(w)] = true;
        q.push(static_cast<std::size_t>(w));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (zl[i] && !zr[i]) res.antichain.members.push_back(i);

  if (res.antichain.members.size() != res.width ||
      res.cover.chains.size() != res.width ||
      !validate_antichain(P, res.antichain) || !validate_cover(P, res.cover))
    throw std::logic_error("width_exact: witness certification failed");
  return res;
}

std::size_t width_bruteforce(const Poset& P) {
  const std::size_t n = P.size();
  if (n > 24) throw std::invalid_argument("width_bruteforce: poset too large");
  if (n == 0) return 0;
  std::vector<std::uint32_t> nbr(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && P.comparable(i, j)) nbr[i] |= (1u << j);

  // Maximum independent set in the comparability graph.
  std::size_t best = 0;
  auto rec = [&](auto&& self, std::uint32_t cand, std::size_t cur) -> void {
    if (cand == 0) {
      best = std::max(best, cur);
      return;
    }
    if (cur + static_cast<std::size_t>(__builtin_popcount(cand)) <= best) return;
    std::uint32_t v = static_cast<std::uint32_t>(__builtin_ctz(cand));
    self(self, cand & ~(1u << v) & ~nbr[v], cur + 1);
    self(self, cand & ~(1u << v), cur);
  };
  rec(rec, n == 32 ? ~0u : ((1u << n) - 1), 0);
  return best;
}

SplitReport split_halves(const Poset& P, long long p) {
  const long long mid = (p - 1) / 2;
  Poset lower, upper;
  lower.d = upper.d = P.d;
  for (const auto& e : P.elements) {
    if (e.k_index > mid) upper.elements.push_back(e);
    else lower.elements.push_back(e);
  }
  SplitReport rep;
  rep.w = width_exact(P).width;
  rep.w_minus = width_exact(upper).width;
  rep.w_plus = width_exact(lower).width;
  rep.equal_halves = rep.w_minus == rep.w_plus;
  rep.inequality = 2 * rep.w_minus >= rep.w - 1;
  return rep;
}

std::vector<std::vector<bool>> all_sign_vectors(int n) {
  std::vector<std::vector<bool>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> s(n);
    for (int i = 0; i < n; ++i) s[i] = (mask >> (n - 1 - i)) & 1;  // lexicographic
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FamilyBest best_in_family(const ResidueVector& t) {
  FamilyBest best;
  bool first = true;
  for (const auto& signs : all_sign_vectors(t.d - 1)) {
    Poset P = build_s_poset(t, signs);
    WidthResult w = width_exact(P);
    if (first || w.width > best.width.width) {
      best = {signs, std::move(P), std::move(w)};
      first = false;
    }
  }
  return best;
}

}  // namespace gridsight
