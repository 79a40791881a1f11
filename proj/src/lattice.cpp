#include "gridsight/lattice.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace gridsight {

using BigRat = boost::multiprecision::cpp_rational;

IntegerLattice parallelotope_lattice(const ResidueVector& t) {
  IntegerLattice L;
  const int d = t.d;
  L.basis.assign(d, std::vector<BigInt>(d, 0));
  for (int i = 0; i < d - 1; ++i) L.basis[0][i] = t.t[i];
  L.basis[0][d - 1] = 1;
  for (int i = 1; i < d; ++i) L.basis[i][i - 1] = t.p;
  return L;
}

BigInt covolume(const IntegerLattice& L) {
  auto m = L.basis;
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("covolume: basis must be square");
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) throw std::domain_error("covolume: degenerate basis");
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  BigInt det = m[n - 1][n - 1] * sign;
  if (det == 0) throw std::domain_error("covolume: degenerate basis");
  return det < 0 ? BigInt(-det) : det;
}

namespace {

BigRat dot(const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
  BigRat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<BigRat> to_rat(const std::vector<BigInt>& v) {
  std::vector<BigRat> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

struct GramSchmidt {
  std::vector<std::vector<BigRat>> star;  // b_i^*
  std::vector<std::vector<BigRat>> mu;    // mu[i][j], j < i
  std::vector<BigRat> norm2;              // |b_i^*|^2
};

GramSchmidt gram_schmidt(const std::vector<std::vector<BigInt>>& basis) {
  const std::size_t n = basis.size();
  GramSchmidt gs;
  gs.star.resize(n);
  gs.mu.assign(n, std::vector<BigRat>(n, 0));
  gs.norm2.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    gs.star[i] = to_rat(basis[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (gs.norm2[j] == 0) throw std::domain_error("gram_schmidt: degenerate basis");
      gs.mu[i][j] = dot(to_rat(basis[i]), gs.star[j]) / gs.norm2[j];
      for (std::size_t c = 0; c < gs.star[i].size(); ++c)
        gs.star[i][c] -= gs.mu[i][j] * gs.star[j][c];
    }
    gs.norm2[i] = dot(gs.star[i], gs.star[i]);
  }
  return gs;
}

BigInt round_nearest(const BigRat& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);  // > 0
  BigInt fl;
  if (num >= 0)
    fl = num / den;
  else
    fl = -((-num + den - 1) / den);
  BigInt rem = num - fl * den;
  return 2 * rem >= den ? fl + 1 : fl;
}

}  // namespace

ReducedBasis lll_reduce(const IntegerLattice& L) {
  auto b = L.basis;
  const std::size_t n = b.size();
  if (n == 0) throw std::invalid_argument("lll_reduce: empty basis");
  covolume(L);  // rejects degenerate input

  std::size_t k = 1;
  while (k < n) {
    GramSchmidt gs = gram_schmidt(b);
    for (std::size_t j = k; j-- > 0;) {
      BigInt r = round_nearest(gs.mu[k][j]);
      if (r != 0) {
        for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= r * b[j][c];
        gs = gram_schmidt(b);
      }
    }
    // Lovasz: B_k >= (3/4 - mu^2) * B_{k-1}
    BigRat lhs = gs.norm2[k];
    BigRat rhs = (BigRat(3, 4) - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm2[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return {b};
}

bool is_lll_reduced(const std::vector<std::vector<BigInt>>& basis) {
  GramSchmidt gs = gram_schmidt(basis);
  const std::size_t n = basis.size();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      BigRat m = gs.mu[i][j];
      if (m < 0) m = -m;
      if (m > BigRat(1, 2)) return false;
    }
    BigRat lhs = gs.norm2[i];
    BigRat rhs = (BigRat(3, 4) - gs.mu[i][i - 1] * gs.mu[i][i - 1]) * gs.norm2[i - 1];
    if (lhs < rhs) return false;
  }
  return true;
}

namespace {

long long symmetric_mod(long long x, long long p) {
  long long r = ((x % p) + p) % p;
  return 2 * r > p ? r - p : r;
}

IntVec multiple_point(const ResidueVector& t, long long k) {
  IntVec x;
  for (long long ti : t.t) x.push_back((k * ti) % t.p);
  x.push_back(k);
  return x;
}

long long max_abs(const IntVec& v) {
  long long m = 0;
  for (long long x : v) m = std::max(m, x < 0 ? -x : x);
  return m;
}

long long icbrt(long long n) {
  long long r = static_cast<long long>(std::cbrt(static_cast<double>(n)));
  while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
  while (r > 1 && r * r * r > n) --r;
  return std::max(1LL, r);
}

IntVec symmetric_diff(const IntVec& a, const IntVec& b, long long p) {
  IntVec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = symmetric_mod(a[i] - b[i], p);
  return v;
}

bool parallel(const IntVec& a, const IntVec& b) {
  // rank < 2 iff all 2x2 minors vanish
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace

IntVec small_vector_3d(const ResidueVector& t) {
  if (t.d != 3) throw std::invalid_argument("small_vector_3d: d must be 3");
  const long long p = t.p;
  const long long m = icbrt(p);
  std::map<std::array<long long, 3>, long long> cell_first;
  for (long long k = 0; k < p; ++k) {
    IntVec x = multiple_point(t, k);
    std::array<long long, 3> cell{x[0] * m / p, x[1] * m / p, x[2] * m / p};
    auto [it, fresh] = cell_first.emplace(cell, k);
    if (!fresh) {
      IntVec v = symmetric_diff(x, multiple_point(t, it->second), p);
      long long bound = (p + m - 1) / m;
      if (max_abs(v) > bound)
        throw std::logic_error("small_vector_3d: bucket bound violated");
      return v;
    }
  }
  throw std::logic_error("small_vector_3d: no collision (unreachable, m^3 < p)");
}

std::pair<IntVec, IntVec> independent_pair_3d(const ResidueVector& t) {
  if (t.d != 3) throw std::invalid_argument("independent_pair_3d: d must be 3");
  const long long p = t.p;
  IntVec v1 = small_vector_3d(t);
  const long long s1 = std::max(1LL, max_abs(v1));

  const long long kparam =
      static_cast<long long>(std::ceil(static_cast<double>(p) /
                                       std::pow(static_cast<double>(s1), 1.5))) + 1;
  long long m = static_cast<long long>(std::cbrt(static_cast<double>(p) /
                                                 static_cast<double>(kparam)));
  m = std::max(1LL, m);

  std::map<std::array<long long, 3>, std::vector<long long>> cells;
  for (long long k = 0; k < p; ++k) {
    IntVec x = multiple_point(t, k);
    auto& members = cells[{x[0] * m / p, x[1] * m / p, x[2] * m / p}];
    members.push_back(k);
    if (static_cast<long long>(members.size()) >= kparam + 1) {
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          IntVec v2 = symmetric_diff(multiple_point(t, members[j]),
                                     multiple_point(t, members[i]), p);
          if (!parallel(v1, v2)) return {v1, v2};
        }
    }
  }

  // Fallback for tiny p: differences of multiples are multiples again, so
  // scan all of S in symmetric form for the smallest non-parallel member.
  IntVec best;
  long long best_s2 = p + 1;
  for (long long k = 1; k < p; ++k) {
    IntVec w(3);
    w[0] = symmetric_mod(k * t.t[0], p);
    w[1] = symmetric_mod(k * t.t[1], p);
    w[2] = symmetric_mod(k, p);
    if (parallel(v1, w)) continue;
    if (max_abs(w) < best_s2) { best_s2 = max_abs(w); best = w; }
  }
  if (best.empty())
    throw std::logic_error(
        "independent_pair_3d: S is collinear (every t_i in {1, p-1})");
  return {v1, best};
}

std::optional<IntVec> interior_point(const ResidueVector& t, const Rat& lo, const Rat& hi) {
  for (long long k = 0; k < t.p; ++k) {
    IntVec x = multiple_point(t, k);
    bool ok = true;
    for (long long c : x)
      if (Rat(c) < lo || Rat(c) > hi) { ok = false; break; }
    if (ok) return x;
  }
  return std::nullopt;
}

namespace {

IntVec cross3(const IntVec& a, const IntVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool uniform_sign(const IntVec& v) {
  bool pos = false, neg = false;
  for (long long x : v) {
    if (x > 0) pos = true;
    if (x < 0) neg = true;
  }
  return (pos != neg);
}

IntVec flip_vector(const IntVec& v, const std::vector<bool>& signs) {
  IntVec w = v;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i]) w[i] = -w[i];
  return w;
}

// Flip a point of [0,p)^d into the signed family member's coordinates.
IntVec flip_point(const IntVec& x, const std::vector<bool>& signs, long long p) {
  IntVec y = x;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i]) y[i] = (p - y[i]) % p;
  return y;
}

LatticeAntichain finish(const ResidueVector& t, const std::vector<bool>& signs,
                        const std::vector<IntVec>& points, bool uniform) {
  LatticeAntichain out;
  out.signs = signs;
  out.poset = build_s_poset(t, signs);
  out.normal_uniform = uniform;
  std::vector<bool> present(t.p, false);
  for (const auto& x : points) {
    IntVec y = flip_point(x, signs, t.p);
    long long k = y.back();
    if (!present[k]) {
      present[k] = true;
      out.antichain.members.push_back(static_cast<std::size_t>(k));
    }
  }
  std::sort(out.antichain.members.begin(), out.antichain.members.end());
  if (uniform) {
    if (!validate_antichain(out.poset, out.antichain))
      throw std::logic_error("antichain_from_lattice: uniform-normal set failed validation");
  } else {
    // Extract a maximum antichain of the induced subposet instead.
    Poset sub;
    sub.d = out.poset.d;
    std::vector<std::size_t> back;
    for (std::size_t idx : out.antichain.members) {
      sub.elements.push_back(out.poset.elements[idx]);
      back.push_back(idx);
    }
    WidthResult w = width_exact(sub);
    Antichain mapped;
    for (std::size_t i : w.antichain.members) mapped.members.push_back(back[i]);
    std::sort(mapped.members.begin(), mapped.members.end());
    out.antichain = mapped;
    if (!validate_antichain(out.poset, out.antichain))
      throw std::logic_error("antichain_from_lattice: fallback set failed validation");
  }
  return out;
}

// Enumerate {shift + sum c_i gen_i} inside [0,p)^d. For coordinates that a
// candidate sign flip will negate, 0 is excluded so the flip acts linearly
// on differences.
std::vector<IntVec> enumerate_shifted(const IntVec& shift, const std::vector<IntVec>& gens,
                                      long long p, const std::vector<bool>& signs) {
  const std::size_t d = shift.size();
  std::vector<long long> cap(gens.size());
  double total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    long long g = 1;
    for (long long c : gens[i]) g = std::max(g, c < 0 ? -c : c);
    cap[i] = p / g + 2;
    total *= 2 * cap[i] + 1;
  }
  while (total > 2e6) {
    for (auto& c : cap)
      if (c > 1) c -= 1;
    total = 1;
    for (long long c : cap) total *= 2 * c + 1;
  }

  std::vector<IntVec> out;
  std::vector<long long> coef(gens.size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) coef[i] = -cap[i];
  while (true) {
    IntVec x = shift;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t c = 0; c < d; ++c) x[c] += coef[i] * gens[i][c];
    bool inside = true;
    for (std::size_t c = 0; c < d && inside; ++c) {
      if (x[c] < 0 || x[c] >= p) inside = false;
      if (c < signs.size() && signs[c] && x[c] == 0) inside = false;
    }
    if (inside) out.push_back(std::move(x));
    std::size_t i = 0;
    while (i < coef.size() && coef[i] == cap[i]) { coef[i] = -cap[i]; ++i; }
    if (i == coef.size()) break;
    ++coef[i];
  }
  return out;
}

// Last resort when the shifted-sublattice construction cannot run (S is
// collinear, e.g. every t_i in {1, p-1}, or no usable shift exists): hand
// back the exact-width witness of the best family member.
LatticeAntichain exact_fallback(const ResidueVector& t) {
  FamilyBest best = best_in_family(t);
  LatticeAntichain out;
  out.signs = best.signs;
  out.poset = std::move(best.poset);
  out.antichain = best.width.antichain;
  std::sort(out.antichain.members.begin(), out.antichain.members.end());
  out.normal_uniform = false;
  return out;
}

LatticeAntichain antichain_3d(const ResidueVector& t) {
  IntVec v1, v2;
  try {
    std::tie(v1, v2) = independent_pair_3d(t);
  } catch (const std::logic_error&) {
    return exact_fallback(t);
  }
  auto shift = interior_point(t, Rat(t.p, 6), Rat(5 * t.p, 6));
  if (!shift) {
    // off-center shift: enumerate anyway but skip the uniform-normal claim
    shift = interior_point(t, Rat(1), Rat(t.p - 1));
    if (!shift) return exact_fallback(t);
    auto pts = enumerate_shifted(*shift, {v1, v2}, t.p, std::vector<bool>(2, false));
    return finish(t, std::vector<bool>(2, false), pts, false);
  }

  for (const auto& signs : all_sign_vectors(2)) {
    IntVec n = cross3(flip_vector(v1, signs), flip_vector(v2, signs));
    if (!uniform_sign(n)) continue;
    auto pts = enumerate_shifted(*shift, {v1, v2}, t.p, signs);
    return finish(t, signs, pts, true);
  }
  // Degenerate normals (zero components in a pattern no flip fixes): fall
  // back to extracting an antichain from the all-plus enumeration.
  std::vector<bool> plus(2, false);
  auto pts = enumerate_shifted(*shift, {v1, v2}, t.p, plus);
  return finish(t, plus, pts, false);
}

// Integer basis of the rational nullspace of the row span of `rows`.
std::vector<IntVec> integer_nullspace(const std::vector<std::vector<BigInt>>& rows, int d) {
  std::vector<std::vector<BigRat>> m;
  for (const auto& r : rows) m.push_back(to_rat(r));
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < d && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    BigRat lead = m[rank][col];
    for (int c = 0; c < d; ++c) m[rank][c] /= lead;
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][col] != 0) {
        BigRat f = m[r][col];
        for (int c = 0; c < d; ++c) m[r][c] -= f * m[rank][c];
      }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<IntVec> basis;
  std::vector<bool> is_pivot(d, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRat> sol(d, 0);
    sol[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) sol[pivot_col[r]] = -m[r][free];
    BigInt lcm = 1;
    for (const auto& q : sol) {
      BigInt den = boost::multiprecision::denominator(q);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    IntVec iv(d);
    for (int c = 0; c < d; ++c)
      iv[c] = static_cast<long long>(BigInt(boost::multiprecision::numerator(sol[c]) * (lcm / boost::multiprecision::denominator(sol[c]))));
    basis.push_back(std::move(iv));
  }
  return basis;
}

LatticeAntichain antichain_highdim(const ResidueVector& t) {
  const int d = t.d;
  const long long p = t.p;
  ReducedBasis rb = lll_reduce(parallelotope_lattice(t));
  std::sort(rb.vectors.begin(), rb.vectors.end(),
            [](const auto& a, const auto& b) {
              BigInt na = 0, nb = 0;
              for (const auto& x : a) na += x * x;
              for (const auto& x : b) nb += x * x;
              return na < nb;
            });
  // Longest prefix with |b_i| <= p/(2d).
  std::vector<std::vector<BigInt>> prefix;
  const BigInt limit2 = BigInt(p) * p;  // compare 4d^2 |b|^2 <= p^2
  for (const auto& v : rb.vectors) {
    BigInt n2 = 0;
    for (const auto& x : v) n2 += x * x;
    if (4 * d * d * n2 <= limit2) prefix.push_back(v);
  }
  auto shift = interior_point(t, Rat(p, 2 * d), Rat(p * (2LL * d - 1), 2 * d));
  if (!shift)
    throw std::runtime_error("antichain_from_lattice: no interior point in the central box");
  if (prefix.empty()) {
    LatticeAntichain out;
    out.signs.assign(d - 1, false);
    out.poset = build_s_poset(t, out.signs);
    out.antichain.members = {static_cast<std::size_t>(shift->back())};
    out.normal_uniform = false;
    return out;
  }

  std::vector<IntVec> gens;
  for (const auto& v : prefix) {
    IntVec g(d);
    for (int c = 0; c < d; ++c) g[c] = static_cast<long long>(v[c]);
    gens.push_back(std::move(g));
  }
  std::vector<IntVec> null_basis = integer_nullspace(prefix, d);

  // Search sign flips x small nullspace combinations for a uniform-sign
  // normal of the flipped sublattice.
  for (const auto& signs : all_sign_vectors(d - 1)) {
    const int nb = static_cast<int>(null_basis.size());
    std::vector<long long> coef(nb, -2);
    while (true) {
      IntVec w(d, 0);
      bool nonzero = false;
      for (int i = 0; i < nb; ++i)
        for (int c = 0; c < d; ++c) w[c] += coef[i] * null_basis[i][c];
      for (long long x : w) nonzero = nonzero || x != 0;
      if (nonzero) {
        IntVec flipped = flip_vector(w, signs);
        if (uniform_sign(flipped)) {
          auto pts = enumerate_shifted(*shift, gens, p, signs);
          return finish(t, signs, pts, true);
        }
      }
      int i = 0;
      while (i < nb && coef[i] == 2) { coef[i] = -2; ++i; }
      if (i == nb) break;
      ++coef[i];
    }
  }
  std::vector<bool> plus(d - 1, false);
  auto pts = enumerate_shifted(*shift, gens, p, plus);
  return finish(t, plus, pts, false);
}

}  // namespace

LatticeAntichain antichain_from_lattice(const ResidueVector& t) {
  return t.d == 3 ? antichain_3d(t) : antichain_highdim(t);
}

}  // namespace gridsight
