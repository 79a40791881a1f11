#include "gridsight/modular.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gridsight {

ResidueVector::ResidueVector(long long p_, int d_, std::vector<long long> t_)
    : p(p_), d(d_), t(std::move(t_)) {
  if (!is_prime(p)) throw std::invalid_argument("ResidueVector: p must be prime");
  if (d < 3) throw std::invalid_argument("ResidueVector: d must be >= 3");
  if (static_cast<int>(t.size()) != d - 1)
    throw std::invalid_argument("ResidueVector: need d-1 coordinates");
  for (long long ti : t)
    if (ti < 1 || ti > p - 1)
      throw std::invalid_argument("ResidueVector: coordinates must lie in [1, p-1]");
}

std::vector<long long> ResidueVector::full() const {
  std::vector<long long> f = t;
  f.push_back(1);
  return f;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

long long next_prime_leq(long long n) {
  if (n < 3) throw std::invalid_argument("next_prime_leq: n must be >= 3");
  for (long long c = n; c >= 2; --c)
    if (is_prime(c)) return c;
  return 2;  // unreachable for n >= 3
}

HeightResult height(const ResidueVector& t) {
  const long long p = t.p;
  HeightResult best{p, 0};
  for (long long a = 1; a < p; ++a) {
    long long m = a;
    for (long long ti : t.t) m = std::max(m, (a * ti) % p);
    if (m < best.value) best = {m, a};
  }
  return best;
}

namespace {

// Walk the shell max|alpha_i| = r in lexicographic order; return the first
// alpha with alpha . tbar = 0 (mod p).
bool scan_shell(const std::vector<long long>& tbar, long long p, long long r,
                std::vector<long long>& alpha) {
  const int d = static_cast<int>(tbar.size());
  std::vector<long long> a(d, -r);
  while (true) {
    long long mx = 0;
    for (long long x : a) mx = std::max(mx, x < 0 ? -x : x);
    if (mx == r) {
      long long s = 0;
      for (int i = 0; i < d; ++i) s += a[i] * tbar[i];
      if (((s % p) + p) % p == 0) {
        alpha = a;
        return true;
      }
    }
    int i = d - 1;
    while (i >= 0 && a[i] == r) { a[i] = -r; --i; }
    if (i < 0) return false;
    ++a[i];
  }
}

}  // namespace

DualHeightResult dual_height(const ResidueVector& t) {
  const std::vector<long long> tbar = t.full();
  for (long long r = 1; r <= t.p; ++r) {
    std::vector<long long> alpha;
    if (scan_shell(tbar, t.p, r, alpha)) {
      // sanity: witness satisfies the congruence and is nonzero
      long long s = 0;
      bool nz = false;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        s += alpha[i] * tbar[i];
        nz = nz || alpha[i] != 0;
      }
      if (!nz || ((s % t.p) + t.p) % t.p != 0)
        throw std::logic_error("dual_height: invalid witness");
      return {r, alpha};
    }
  }
  throw std::logic_error("dual_height: no relation found (unreachable)");
}

DualityReport check_height_duality(const ResidueVector& t) {
  DualityReport rep;
  HeightResult h = height(t);
  DualHeightResult hs = dual_height(t);
  rep.hp = h.value;
  rep.hp_witness = h.witness;
  rep.hp_star = hs.value;
  rep.hp_star_witness = hs.alpha;
  const double e = std::exp(1.0);
  const double logceil = std::ceil(std::log(static_cast<double>(t.p)));
  rep.bound = e * (t.d - 1) * static_cast<double>(t.p) * logceil /
              (2.0 * static_cast<double>(hs.value));
  rep.holds = static_cast<double>(rep.hp) <= rep.bound;
  return rep;
}

namespace {

long long height_of_tuple(long long p, const std::vector<long long>& coords) {
  long long best = p;
  for (long long a = 1; a < p; ++a) {
    long long m = a;
    for (long long ti : coords) m = std::max(m, (a * ti) % p);
    best = std::min(best, m);
  }
  return best;
}

// Decode tuple index into d-1 coordinates, each in [1, p-1].
std::vector<long long> decode_tuple(std::size_t idx, long long p, int d) {
  std::vector<long long> c(d - 1);
  for (int i = 0; i < d - 1; ++i) {
    c[i] = 1 + static_cast<long long>(idx % (p - 1));
    idx /= (p - 1);
  }
  return c;
}

MeanHeightStats mean_height_impl(long long p, int d, std::size_t sample_size,
                                 std::uint64_t seed, bool parallel) {
  if (!is_prime(p)) throw std::invalid_argument("mean_height: p must be prime");
  if (d < 3) throw std::invalid_argument("mean_height: d must be >= 3");
  std::size_t total = 1;
  for (int i = 0; i < d - 1; ++i) total *= static_cast<std::size_t>(p - 1);

  std::vector<std::size_t> indices;
  bool exhaustive = (sample_size == 0 || sample_size >= total);
  if (exhaustive) {
    indices.resize(total);
    for (std::size_t i = 0; i < total; ++i) indices[i] = i;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dist(0, total - 1);
    indices.resize(sample_size);
    for (auto& i : indices) i = dist(rng);
  }

  long long mx = 0;
  double sum = 0.0;
  const long long n = static_cast<long long>(indices.size());
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : sum) reduction(max : mx) schedule(dynamic, 64) if (parallel)
#endif
  for (long long i = 0; i < n; ++i) {
    std::vector<long long> c = decode_tuple(indices[i], p, d);
    long long h = height_of_tuple(p, c);
    sum += static_cast<double>(h);
    mx = std::max(mx, h);
  }
  (void)parallel;

  MeanHeightStats st;
  st.count = indices.size();
  st.mean = sum / static_cast<double>(indices.size());
  st.max = mx;
  st.ratio = st.mean / (std::pow(static_cast<double>(p),
                                 static_cast<double>(d - 1) / static_cast<double>(d)) *
                        std::log(static_cast<double>(p)));
  st.exhaustive = exhaustive;
  return st;
}

}  // namespace

MeanHeightStats mean_height(long long p, int d, std::size_t sample_size, std::uint64_t seed) {
  return mean_height_impl(p, d, sample_size, seed, true);
}

MeanHeightStats mean_height_serial(long long p, int d, std::size_t sample_size,
                                   std::uint64_t seed) {
  return mean_height_impl(p, d, sample_size, seed, false);
}

}  // namespace gridsight
