#include "gridsight/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace gridsight {

namespace {
constexpr std::size_t kMaxCells = 1000000;
constexpr double kPi = 3.14159265358979323846;

std::size_t pow_size(long long p, int d) {
  std::size_t n = 1;
  for (int i = 0; i < d; ++i) {
    if (n > kMaxCells / static_cast<std::size_t>(p))
      throw std::invalid_argument("GridFunction: p^d too large");
    n *= static_cast<std::size_t>(p);
  }
  return n;
}

// One transform pass along `axis` with kernel e^{sign * 2 pi i w x / p}.
void axis_pass(GridFunction& f, int axis, int sign, bool parallel) {
  const long long p = f.p;
  std::vector<std::complex<double>> tw(p);
  for (long long r = 0; r < p; ++r)
    tw[r] = std::polar(1.0, sign * 2.0 * kPi * static_cast<double>(r) / static_cast<double>(p));

  std::size_t stride = 1;
  for (int i = 0; i < axis; ++i) stride *= static_cast<std::size_t>(p);
  const std::size_t total = f.size();
  const long long nlines = static_cast<long long>(total / static_cast<std::size_t>(p));

#pragma omp parallel for schedule(static) if (parallel && nlines > 64)
  for (long long line = 0; line < nlines; ++line) {
    // line id -> base index with coordinate `axis` = 0
    std::size_t lo = static_cast<std::size_t>(line) % stride;
    std::size_t hi = static_cast<std::size_t>(line) / stride;
    std::size_t base = hi * stride * static_cast<std::size_t>(p) + lo;
    std::vector<std::complex<double>> in(p), out(p);
    for (long long w = 0; w < p; ++w) in[w] = f.values[base + static_cast<std::size_t>(w) * stride];
    for (long long x = 0; x < p; ++x) {
      std::complex<double> s = 0.0;
      for (long long w = 0; w < p; ++w) s += tw[(w * x) % p] * in[w];
      out[x] = s;
    }
    for (long long x = 0; x < p; ++x) f.values[base + static_cast<std::size_t>(x) * stride] = out[x];
  }
}

bool threads_allow_parallel() {
  const char* env = std::getenv("GRIDSIGHT_THREADS");
  if (!env) return true;
  return std::atoi(env) != 1;
}
}  // namespace

GridFunction::GridFunction(long long p_, int d_) : p(p_), d(d_) {
  if (p < 1 || d < 1) throw std::invalid_argument("GridFunction: need p >= 1, d >= 1");
  values.assign(pow_size(p, d), {0.0, 0.0});
}

std::size_t GridFunction::index(const std::vector<long long>& x) const {
  if (static_cast<int>(x.size()) != d) throw std::invalid_argument("GridFunction: bad arity");
  std::size_t idx = 0;
  for (int i = d - 1; i >= 0; --i) {
    long long c = ((x[i] % p) + p) % p;
    idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>(c);
  }
  return idx;
}

GridFunction dft(const GridFunction& f) {
  GridFunction out = f;
  for (int axis = 0; axis < f.d; ++axis) axis_pass(out, axis, +1, threads_allow_parallel());
  return out;
}

GridFunction dft_serial_reference(const GridFunction& f) {
  const long long p = f.p;
  const int d = f.d;
  GridFunction out(p, d);
  std::vector<long long> x(d, 0), w(d, 0);
  for (std::size_t xi = 0; xi < out.size(); ++xi) {
    std::complex<double> s = 0.0;
    std::fill(w.begin(), w.end(), 0);
    for (std::size_t wi = 0; wi < f.size(); ++wi) {
      long long dot = 0;
      for (int i = 0; i < d; ++i) dot += w[i] * x[i];
      s += std::polar(1.0, 2.0 * kPi * static_cast<double>(dot % p) / static_cast<double>(p)) *
           f.values[wi];
      for (int i = 0; i < d; ++i) {
        if (++w[i] < p) break;
        w[i] = 0;
      }
    }
    out.values[xi] = s;
    for (int i = 0; i < d; ++i) {
      if (++x[i] < p) break;
      x[i] = 0;
    }
  }
  return out;
}

GridFunction idft(const GridFunction& f) {
  GridFunction out = f;
  for (int axis = 0; axis < f.d; ++axis) axis_pass(out, axis, -1, threads_allow_parallel());
  const double scale = 1.0 / static_cast<double>(f.size());
  for (auto& v : out.values) v *= scale;
  return out;
}

GridFunction convolve_direct(const GridFunction& f, const GridFunction& g) {
  if (f.p != g.p || f.d != g.d) throw std::invalid_argument("convolve_direct: shape mismatch");
  const long long p = f.p;
  const int d = f.d;
  GridFunction out(p, d);
  std::vector<long long> x(d, 0), w(d, 0), diff(d, 0);
  for (std::size_t xi = 0; xi < out.size(); ++xi) {
    std::complex<double> s = 0.0;
    std::fill(w.begin(), w.end(), 0);
    for (std::size_t wi = 0; wi < f.size(); ++wi) {
      for (int i = 0; i < d; ++i) diff[i] = x[i] - w[i];
      s += f.values[wi] * g.at(diff);
      for (int i = 0; i < d; ++i) {
        if (++w[i] < p) break;
        w[i] = 0;
      }
    }
    out.values[xi] = s;
    for (int i = 0; i < d; ++i) {
      if (++x[i] < p) break;
      x[i] = 0;
    }
  }
  return out;
}

GridFunction box_indicator(long long p, int d, long long n) {
  if (n < 0 || n > p) throw std::invalid_argument("box_indicator: need 0 <= n <= p");
  GridFunction out(p, d);
  std::vector<long long> x(d, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool in = true;
    for (int k = 0; k < d; ++k)
      if (x[k] >= n) in = false;
    if (in) out.values[i] = 1.0;
    for (int k = 0; k < d; ++k) {
      if (++x[k] < p) break;
      x[k] = 0;
    }
  }
  return out;
}

GridFunction multiples_indicator(const ResidueVector& t) {
  GridFunction out(t.p, t.d);
  std::vector<long long> x(t.d);
  for (long long k = 0; k < t.p; ++k) {
    for (int i = 0; i < t.d - 1; ++i) x[i] = (t.t[i] * k) % t.p;
    x[t.d - 1] = k;
    out.at(x) = 1.0;
  }
  return out;
}

double parseval_check(const GridFunction& f, const GridFunction& g) {
  if (f.p != g.p || f.d != g.d) throw std::invalid_argument("parseval_check: shape mismatch");
  std::complex<double> lhs = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) lhs += f.values[i] * std::conj(g.values[i]);
  GridFunction fh = dft(f), gh = dft(g);
  std::complex<double> rhs = 0.0;
  for (std::size_t i = 0; i < fh.size(); ++i) rhs += fh.values[i] * std::conj(gh.values[i]);
  rhs /= static_cast<double>(f.size());
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

namespace {
// Checks |vals| <= per-frequency product bound; shared by the box and g
// reports. `power` raises the single-box bound (transform of a k-fold
// convolution is the k-th pointwise power).
BoundReport product_bound_check(const GridFunction& vals, long long n, int power, double tol) {
  const long long p = vals.p;
  const int d = vals.d;
  BoundReport rep;
  rep.holds = true;
  rep.worst_slack = std::numeric_limits<double>::infinity();
  rep.worst_excess = -std::numeric_limits<double>::infinity();
  std::vector<long long> x(d, 0);
  const double scale = std::max(1.0, std::pow(static_cast<double>(n), d * power));
  for (std::size_t i = 0; i < vals.size(); ++i) {
    double bound = 1.0;
    for (int k = 0; k < d; ++k) {
      long long s = x[k] > p / 2 ? x[k] - p : x[k];  // symmetric representative
      double axis = static_cast<double>(n);
      if (s != 0)
        axis = std::min(axis, static_cast<double>(p) / (2.0 * std::abs(static_cast<double>(s))));
      bound *= axis;
    }
    bound = std::pow(bound, power);
    double v = std::abs(vals.values[i]);
    rep.worst_slack = std::min(rep.worst_slack, bound - v);
    rep.worst_excess = std::max(rep.worst_excess, v - bound);
    if (v > bound + tol * scale) rep.holds = false;
    for (int k = 0; k < d; ++k) {
      if (++x[k] < p) break;
      x[k] = 0;
    }
  }
  return rep;
}
}  // namespace

BoundReport box_indicator_bound_check(long long p, int d, long long n, double tol) {
  GridFunction bh = dft(box_indicator(p, d, n));
  return product_bound_check(bh, n, 1, tol);
}

GdkReport g_dk_checks(const ResidueVector& t, int k) {
  if (k < 1) throw std::invalid_argument("g_dk_checks: need k >= 1");
  GdkReport rep;
  rep.hp = height(t).value;
  rep.side = (rep.hp + k - 1) / k;

  GridFunction bh = dft(box_indicator(t.p, t.d, rep.side));
  GridFunction gh = bh;
  for (auto& v : gh.values) v = std::pow(v, k);

  rep.zero_value = std::abs(gh.values[0]);
  rep.zero_expected = std::pow(static_cast<double>(rep.side), t.d * k);
  rep.zero_rel_err = std::abs(rep.zero_value - rep.zero_expected) / rep.zero_expected;
  rep.freq_bound = product_bound_check(gh, rep.side, k, 1e-9);

  // g vanishes on every nonzero multiple of (t,1): its support sits inside
  // [0, k*(side-1)]^d and k*(ceil(hp/k)-1) < hp, so pairing with the
  // multiples indicator only picks up g(0) = 1.
  GridFunction g = idft(gh);
  GridFunction f = multiples_indicator(t);
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) s += f.values[i] * g.values[i];
  rep.support_pairing = s.real();
  rep.support_ok = std::abs(s - std::complex<double>(1.0, 0.0)) < 1e-6;
  return rep;
}

}  // namespace gridsight
