#include "doctest.h"

#include <complex>
#include <random>

#include "gridsight/fourier.hpp"

using namespace gridsight;

namespace {

GridFunction random_f(long long p, int d, std::uint64_t seed) {
  GridFunction f(p, d);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (auto& v : f.values) v = {U(rng), U(rng)};
  return f;
}

double max_diff(const GridFunction& a, const GridFunction& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

}  // namespace

TEST_CASE("axis-pass transform matches the direct sum") {
  for (long long p : {3, 5, 7}) {
    for (int d : {1, 2}) {
      GridFunction f = random_f(p, d, 100 * p + d);
      CHECK(max_diff(dft(f), dft_serial_reference(f)) < 1e-9);
    }
  }
}

TEST_CASE("round trip and parseval") {
  GridFunction f = random_f(7, 2, 5), g = random_f(7, 2, 6);
  CHECK(max_diff(idft(dft(f)), f) < 1e-10);
  CHECK(parseval_check(f, g) < 1e-12);
}

TEST_CASE("convolution theorem") {
  GridFunction f = random_f(5, 2, 8), g = random_f(5, 2, 9);
  GridFunction lhs = dft(convolve_direct(f, g));
  GridFunction fh = dft(f), gh = dft(g);
  for (std::size_t i = 0; i < fh.size(); ++i) fh.values[i] *= gh.values[i];
  CHECK(max_diff(lhs, fh) < 1e-9);
}

TEST_CASE("multiples indicator transform is a p-or-0 dichotomy") {
  ResidueVector t(7, 3, {3, 5});
  GridFunction fh = dft(multiples_indicator(t));
  std::vector<long long> x(3, 0);
  for (std::size_t i = 0; i < fh.size(); ++i) {
    long long dot = (3 * x[0] + 5 * x[1] + x[2]) % 7;
    double expect = dot == 0 ? 7.0 : 0.0;
    CHECK(std::abs(fh.values[i] - std::complex<double>(expect, 0)) < 1e-9);
    for (int c = 0; c < 3; ++c) {
      if (++x[c] < 7) break;
      x[c] = 0;
    }
  }
}

TEST_CASE("box transform bound holds at every frequency") {
  for (long long p : {5, 11}) {
    for (int d : {1, 2, 3}) {
      for (long long n = 1; n <= p; ++n) {
        BoundReport r = box_indicator_bound_check(p, d, n);
        CHECK(r.holds);
        CHECK(r.worst_excess <= 1e-9);
      }
    }
  }
}

TEST_CASE("k-fold box self-convolution checks") {
  ResidueVector t(5, 3, {2, 3});  // h_p = 3
  GdkReport r1 = g_dk_checks(t, 1);
  CHECK(r1.hp == 3);
  CHECK(r1.side == 3);
  CHECK(r1.zero_value == doctest::Approx(27.0).epsilon(1e-9));
  CHECK(r1.freq_bound.holds);
  CHECK(r1.support_ok);

  GdkReport r2 = g_dk_checks(t, 2);
  CHECK(r2.side == 2);
  CHECK(r2.zero_expected == doctest::Approx(64.0));
  CHECK(r2.zero_rel_err < 1e-9);
  CHECK(r2.freq_bound.holds);
  CHECK(r2.support_ok);
}

TEST_CASE("grid function guards") {
  CHECK_THROWS(GridFunction(101, 4));  // p^d beyond the dense-cell cap
  GridFunction f(5, 2);
  CHECK(f.index({6, 1}) == f.index({1, 1}));  // wrapped coordinates
  CHECK_THROWS(f.index({1, 2, 3}));
}
