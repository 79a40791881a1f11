// Compares the OpenMP kernels against their single-threaded references.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>

#include "gridsight/fourier.hpp"
#include "gridsight/modular.hpp"

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main() {
  using namespace gridsight;

  std::printf("kernel                     parallel      serial   speedup\n");

  {
    const long long p = 61;
    auto t0 = Clock::now();
    MeanHeightStats a = mean_height(p, 3, 0, 1);
    double tp = ms_since(t0);
    t0 = Clock::now();
    MeanHeightStats b = mean_height_serial(p, 3, 0, 1);
    double ts = ms_since(t0);
    std::printf("mean-height p=%-3lld     %8.1f ms %8.1f ms   %5.2fx  (mean %.4f vs %.4f)\n",
                p, tp, ts, ts / tp, a.mean, b.mean);
  }

  {
    const long long p = 31;
    GridFunction f(p, 2);
    for (std::size_t i = 0; i < f.size(); ++i)
      f.values[i] = {static_cast<double>(i % 7), static_cast<double>(i % 5)};
    auto t0 = Clock::now();
    GridFunction a = dft(f);
    double tp = ms_since(t0);
    t0 = Clock::now();
    GridFunction b = dft_serial_reference(f);
    double ts = ms_since(t0);
    double err = 0;
    for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a.values[i] - b.values[i]));
    std::printf("dft p=%-3lld d=2         %8.1f ms %8.1f ms   %5.2fx  (max diff %.2e)\n",
                p, tp, ts, ts / tp, err);
  }

  {
    const long long p = 101;
    GridFunction f(p, 2);
    for (std::size_t i = 0; i < f.size(); ++i) f.values[i] = {1.0, 0.0};
    auto t0 = Clock::now();
    GridFunction a = dft(f);
    double tp = ms_since(t0);
    std::printf("dft p=%-3lld d=2         %8.1f ms      (axis-pass only; |fhat(0)|=%.0f)\n",
                p, tp, std::abs(a.values[0]));
  }

  return 0;
}
