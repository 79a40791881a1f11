#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gridsight/modular.hpp"

namespace gridsight {

// Dense complex function on Z_p^d, row-major with axis 0 fastest.
struct GridFunction {
  long long p = 0;
  int d = 0;
  std::vector<std::complex<double>> values;

  GridFunction() = default;
  GridFunction(long long p_, int d_);

  std::size_t size() const { return values.size(); }
  std::size_t index(const std::vector<long long>& x) const;
  std::complex<double>& at(const std::vector<long long>& x) { return values[index(x)]; }
  const std::complex<double>& at(const std::vector<long long>& x) const {
    return values[index(x)];
  }
};

// Forward transform: fhat(x) = sum_w e^{+2 pi i (w.x)/p} f(w), no
// normalization. Evaluated axis by axis; OpenMP across lines.
GridFunction dft(const GridFunction& f);

// Single-threaded direct-sum reference (O(p^{2d})), for tests and the
// kernel benchmark at tiny p.
GridFunction dft_serial_reference(const GridFunction& f);

// Inverse: conjugate kernel with the full 1/p^d factor.
GridFunction idft(const GridFunction& f);

// Cyclic convolution by direct summation (tiny p only).
GridFunction convolve_direct(const GridFunction& f, const GridFunction& g);

// Indicator of the box [0,n)^d.
GridFunction box_indicator(long long p, int d, long long n);

// Indicator of the scalar multiples of (t_1,...,t_{d-1},1) mod p.
GridFunction multiples_indicator(const ResidueVector& t);

// Relative error of sum f conj(g) vs (1/p^d) sum fhat conj(ghat).
double parseval_check(const GridFunction& f, const GridFunction& g);

struct BoundReport {
  bool holds = false;
  double worst_slack = 0.0;  // min over frequencies of bound - |value|
  double worst_excess = 0.0; // max of |value| - bound (positive means violated)
};

// |hat 1_{[0,n)^d}(x)| <= prod min(p/(2|x_k|), n), symmetric frequency
// representatives, checked at every frequency.
BoundReport box_indicator_bound_check(long long p, int d, long long n, double tol = 1e-9);

struct GdkReport {
  long long hp = 0;
  long long side = 0;         // ceil(hp/k)
  double zero_value = 0.0;    // |ghat(0)|
  double zero_expected = 0.0; // side^{kd}
  double zero_rel_err = 0.0;
  BoundReport freq_bound;     // product bound at every frequency
  double support_pairing = 0.0;  // sum_w f(w) g(w); equals g(0) when side <= hp
  bool support_ok = false;
};

// Builds g = (1_{[0,ceil(hp/k))^d}) convolved with itself k times via the
// convolution theorem, then checks its transform at 0 and the frequency
// bound everywhere.
GdkReport g_dk_checks(const ResidueVector& t, int k);

}  // namespace gridsight
