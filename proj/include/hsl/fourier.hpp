#pragma once

#include <vector>

#include "hsl/util.hpp"

namespace hsl {

// Spectral utilities on 2pi-periodic node vectors sampled at theta_m = 2*pi*m/N.
// Plain O(N^2) DFT; the transforms here are a negligible fraction of the cost
// next to the dense boundary-integral solves.

// Coefficients c_k, k = -N/2 .. N/2-1, stored at index k mod N.
std::vector<cplx> dft(const std::vector<cplx>& samples);
std::vector<cplx> idft(const std::vector<cplx>& coeffs);

inline int mode_of_index(std::size_t i, std::size_t n) {
  return static_cast<int>(i <= n / 2 - 1 ? i : i - n);
}

// d/dtheta of the trigonometric interpolant, sampled at the nodes.
std::vector<double> spectral_derivative(const std::vector<double>& f);
std::vector<cplx> spectral_derivative(const std::vector<cplx>& f);

// Antiderivative with zero mean removed from the input: input must have
// (numerically) zero mean for the result to be periodic; the k=0 coefficient
// is dropped. Result is normalized to value 0 at theta = 0.
std::vector<double> spectral_antiderivative(const std::vector<double>& f);

// Evaluate the trigonometric interpolant (and optionally derivatives) of a
// real node vector at an arbitrary angle.
struct TrigInterp {
  explicit TrigInterp(const std::vector<double>& samples);
  double eval(double theta) const;
  double deriv(double theta, int order = 1) const;

 private:
  std::vector<cplx> coeffs_;  // index-mapped modes
};

// Convolution with the periodic log kernel: given samples f_m, returns
//   g_i = (1/(2*pi)) * Integral f(phi) * log(4 sin^2((theta_i - phi)/2)) dphi
// computed exactly on the trigonometric interpolant (Fourier multiplier
// -1/|k|, zero mean). This is the singular half of the single-layer trace.
std::vector<double> log_kernel_convolution(const std::vector<double>& f);

}  // namespace hsl
