#include "hsl/fourier.hpp"

#include <cmath>

namespace hsl {

std::vector<cplx> dft(const std::vector<cplx>& samples) {
  const std::size_t n = samples.size();
  std::vector<cplx> out(n, cplx(0));
  // c_j = (1/N) sum_m f_m e^{-i j theta_m}
  std::vector<cplx> tw(n);
  for (std::size_t m = 0; m < n; ++m) {
    double t = -kTwoPi * double(m) / double(n);
    tw[m] = cplx(std::cos(t), std::sin(t));
  }
  for (std::size_t j = 0; j < n; ++j) {
    cplx acc(0);
    for (std::size_t m = 0; m < n; ++m) acc += samples[m] * tw[(j * m) % n];
    out[j] = acc / double(n);
  }
  return out;
}

std::vector<cplx> idft(const std::vector<cplx>& coeffs) {
  const std::size_t n = coeffs.size();
  std::vector<cplx> out(n, cplx(0));
  std::vector<cplx> tw(n);
  for (std::size_t m = 0; m < n; ++m) {
    double t = kTwoPi * double(m) / double(n);
    tw[m] = cplx(std::cos(t), std::sin(t));
  }
  for (std::size_t m = 0; m < n; ++m) {
    cplx acc(0);
    for (std::size_t j = 0; j < n; ++j) acc += coeffs[j] * tw[(j * m) % n];
    out[m] = acc;
  }
  return out;
}

std::vector<cplx> spectral_derivative(const std::vector<cplx>& f) {
  const std::size_t n = f.size();
  auto c = dft(f);
  for (std::size_t i = 0; i < n; ++i) {
    int k = mode_of_index(i, n);
    if (std::size_t(2 * std::abs(k)) == n) k = 0;  // drop the unmatched Nyquist mode
    c[i] *= cplx(0, k);
  }
  return idft(c);
}

std::vector<double> spectral_derivative(const std::vector<double>& f) {
  std::vector<cplx> fc(f.begin(), f.end());
  auto d = spectral_derivative(fc);
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = d[i].real();
  return out;
}

std::vector<double> spectral_antiderivative(const std::vector<double>& f) {
  const std::size_t n = f.size();
  std::vector<cplx> fc(f.begin(), f.end());
  auto c = dft(fc);
  c[0] = 0;
  for (std::size_t i = 1; i < n; ++i) {
    int k = mode_of_index(i, n);
    if (std::size_t(2 * std::abs(k)) == n) {
      c[i] = 0;
      continue;
    }
    c[i] /= cplx(0, k);
  }
  auto g = idft(c);
  std::vector<double> out(n);
  double g0 = g[0].real();
  for (std::size_t i = 0; i < n; ++i) out[i] = g[i].real() - g0;
  return out;
}

TrigInterp::TrigInterp(const std::vector<double>& samples) {
  std::vector<cplx> fc(samples.begin(), samples.end());
  coeffs_ = dft(fc);
}

double TrigInterp::eval(double theta) const {
  const std::size_t n = coeffs_.size();
  cplx acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    int k = mode_of_index(i, n);
    acc += coeffs_[i] * std::exp(cplx(0, k * theta));
  }
  return acc.real();
}

double TrigInterp::deriv(double theta, int order) const {
  const std::size_t n = coeffs_.size();
  cplx acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    int k = mode_of_index(i, n);
    if (std::size_t(2 * std::abs(k)) == n) continue;
    cplx fac(1);
    for (int o = 0; o < order; ++o) fac *= cplx(0, k);
    acc += fac * coeffs_[i] * std::exp(cplx(0, k * theta));
  }
  return acc.real();
}

std::vector<double> log_kernel_convolution(const std::vector<double>& f) {
  const std::size_t n = f.size();
  std::vector<cplx> fc(f.begin(), f.end());
  auto c = dft(fc);
  // log(4 sin^2(t/2)) = -2 sum_{m>=1} cos(m t)/m, so the multiplier on mode k
  // is -2*pi/|k|; the leading 1/(2*pi) cancels it to -1/|k|.
  for (std::size_t i = 0; i < n; ++i) {
    int k = std::abs(mode_of_index(i, n));
    c[i] *= (k == 0) ? 0.0 : -1.0 / double(k);
  }
  auto g = idft(c);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = g[i].real();
  return out;
}

}  // namespace hsl
