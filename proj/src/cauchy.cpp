#include "hsl/cauchy.hpp"

#include <cmath>

namespace hsl {

namespace {
const cplx kInv2PiI = cplx(0, -1) / kTwoPi;  // 1/(2 pi i)
}

CurveCauchy::CurveCauchy(const CurveGrid& grid)
    : grid_(&grid), n_(static_cast<int>(grid.z.size())) {}

cplx CurveCauchy::value(const std::vector<cplx>& psi, cplx z) const {
  cplx acc(0);
  for (int m = 0; m < n_; ++m) acc += psi[m] * grid_->dz[m] / (grid_->z[m] - z);
  return acc * (kTwoPi / n_) * kInv2PiI;
}

cplx CurveCauchy::derivative(const std::vector<cplx>& psi, cplx z) const {
  cplx acc(0);
  for (int m = 0; m < n_; ++m) {
    cplx d = grid_->z[m] - z;
    acc += psi[m] * grid_->dz[m] / (d * d);
  }
  return acc * (kTwoPi / n_) * kInv2PiI;
}

cplx CurveCauchy::second_derivative(const std::vector<cplx>& psi, cplx z) const {
  cplx acc(0);
  for (int m = 0; m < n_; ++m) {
    cplx d = grid_->z[m] - z;
    acc += 2.0 * psi[m] * grid_->dz[m] / (d * d * d);
  }
  return acc * (kTwoPi / n_) * kInv2PiI;
}

cplx CurveCauchy::third_derivative(const std::vector<cplx>& psi, cplx z) const {
  cplx acc(0);
  for (int m = 0; m < n_; ++m) {
    cplx d = grid_->z[m] - z;
    acc += 6.0 * psi[m] * grid_->dz[m] / (d * d * d * d);
  }
  return acc * (kTwoPi / n_) * kInv2PiI;
}

std::vector<cplx> CurveCauchy::subtraction_values(const std::vector<cplx>& psi) const {
  // (1/(2 pi i)) Integral (psi(w) - psi(x_i)) w' / (w - x_i) dtheta per node;
  // the integrand extends analytically across the diagonal with value
  // psi'(theta_i) there, so the trapezoidal rule stays spectral.
  auto dpsi = spectral_derivative(psi);
  std::vector<cplx> out(n_);
  for (int i = 0; i < n_; ++i) {
    cplx acc = dpsi[i];
    for (int m = 0; m < n_; ++m) {
      if (m == i) continue;
      acc += (psi[m] - psi[i]) * grid_->dz[m] / (grid_->z[m] - grid_->z[i]);
    }
    out[i] = acc * (kTwoPi / n_) * kInv2PiI;
  }
  return out;
}

std::vector<cplx> CurveCauchy::boundary_limits(const std::vector<cplx>& psi,
                                               Side side) const {
  auto out = subtraction_values(psi);
  if (side == Side::left)
    for (int i = 0; i < n_; ++i) out[i] += psi[i];
  return out;
}

std::vector<cplx> CurveCauchy::boundary_limit_derivatives(const std::vector<cplx>& psi,
                                                          Side side) const {
  // d/dz C[psi] = C[psi'(theta)/w'(theta)] after integrating by parts.
  auto dpsi = spectral_derivative(psi);
  std::vector<cplx> tilde(n_);
  for (int m = 0; m < n_; ++m) tilde[m] = dpsi[m] / grid_->dz[m];
  return boundary_limits(tilde, side);
}

std::vector<cplx> CurveCauchy::boundary_limit_seconds(const std::vector<cplx>& psi,
                                                      Side side) const {
  auto dpsi = spectral_derivative(psi);
  std::vector<cplx> tilde(n_);
  for (int m = 0; m < n_; ++m) tilde[m] = dpsi[m] / grid_->dz[m];
  auto dtilde = spectral_derivative(tilde);
  std::vector<cplx> tilde2(n_);
  for (int m = 0; m < n_; ++m) tilde2[m] = dtilde[m] / grid_->dz[m];
  return boundary_limits(tilde2, side);
}

std::vector<cplx> CurveCauchy::boundary_limit_thirds(const std::vector<cplx>& psi,
                                                     Side side) const {
  std::vector<cplx> t = psi;
  for (int pass = 0; pass < 3; ++pass) {
    auto dt = spectral_derivative(t);
    for (int m = 0; m < n_; ++m) t[m] = dt[m] / grid_->dz[m];
  }
  return boundary_limits(t, side);
}

std::vector<double> CurveCauchy::single_layer_same_curve(
    const std::vector<double>& sigma) const {
  // Density against arclength: sigma_tilde = sigma |w'|.
  std::vector<double> st(n_);
  for (int m = 0; m < n_; ++m) st[m] = sigma[m] * std::abs(grid_->dz[m]);

  // Singular half: (1/2) log(4 sin^2((theta-phi)/2)) under 1/(2 pi).
  auto logpart = log_kernel_convolution(st);

  std::vector<double> out(n_);
  for (int i = 0; i < n_; ++i) {
    double acc = 0;
    for (int m = 0; m < n_; ++m) {
      double s;
      if (m == i) {
        s = std::log(std::abs(grid_->dz[i]));
      } else {
        double dth = grid_->theta[i] - grid_->theta[m];
        s = std::log(std::abs(grid_->z[i] - grid_->z[m]) /
                     (2.0 * std::abs(std::sin(0.5 * dth))));
      }
      acc += st[m] * s;
    }
    out[i] = acc / n_ + 0.5 * logpart[i];
  }
  return out;
}

}  // namespace hsl
