#pragma once

#include <vector>

#include "hsl/fourier.hpp"
#include "hsl/geometry.hpp"

namespace hsl {

// Side of a curve, referred to its stored counterclockwise parametrization.
enum class Side { left, right };  // left = enclosed region

// Cauchy-type integral machinery on a single discretized curve:
//   C[psi](z) = (1/(2 pi i)) Integral psi(theta) w'(theta) / (w(theta) - z) dtheta.
// Interior values use the plain trapezoidal rule (spectral away from the
// curve); boundary limits use singularity subtraction, which stays spectral
// because the subtracted integrand extends analytically across the diagonal.
class CurveCauchy {
 public:
  explicit CurveCauchy(const CurveGrid& grid);

  cplx value(const std::vector<cplx>& psi, cplx z) const;
  cplx derivative(const std::vector<cplx>& psi, cplx z) const;
  cplx second_derivative(const std::vector<cplx>& psi, cplx z) const;
  cplx third_derivative(const std::vector<cplx>& psi, cplx z) const;

  // One-sided limits at every node of C[psi], d/dz C[psi], d^2/dz^2 C[psi].
  std::vector<cplx> boundary_limits(const std::vector<cplx>& psi, Side side) const;
  std::vector<cplx> boundary_limit_derivatives(const std::vector<cplx>& psi,
                                               Side side) const;
  std::vector<cplx> boundary_limit_seconds(const std::vector<cplx>& psi,
                                           Side side) const;
  std::vector<cplx> boundary_limit_thirds(const std::vector<cplx>& psi,
                                          Side side) const;

  // Single-layer boundary value on the same curve:
  //   (1/(2 pi)) Integral sigma(theta) log|x_i - w(theta)| |w'(theta)| dtheta
  // via the periodic-log kernel split.
  std::vector<double> single_layer_same_curve(const std::vector<double>& sigma) const;

  const CurveGrid& grid() const { return *grid_; }

 private:
  // Regularized values C[psi - psi(x_i)](x_i) at all nodes; adding psi_i (left)
  // or nothing (right) gives the one-sided limits.
  std::vector<cplx> subtraction_values(const std::vector<cplx>& psi) const;

  const CurveGrid* grid_;
  int n_;
};

}  // namespace hsl
