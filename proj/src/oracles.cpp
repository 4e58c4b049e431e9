#include "hsl/oracles.hpp"

#include <cmath>

namespace hsl {
namespace oracles {

cplx disk_P(const DiskCase& c, cplx z) {
  return (-1.0 / c.xi) * ((z - c.xi) / z) /
         (1.0 - z * std::conj(c.xi) / (c.r * c.r));
}

cplx disk_Q(const DiskCase& c, cplx z) {
  return (-1.0 / c.xi) * ((z - c.xi) / z) *
         (1.0 - z * std::conj(c.xi) / (c.r * c.r));
}

DiskConstants disk_constants(const DiskCase& c) {
  double rho2 = std::norm(c.xi) / (c.r * c.r);
  double alpha = -2.0 * std::log(std::abs(c.xi)) - std::log(1.0 - rho2);
  double beta = -2.0 * std::log(std::abs(c.xi)) + std::log(1.0 - rho2);
  return {alpha, beta, alpha - beta};
}

double disk_poincare_distance(const DiskCase& c) {
  double rho = std::abs(c.xi) / c.r;
  return 0.5 * std::log((1.0 + rho) / (1.0 - rho));
}

TransportPrediction transport(cplx lambda) {
  double shift = std::log(std::abs(lambda));
  return {-shift, -shift};  // alpha(new) = alpha(old) - log|lambda|
}

MarkedDomain transport_domain(const MarkedDomain& md, cplx lambda, cplx c) {
  auto map_curve = [&](const SmoothCurve& curve) {
    std::vector<FourierCoeff> coeffs;
    bool has_zero = false;
    for (auto fc : curve.coeffs()) {
      fc.c *= lambda;
      if (fc.k == 0) {
        fc.c += c;
        has_zero = true;
      }
      coeffs.push_back(fc);
    }
    if (!has_zero && c != cplx(0)) coeffs.push_back({0, c});
    return build_curve(coeffs, curve.orientation());
  };
  std::vector<SmoothCurve> holes;
  for (const auto& hole : md.holes()) holes.push_back(map_curve(hole));
  return MarkedDomain::create(map_curve(md.outer()), std::move(holes),
                              lambda * md.a() + c, lambda * md.b() + c);
}

}  // namespace oracles
}  // namespace hsl
