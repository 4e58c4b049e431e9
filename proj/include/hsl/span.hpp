#pragma once

#include "hsl/principal.hpp"

namespace hsl {

struct SpanResult {
  double s = 0;
  double alpha = 0;
  double beta = 0;
  double s_from_area = 0;  // (2/pi) E_log(H), consistency companion
  std::uint64_t fingerprint = 0;
  cplx a, b;
};

SpanResult harmonic_span(const MarkedDomain& domain, int N = 256);
SpanResult harmonic_span(const PrincipalPair& pair);

// Poincare distance between a and b on a simply connected domain, normalized
// d = (1/2) log((1+rho)/(1-rho)) with rho = exp(-g_a(b)). This is the
// normalization that makes s = 4 log cosh d.
double poincare_distance(const MarkedDomain& domain, int N = 256);

// Residual |s - 4 log cosh d| (simply connected only).
double span_distance_residual(const MarkedDomain& domain, int N = 256);

// Independent route for tests: image of b under the Riemann map
// exp(-g - i g*), reconstructed from its boundary correspondence by a Cauchy
// integral, then the disk-model distance.
double poincare_distance_via_map(const MarkedDomain& domain, int N = 256);

struct SFunctionGrid {
  cplx xi;
  std::vector<cplx> eta;
  std::vector<double> span;     // valid where status == 0
  std::vector<int> status;      // 0 ok, 1 refused (too close / not interior), 2 failed
};

SFunctionGrid s_function_grid(const MarkedDomain& domain, cplx xi,
                              const std::vector<cplx>& etas, int N = 256);

struct ExhaustionResult {
  std::vector<double> spans;
  double full_span = 0;
  double gap = 0;  // spans.back() - full_span
};

// Spans of a nested family D_1 subset ... subset D_n subset D sharing the
// marked points; verifies nesting by sampling each boundary.
ExhaustionResult exhaustion_sequence(const std::vector<MarkedDomain>& nested,
                                     const MarkedDomain& full, int N = 256);

}  // namespace hsl
