#pragma once

#include "hsl/geometry.hpp"

namespace hsl {
// Closed-form references for the disk and affine transport rules. These are
// pure formula evaluators: they never call the numerical pipeline, so a test
// failure localizes to the solver side.
namespace oracles {

struct DiskCase {
  double r = 1.0;  // disk radius, pole at 0
  cplx xi;         // zero point, |xi| < r
};

cplx disk_P(const DiskCase& c, cplx z);
cplx disk_Q(const DiskCase& c, cplx z);

struct DiskConstants {
  double alpha, beta, s;
};
DiskConstants disk_constants(const DiskCase& c);

// Poincare distance between 0 and xi on the disk of radius r.
double disk_poincare_distance(const DiskCase& c);

// Affine transport z -> lambda z + c: alpha and beta shift by log|lambda|,
// the span is unchanged.
struct TransportPrediction {
  double alpha_shift;
  double beta_shift;
};
TransportPrediction transport(cplx lambda);
MarkedDomain transport_domain(const MarkedDomain& md, cplx lambda, cplx c);

}  // namespace oracles
}  // namespace hsl
