#pragma once

#include <optional>

#include "hsl/expr.hpp"
#include "hsl/principal.hpp"
#include "hsl/span.hpp"

namespace hsl {

// t-parametrized boundary curves plus a real-analytic defining function
// phi(t, z) (negative inside) and holomorphic marked-point sections.
class DomainFamily {
 public:
  struct Coeff {
    int k;
    ExprPtr re, im;  // expressions in t only
  };
  struct Curve {
    std::vector<Coeff> coeffs;
    bool hole = false;
  };

  ExprPtr phi;
  std::vector<Curve> curves;
  ExprPtr a, b;
  double radius = 1.0;

  MarkedDomain domain_at(cplx t) const;
  cplx section_a(cplx t) const { return a->eval(t, 0); }
  cplx section_b(cplx t) const { return b->eval(t, 0); }
  cplx section_a_prime(cplx t) const { return a->holomorphic_derivative(t); }
  cplx section_b_prime(cplx t) const { return b->holomorphic_derivative(t); }

  cplx boundary_point(cplx t, int curve, double theta) const;
  // d/d tbar of the boundary parametrization at fixed theta.
  cplx boundary_dwdtbar(cplx t, int curve, double theta) const;

  // Frame change w = z - a(t): sections become 0 and b - a, the defining
  // function is composed with the shift. Values of alpha, beta, s are
  // unchanged (the map is a rigid translation fiberwise), but the variation
  // formulas then apply with their fixed-pole hypothesis.
  DomainFamily pole_normalized() const;

  // Consistency: phi vanishes on the parametrized boundary, sections stay
  // interior and distinct, and |phi_z| > 0 on the boundary.
  void validate(double tmax, int t_samples = 5, int theta_samples = 64) const;
};

cplx eval_k1(const DomainFamily& family, cplx t, int curve, double theta);
double eval_k2(const DomainFamily& family, cplx t, int curve, double theta);

struct LeviPoint {
  cplx k1;
  double k2;
};
LeviPoint eval_levi(const DomainFamily& family, cplx t, cplx z);

enum class VariedQuantity { alpha, beta, span };

struct VariationOptions {
  // 384 nodes keep b = 0.25 outside the 10-spacing degeneration guard on
  // every fiber of the shipped families (radii up to ~1.46).
  int N = 384;
  double h_t = 1e-3;  // finite-difference step in t
};

// Right-hand sides of the first variation formulas evaluated from boundary
// data at parameter t (pole-normalized frame).
cplx first_variation(const DomainFamily& family, cplx t, VariedQuantity which,
                     const VariationOptions& opt = {});

// Central differences (with one Richardson refinement) of a scalar quantity.
enum class FdOrder { dt, laplacian };
cplx fd_derivative(const DomainFamily& family, cplx t, VariedQuantity which,
                   FdOrder order, const VariationOptions& opt = {});

// Both candidate forms of the span's first variation against the finite
// difference; the forms differ by the section term 2(dh - dmh) xi'(t).
struct SpanVariationComparison {
  cplx bare;           // boundary integral alone
  cplx with_sections;  // plus the section term
  cplx fd;
};
SpanVariationComparison compare_span_first_variation(const DomainFamily& family,
                                                     cplx t,
                                                     const VariationOptions& opt = {});

struct SecondVariationBreakdown {
  double boundary_term = 0;  // (1/pi) Int k2 (|p_z|^2 + |q_z|^2) ds
  double area_term = 0;      // (4/pi) Int (|p_tbz|^2 + |q_tbz|^2) dxdy
  double total = 0;
};
SecondVariationBreakdown second_variation_span(const DomainFamily& family, cplx t,
                                               const VariationOptions& opt = {});

struct GridSpec {
  cplx center{0, 0};
  double radius = 0.3;
  int n = 9;  // odd

  cplx point(int ix, int iy) const {
    double h = step();
    return center + cplx(-radius + ix * h, -radius + iy * h);
  }
  double step() const { return n > 1 ? 2.0 * radius / (n - 1) : 0.0; }
};

struct VariationReport {
  GridSpec grid;
  std::vector<cplx> t;  // row-major, iy outer
  std::vector<double> span, alpha, beta;
  std::vector<double> lap_span, lap_beta;  // d^2/dt dtbar estimates
  std::vector<int> status;                 // 0 ok, 1 failed
  double min_k2 = 0;
  double tol = 0;
  bool pseudoconvex = false;
  bool span_subharmonic = false;
  bool beta_superharmonic = false;
};

VariationReport subharmonicity_scan(const DomainFamily& family, const GridSpec& grid,
                                    const VariationOptions& opt = {});

struct LogCoshReport {
  GridSpec grid;
  std::vector<cplx> t;
  std::vector<double> delta;      // log cosh d(t)
  std::vector<double> lap_delta;  // d^2/dt dtbar estimates
  std::vector<int> status;
  bool subharmonic = false;
  double tol = 0;
};

LogCoshReport logcosh_subharmonicity(const DomainFamily& family, const GridSpec& grid,
                                     const VariationOptions& opt = {});

struct SFunctionLineReport {
  std::vector<cplx> u;  // line parameter grid
  std::vector<double> span;
  std::vector<double> lap;  // interior nodes only; NaN elsewhere
  std::vector<int> status;
  double min_lap = 0;
  bool strictly_subharmonic = false;
};

// Restriction of the S-function to the complex line
// (xi, eta) = (xi0 + u d0, eta0 + u d1) in R x R.
SFunctionLineReport sfunction_psh_check(const MarkedDomain& domain, cplx xi0, cplx d0,
                                        cplx eta0, cplx d1, const GridSpec& grid,
                                        int N = 256);

struct RigidityReport {
  double max_slit_deviation = 0;  // max_j,t |A~_j(t) - A~_j(0)|
  double max_span_deviation = 0;
  bool trivial_candidate = false;
};

RigidityReport rigidity_check(const DomainFamily& family, const GridSpec& grid,
                              const VariationOptions& opt = {});

// Canonical test families.
DomainFamily make_product_family(cplx b = cplx(0.25, 0));
DomainFamily make_hartogs_family(cplx b = cplx(0.25, 0));      // |z| < e^{Re t}
DomainFamily make_translation_family(cplx offset = cplx(0.25, 0));
DomainFamily make_concave_family(cplx b = cplx(0.25, 0));      // |z|^2 < 1 + |t|^2
// Product disks with a moving zero section (exercises the xi' term).
DomainFamily make_moving_section_family(cplx b0 = cplx(0.25, 0),
                                        cplx rate = cplx(0.1, 0));

}  // namespace hsl
