#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hsl/bie.hpp"

namespace hsl {

// The L1/L0 principal functions p, q for (domain, a, b) together with their
// constants alpha, beta and the data the variation formulas consume.
struct PrincipalPair {
  std::shared_ptr<const BoundaryGrid> grid;
  HarmonicField p;  // modified-Dirichlet route, constant on each curve
  HarmonicField q;  // Neumann route, vanishing normal derivative
  double alpha = 0;
  double beta = 0;
  std::vector<double> c;  // boundary constants of p per curve
  cplx dh_xi_dz{};        // d h_xi / dz at b
  cplx dmh_xi_dz{};       // d mathfrak-h_xi / dz at b
  BoundaryTrace p_trace;
  BoundaryTrace q_trace;

  cplx a() const { return grid->domain->a(); }
  cplx b() const { return grid->domain->b(); }
};

PrincipalPair compute_principal_pair(std::shared_ptr<const MarkedDomain> domain,
                                     int N = 256);
inline PrincipalPair compute_principal_pair(const MarkedDomain& domain, int N = 256) {
  return compute_principal_pair(std::make_shared<MarkedDomain>(domain), N);
}

enum class SlitKind { circular, radial, combinedH };

// Exponentiated analytic completion of a principal function, normalized so
// that W(z) - 1/(z-a) is regular at a (residue 1) and W(b) = 0.
class ConformalSlitMap {
 public:
  ConformalSlitMap(std::shared_ptr<const PrincipalPair> pair, SlitKind kind);

  cplx eval(cplx z) const;  // throws NearBoundary in the exclusion band
  SlitKind kind() const { return kind_; }
  cplx normalization() const { return norm_; }
  const PrincipalPair& pair() const { return *pair_; }

  // Boundary image of curve j: log-modulus and a continuous argument.
  struct BoundaryImage {
    std::vector<double> logmod;
    std::vector<double> arg;
  };
  const BoundaryImage& boundary_image(int curve) const { return images_[curve]; }

  // Residue of W at a, fitted from a probe circle (normalization invariant).
  cplx fitted_residue(int samples = 16) const;

 private:
  cplx completion(cplx z) const;  // the exponent's layer part
  std::shared_ptr<const PrincipalPair> pair_;
  SlitKind kind_;
  cplx norm_;
  std::vector<BoundaryImage> images_;
};

ConformalSlitMap build_slit_map(std::shared_ptr<const PrincipalPair> pair, SlitKind kind);
ConformalSlitMap build_H(std::shared_ptr<const PrincipalPair> pair);

struct CircularSlit {
  double r = 0;            // slit radius
  double theta1 = 0;       // angular extent [theta1, theta2]
  double theta2 = 0;
  double pre1 = 0, pre2 = 0;  // boundary parameters of the endpoint preimages
};

struct RadialSlit {
  double theta = 0;        // slit angle
  double r1 = 0, r2 = 0;   // radial extent
  double pre1 = 0, pre2 = 0;
};

struct SlitData {
  std::vector<CircularSlit> circular;
  std::vector<RadialSlit> radial;
  // Extrema counts per curve found by the root search (2 each when the
  // interleaving property holds).
  std::vector<int> circular_extrema;
  std::vector<int> radial_extrema;
};

SlitData extract_slit_data(const ConformalSlitMap& map);
SlitData extract_slit_data(std::shared_ptr<const PrincipalPair> pair);

// True when the four endpoint preimages on the curve alternate between
// arg-P extrema and log|Q| extrema in cyclic order.
bool slits_interleaved(const SlitData& data, int curve);

// F = (dq/dz)/(dp/dz); F(a) = 1, Re F = 0 on the boundary, Re F > 0 inside.
cplx eval_F(const PrincipalPair& pair, cplx z);
std::vector<std::vector<cplx>> boundary_F(const PrincipalPair& pair);

// -Integral h dh* over the boundary with h = (p+q)/2; equals (pi/2)(alpha-beta).
double e_log_area(const PrincipalPair& pair);

struct ConvexityReport {
  double max_curvature = 0;
  double min_curvature = 0;
  bool one_signed = false;
};

// Discrete signed curvature of the image curve -log H(C_j), sampled at
// `samples` points from the spectral interpolants of the boundary traces.
ConvexityReport convexity_check(const PrincipalPair& pair, int curve,
                                int samples = 512);

// Boundary samples of H on curve j (exp of the tau values).
std::vector<cplx> h_boundary_samples(const PrincipalPair& pair, int curve,
                                     int samples = 512);

// Argument-principle count of H-preimages of w' (0 or 1 when H is univalent).
int h_preimage_count(const PrincipalPair& pair, cplx w, int samples = 512);

// True if the closed polyline has no self-crossings.
bool polyline_simple(const std::vector<cplx>& pts);

}  // namespace hsl
