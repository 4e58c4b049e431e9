#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "hsl/cauchy.hpp"
#include "hsl/geometry.hpp"

namespace hsl {

// Per-curve node vectors of boundary data.
using BoundaryData = std::vector<std::vector<double>>;

BoundaryData sample_data(const BoundaryGrid& grid,
                         const std::function<double(cplx)>& f);

enum class LayerKind { double_layer, single_layer };

struct PointSource {
  cplx p;
  double strength;  // contributes strength * log|z - p|
};

struct LogSource {
  cplx p;       // inside a hole
  double coeff;  // completion source coeff * log|z - p|
};

// A harmonic function represented by boundary layer densities plus explicit
// logarithmic singular parts. Immutable after construction.
class HarmonicField {
 public:
  double value(cplx z) const;  // throws NearBoundary inside the exclusion band
  cplx grad_z(cplx z) const;   // du/dz, holomorphic away from the sources
  cplx grad_z_unchecked(cplx z) const;

  const BoundaryGrid& grid() const { return *grid_; }
  std::shared_ptr<const BoundaryGrid> grid_ptr() const { return grid_; }
  LayerKind kind() const { return kind_; }
  const std::vector<std::vector<double>>& density() const { return density_; }
  const std::vector<double>& component_constants() const { return constants_; }
  const std::vector<PointSource>& singular() const { return singular_; }
  double gauge() const { return gauge_; }

  // Derived fields sharing the densities (used for gauge shifts and for
  // attaching the singular parts of the principal functions).
  HarmonicField with_gauge(double gauge) const;
  HarmonicField with_singular(std::vector<PointSource> singular) const;
  // Adds a constant by shifting the double-layer density (keeps gauge 0).
  HarmonicField with_density_shift(double delta) const;

  double singular_value(cplx z) const;
  cplx singular_grad(cplx z) const;
  double near_boundary_band() const;

  // Holomorphic completion f with Re f = gauge + layer value, excluding the
  // singular parts. Requires a single-valued representation (no completion
  // log sources; per-curve charges zero).
  cplx completion(cplx z) const;
  std::vector<cplx> completion_boundary(int curve) const;

 private:
  friend HarmonicField solve_dirichlet(std::shared_ptr<const BoundaryGrid>,
                                       const BoundaryData&);
  friend HarmonicField solve_modified_dirichlet(std::shared_ptr<const BoundaryGrid>,
                                                const BoundaryData&);
  friend HarmonicField solve_neumann(std::shared_ptr<const BoundaryGrid>,
                                     const BoundaryData&);
  friend class FieldTracer;

  double layer_value(cplx z) const;
  cplx layer_grad(cplx z) const;

  std::shared_ptr<const BoundaryGrid> grid_;
  LayerKind kind_ = LayerKind::double_layer;
  std::vector<std::vector<double>> density_;
  std::vector<std::vector<double>> cumulative_;    // single layer: antiderivative of sigma|w'|
  std::vector<std::vector<cplx>> cplx_density_;    // single layer: sigma|w'|/w'
  std::vector<PointSource> singular_;
  std::vector<LogSource> logs_;
  std::vector<double> constants_;
  double gauge_ = 0;
  bool zero_flux_imposed_ = false;
};

// u harmonic in D with u = g on the boundary. Multiply connected domains use
// a double-layer density completed by one log source per hole (Mikhlin).
HarmonicField solve_dirichlet(std::shared_ptr<const BoundaryGrid> grid,
                              const BoundaryData& g);

// u harmonic with u - g = c_j (unknown constant) on each curve and zero flux
// through each curve; returned with c_1 = 0 (gauge constant 0).
HarmonicField solve_modified_dirichlet(std::shared_ptr<const BoundaryGrid> grid,
                                       const BoundaryData& g);

// u harmonic with du/dn = h; unique up to a constant, gauge constant 0.
HarmonicField solve_neumann(std::shared_ptr<const BoundaryGrid> grid,
                            const BoundaryData& h);

// g(z) = -log|z - pole| + corrector, g = 0 on the boundary, g > 0 in D.
HarmonicField green_function(std::shared_ptr<const BoundaryGrid> grid, cplx pole);

struct BoundaryTrace {
  std::shared_ptr<const BoundaryGrid> grid;
  std::vector<std::vector<double>> value;
  std::vector<std::vector<double>> dn;  // outward normal derivative
  std::vector<std::vector<double>> ds;  // derivative along the boundary orientation
  std::vector<std::vector<cplx>> dz;    // du/dz boundary limit

  double flux(int curve) const;
  double total_flux() const;
};

BoundaryTrace boundary_trace(const HarmonicField& field);

// Boundary limits of d^2 u / dz^2 and d^3 u / dz^3 (variation engine internals).
std::vector<std::vector<cplx>> boundary_second_derivative(const HarmonicField& field);
std::vector<std::vector<cplx>> boundary_third_derivative(const HarmonicField& field);

}  // namespace hsl
