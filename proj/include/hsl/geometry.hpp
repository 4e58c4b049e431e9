#pragma once

#include <memory>
#include <vector>

#include "hsl/errors.hpp"
#include "hsl/util.hpp"

namespace hsl {

enum class Orientation { positive, negative };

struct FourierCoeff {
  int k;
  cplx c;
};

// Closed real-analytic Jordan curve z(theta) = sum c_k e^{i k theta}.
// Stored counterclockwise regardless of the supplied parameter direction;
// hole curves carry Orientation::negative and the boundary grid flips their
// normals so the domain stays on the left.
class SmoothCurve {
 public:
  static SmoothCurve build(std::vector<FourierCoeff> coeffs, Orientation orient);

  cplx point(double theta) const { return horner(theta, 0); }
  cplx d1(double theta) const { return horner(theta, 1); }
  cplx d2(double theta) const { return horner(theta, 2); }

  int max_mode() const { return max_mode_; }
  Orientation orientation() const { return orient_; }
  const std::vector<FourierCoeff>& coeffs() const { return coeffs_; }

  // Winding number about p of the curve in its stored (ccw) direction.
  int winding(cplx p, int samples = 512) const;
  double arclength(int samples = 4096) const;
  double max_speed(int samples = 1024) const;
  double min_distance_to(cplx p, int samples = 512) const;

  // Area centroid of the enclosed region (curve assumed Jordan).
  cplx enclosed_centroid(int samples = 1024) const;
  double enclosed_area(int samples = 1024) const;

  SmoothCurve() = default;  // empty placeholder; build() is the validated entry

 private:
  cplx horner(double theta, int order) const;
  void validate() const;

  std::vector<FourierCoeff> coeffs_;
  int max_mode_ = 0;
  Orientation orient_ = Orientation::positive;
};

SmoothCurve build_curve(std::vector<FourierCoeff> coeffs, Orientation orient);

// Finitely connected bounded domain: one outer curve, nu-1 holes, and the two
// marked points a (pole of the maps) and b (zero).
class MarkedDomain {
 public:
  static MarkedDomain create(SmoothCurve outer, std::vector<SmoothCurve> holes,
                             cplx a, cplx b);

  int nu() const { return 1 + static_cast<int>(holes_.size()); }
  const SmoothCurve& curve(int j) const { return j == 0 ? outer_ : holes_[j - 1]; }
  const SmoothCurve& outer() const { return outer_; }
  const std::vector<SmoothCurve>& holes() const { return holes_; }
  cplx a() const { return a_; }
  cplx b() const { return b_; }
  // +1 where the stored ccw parametrization agrees with the boundary
  // orientation of the domain (outer curve), -1 on holes.
  double orientation_sign(int j) const { return j == 0 ? 1.0 : -1.0; }

  MarkedDomain with_points(cplx a, cplx b) const { return create(outer_, holes_, a, b); }
  std::uint64_t fingerprint() const;

 private:
  MarkedDomain() = default;
  SmoothCurve outer_;
  std::vector<SmoothCurve> holes_;
  cplx a_, b_;
};

struct CurveGrid {
  std::vector<double> theta;
  std::vector<cplx> z;       // positions
  std::vector<cplx> dz;      // z'(theta) of the stored ccw parametrization
  std::vector<cplx> d2z;     // z''(theta)
  std::vector<cplx> normal;  // outward unit normal of the domain
  std::vector<double> w;     // arclength weights (2 pi / N) |z'|
  double orient_sign = 1.0;
  double arclength() const;
};

struct BoundaryGrid {
  std::shared_ptr<const MarkedDomain> domain;
  int N = 0;
  std::vector<CurveGrid> curves;

  int total_nodes() const { return N * static_cast<int>(curves.size()); }
  int node_offset(int j) const { return j * N; }
  double max_spacing() const;  // 2 pi max|z'| / N over all curves
  // Index of the boundary node closest to p (curve, node).
  std::pair<int, int> nearest_node(cplx p) const;
  double distance_to_boundary(cplx p) const;
};

std::shared_ptr<const BoundaryGrid> sample_boundary(
    std::shared_ptr<const MarkedDomain> domain, int N);

enum class PointClass { inside, outside, near_boundary };

PointClass contains(const MarkedDomain& domain, cplx p, int N = 256);

}  // namespace hsl
