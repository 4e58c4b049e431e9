#include "hsl/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace hsl {

namespace {

double wrap_angle_diff(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

}  // namespace

cplx SmoothCurve::horner(double theta, int order) const {
  cplx acc(0);
  for (const auto& [k, c] : coeffs_) {
    cplx fac(1);
    for (int o = 0; o < order; ++o) fac *= cplx(0, k);
    acc += fac * c * std::exp(cplx(0, k * theta));
  }
  return acc;
}

SmoothCurve SmoothCurve::build(std::vector<FourierCoeff> coeffs, Orientation orient) {
  SmoothCurve curve;
  int max_mode = 0;
  bool has_first = false;
  for (const auto& [k, c] : coeffs) {
    max_mode = std::max(max_mode, std::abs(k));
    if (std::abs(k) == 1 && std::abs(c) > 0) has_first = true;
  }
  if (!has_first)
    throw DegenerateCurve("curve needs a nonzero coefficient with |k| = 1");
  curve.coeffs_ = std::move(coeffs);
  curve.max_mode_ = max_mode;
  curve.orient_ = orient;

  // Canonicalize to a counterclockwise parametrization (positive enclosed
  // area); the orientation flag alone records hole-ness.
  if (curve.enclosed_area() < 0) {
    for (auto& fc : curve.coeffs_) fc.k = -fc.k;
  }
  curve.validate();
  return curve;
}

void SmoothCurve::validate() const {
  const int n = std::max(256, 8 * max_mode_ + 8);
  std::vector<cplx> zs(n), ds(n);
  double max_speed = 0, min_speed = 1e300;
  for (int m = 0; m < n; ++m) {
    double th = kTwoPi * m / n;
    zs[m] = point(th);
    ds[m] = d1(th);
    max_speed = std::max(max_speed, std::abs(ds[m]));
    min_speed = std::min(min_speed, std::abs(ds[m]));
  }
  if (min_speed < 1e-12 * max_speed)
    throw DegenerateCurve("|z'| vanishes numerically");

  // Pairwise arc separation: two samples far apart in parameter must not be
  // close in the plane relative to the arc between them.
  double mean_speed = 0;
  for (int m = 0; m < n; ++m) mean_speed += std::abs(ds[m]);
  mean_speed /= n;
  for (int i = 0; i < n; ++i) {
    double thi = kTwoPi * i / n;
    for (int j = i + 1; j < n; ++j) {
      double dparam = wrap_angle_diff(thi, kTwoPi * j / n);
      if (dparam < 3.0 * kTwoPi / n) continue;
      double chord = std::abs(zs[i] - zs[j]);
      if (chord < 0.05 * mean_speed * dparam)
        throw SelfIntersecting("curve samples collide away from the diagonal");
    }
  }
}

int SmoothCurve::winding(cplx p, int samples) const {
  double total = 0;
  cplx prev = point(0.0) - p;
  for (int m = 1; m <= samples; ++m) {
    cplx cur = point(kTwoPi * m / samples) - p;
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

double SmoothCurve::arclength(int samples) const {
  double acc = 0;
  for (int m = 0; m < samples; ++m) acc += std::abs(d1(kTwoPi * m / samples));
  return acc * kTwoPi / samples;
}

double SmoothCurve::max_speed(int samples) const {
  double acc = 0;
  for (int m = 0; m < samples; ++m)
    acc = std::max(acc, std::abs(d1(kTwoPi * m / samples)));
  return acc;
}

double SmoothCurve::min_distance_to(cplx p, int samples) const {
  double best = 1e300;
  for (int m = 0; m < samples; ++m)
    best = std::min(best, std::abs(point(kTwoPi * m / samples) - p));
  return best;
}

double SmoothCurve::enclosed_area(int samples) const {
  // A = (1/2i) closed-integral conj(z) dz
  cplx acc(0);
  for (int m = 0; m < samples; ++m) {
    double th = kTwoPi * m / samples;
    acc += std::conj(point(th)) * d1(th);
  }
  acc *= kTwoPi / samples;
  return (acc / cplx(0, 2)).real();
}

cplx SmoothCurve::enclosed_centroid(int samples) const {
  cplx acc(0);
  for (int m = 0; m < samples; ++m) {
    double th = kTwoPi * m / samples;
    cplx z = point(th);
    acc += z * std::conj(z) * d1(th);
  }
  acc *= kTwoPi / samples;
  return (acc / cplx(0, 2)) / enclosed_area(samples);
}

SmoothCurve build_curve(std::vector<FourierCoeff> coeffs, Orientation orient) {
  return SmoothCurve::build(std::move(coeffs), orient);
}

MarkedDomain MarkedDomain::create(SmoothCurve outer, std::vector<SmoothCurve> holes,
                                  cplx a, cplx b) {
  MarkedDomain md;
  md.outer_ = std::move(outer);
  md.holes_ = std::move(holes);
  md.a_ = a;
  md.b_ = b;
  if (std::abs(a - b) == 0) throw InvalidDomain("marked points coincide");

  // Holes strictly inside the outer curve and pairwise disjoint.
  for (std::size_t h = 0; h < md.holes_.size(); ++h) {
    cplx c = md.holes_[h].enclosed_centroid();
    if (md.outer_.winding(c) != 1)
      throw InvalidDomain("hole lies outside the outer curve");
    for (std::size_t g = 0; g < h; ++g) {
      // Disjointness via sampled minimum separation.
      double sep = 1e300;
      for (int m = 0; m < 256; ++m)
        sep = std::min(sep, md.holes_[g].min_distance_to(
                                md.holes_[h].point(kTwoPi * m / 256), 256));
      if (sep <= 0) throw InvalidDomain("holes intersect");
      if (md.holes_[g].winding(c) != 0 ||
          md.holes_[h].winding(md.holes_[g].enclosed_centroid()) != 0)
        throw InvalidDomain("holes are nested");
    }
  }

  for (cplx p : {a, b}) {
    if (md.outer_.winding(p) != 1) throw InvalidDomain("marked point outside domain");
    for (const auto& hole : md.holes_)
      if (hole.winding(p) != 0) throw InvalidDomain("marked point inside a hole");
  }
  return md;
}

std::uint64_t MarkedDomain::fingerprint() const {
  std::vector<double> data;
  for (int j = 0; j < nu(); ++j) {
    for (const auto& [k, c] : curve(j).coeffs()) {
      data.push_back(k);
      data.push_back(c.real());
      data.push_back(c.imag());
    }
    data.push_back(orientation_sign(j));
  }
  data.push_back(a_.real());
  data.push_back(a_.imag());
  data.push_back(b_.real());
  data.push_back(b_.imag());
  return fnv1a(data.data(), data.size());
}

double CurveGrid::arclength() const {
  double acc = 0;
  for (double x : w) acc += x;
  return acc;
}

double BoundaryGrid::max_spacing() const {
  double h = 0;
  for (const auto& g : curves) {
    double ms = 0;
    for (const auto& d : g.dz) ms = std::max(ms, std::abs(d));
    h = std::max(h, kTwoPi * ms / N);
  }
  return h;
}

std::pair<int, int> BoundaryGrid::nearest_node(cplx p) const {
  double best = 1e300;
  std::pair<int, int> idx{0, 0};
  for (std::size_t j = 0; j < curves.size(); ++j)
    for (int m = 0; m < N; ++m) {
      double d = std::abs(curves[j].z[m] - p);
      if (d < best) {
        best = d;
        idx = {static_cast<int>(j), m};
      }
    }
  return idx;
}

double BoundaryGrid::distance_to_boundary(cplx p) const {
  auto [j, m] = nearest_node(p);
  return std::abs(curves[j].z[m] - p);
}

std::shared_ptr<const BoundaryGrid> sample_boundary(
    std::shared_ptr<const MarkedDomain> domain, int N) {
  if (N < 16 || N % 2 != 0) throw InvalidDomain("N must be even and >= 16");
  auto grid = std::make_shared<BoundaryGrid>();
  grid->domain = domain;
  grid->N = N;
  for (int j = 0; j < domain->nu(); ++j) {
    const auto& curve = domain->curve(j);
    CurveGrid g;
    g.orient_sign = domain->orientation_sign(j);
    g.theta.resize(N);
    g.z.resize(N);
    g.dz.resize(N);
    g.d2z.resize(N);
    g.normal.resize(N);
    g.w.resize(N);
    for (int m = 0; m < N; ++m) {
      double th = kTwoPi * m / N;
      g.theta[m] = th;
      g.z[m] = curve.point(th);
      g.dz[m] = curve.d1(th);
      g.d2z[m] = curve.d2(th);
      double speed = std::abs(g.dz[m]);
      g.normal[m] = cplx(0, -1) * g.orient_sign * g.dz[m] / speed;
      g.w[m] = kTwoPi / N * speed;
    }
    grid->curves.push_back(std::move(g));
  }
  return grid;
}

PointClass contains(const MarkedDomain& domain, cplx p, int N) {
  double band = 0;
  double dist = 1e300;
  for (int j = 0; j < domain.nu(); ++j) {
    const auto& curve = domain.curve(j);
    band = std::max(band, 5.0 * kTwoPi * curve.max_speed() / N);
    dist = std::min(dist, curve.min_distance_to(p, std::max(N, 256)));
  }
  if (dist < band) return PointClass::near_boundary;
  int w = domain.outer().winding(p);
  for (const auto& hole : domain.holes()) w -= hole.winding(p);
  return w == 1 ? PointClass::inside : PointClass::outside;
}

}  // namespace hsl
