#include "hsl/principal.hpp"

#include <algorithm>
#include <cmath>

namespace hsl {

namespace {

double normal_log_derivative(cplx x, cplx n, cplx p) {
  // d/dn log|x - p|
  cplx diff = x - p;
  return (std::conj(n) * diff).real() / std::norm(diff);
}

// Roots of the derivative of the trigonometric interpolant of v, refined by
// Newton with bisection fallback (tolerance 1e-12 in theta).
std::vector<double> interpolant_extrema(const std::vector<double>& v) {
  const int n = static_cast<int>(v.size());
  TrigInterp interp(v);
  auto dv = spectral_derivative(v);
  std::vector<double> roots;
  for (int i = 0; i < n; ++i) {
    double d0 = dv[i], d1 = dv[(i + 1) % n];
    if (d0 == 0) {
      roots.push_back(kTwoPi * i / n);
      continue;
    }
    if (d0 * d1 >= 0) continue;
    double lo = kTwoPi * i / n, hi = kTwoPi * (i + 1) / n;
    double th = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
      double f = interp.deriv(th, 1);
      double fp = interp.deriv(th, 2);
      double step = (fp != 0) ? -f / fp : 0;
      double next = th + step;
      if (fp == 0 || next < lo || next > hi) {
        // bisect on the bracketing interval
        double fl = interp.deriv(lo, 1);
        next = 0.5 * (lo + hi);
        double fm = interp.deriv(next, 1);
        if (fl * fm <= 0)
          hi = next;
        else
          lo = next;
        next = 0.5 * (lo + hi);
      }
      if (std::abs(next - th) < 1e-12) {
        th = next;
        break;
      }
      th = next;
    }
    roots.push_back(th);
  }
  return roots;
}

}  // namespace

PrincipalPair compute_principal_pair(std::shared_ptr<const MarkedDomain> domain,
                                     int N) {
  auto grid = sample_boundary(domain, N);
  const cplx a = domain->a(), b = domain->b();
  if (std::abs(a - b) < 10.0 * grid->max_spacing())
    throw MarkedPointsTooClose("marked points closer than 10 grid spacings");

  // p = -log|z-a| + log|z-b| + u_p with u_p from the modified Dirichlet
  // problem for g = log|z-a| - log|z-b|; the gauge makes h_0(a) = 0.
  BoundaryData g = sample_data(*grid, [a, b](cplx z) {
    return std::log(std::abs(z - a)) - std::log(std::abs(z - b));
  });
  HarmonicField up = solve_modified_dirichlet(grid, g);
  double shift = -std::log(std::abs(a - b)) - up.value(a);
  up = up.with_density_shift(shift);

  PrincipalPair pair;
  pair.grid = grid;
  pair.alpha = up.value(b) - std::log(std::abs(b - a));
  pair.c = up.component_constants();
  pair.dh_xi_dz = up.grad_z(b) - 1.0 / (2.0 * (b - a));
  pair.p = up.with_singular({{a, -1.0}, {b, +1.0}});

  // q via the Neumann problem cancelling the singular normal derivative.
  BoundaryData h(grid->curves.size());
  for (std::size_t j = 0; j < grid->curves.size(); ++j) {
    h[j].resize(N);
    for (int i = 0; i < N; ++i) {
      cplx x = grid->curves[j].z[i];
      cplx n = grid->curves[j].normal[i];
      h[j][i] = normal_log_derivative(x, n, a) - normal_log_derivative(x, n, b);
    }
  }
  HarmonicField uq = solve_neumann(grid, h);
  double gauge = -std::log(std::abs(a - b)) - uq.value(a);
  uq = uq.with_gauge(gauge);
  pair.beta = uq.value(b) - std::log(std::abs(b - a));
  pair.dmh_xi_dz = uq.grad_z(b) - 1.0 / (2.0 * (b - a));
  pair.q = uq.with_singular({{a, -1.0}, {b, +1.0}});

  pair.p_trace = boundary_trace(pair.p);
  pair.q_trace = boundary_trace(pair.q);
  return pair;
}

cplx ConformalSlitMap::completion(cplx z) const {
  switch (kind_) {
    case SlitKind::circular:
      return pair_->p.completion(z);
    case SlitKind::radial:
      return pair_->q.completion(z);
    case SlitKind::combinedH:
      return 0.5 * (pair_->p.completion(z) + pair_->q.completion(z));
  }
  return {};
}

ConformalSlitMap::ConformalSlitMap(std::shared_ptr<const PrincipalPair> pair,
                                   SlitKind kind)
    : pair_(std::move(pair)), kind_(kind) {
  const cplx a = pair_->a(), b = pair_->b();
  norm_ = 1.0 / ((a - b) * std::exp(completion(a)));

  const auto& grid = *pair_->grid;
  const int N = grid.N;
  images_.resize(grid.curves.size());
  for (std::size_t j = 0; j < grid.curves.size(); ++j) {
    std::vector<cplx> expo(N, cplx(0));
    auto add = [&](const std::vector<cplx>& f, double wgt) {
      for (int i = 0; i < N; ++i) expo[i] += wgt * f[i];
    };
    if (kind_ == SlitKind::circular || kind_ == SlitKind::combinedH)
      add(pair_->p.completion_boundary(static_cast<int>(j)),
          kind_ == SlitKind::combinedH ? 0.5 : 1.0);
    if (kind_ == SlitKind::radial || kind_ == SlitKind::combinedH)
      add(pair_->q.completion_boundary(static_cast<int>(j)),
          kind_ == SlitKind::combinedH ? 0.5 : 1.0);

    // Continuous argument of the rational factor (z-b)/(z-a) along the curve:
    // integrate its exact theta-derivative spectrally (periodic since the
    // windings about a and b cancel).
    std::vector<double> darg(N), logmod(N);
    for (int i = 0; i < N; ++i) {
      cplx x = grid.curves[j].z[i];
      cplx d = grid.curves[j].dz[i];
      darg[i] = (d * (1.0 / (x - b) - 1.0 / (x - a))).imag();
      logmod[i] = std::log(std::abs((x - b) / (x - a)));
    }
    auto arg_rat = spectral_antiderivative(darg);
    double arg0 = std::arg((grid.curves[j].z[0] - b) / (grid.curves[j].z[0] - a));

    auto& img = images_[j];
    img.logmod.resize(N);
    img.arg.resize(N);
    double lC = std::log(std::abs(norm_)), aC = std::arg(norm_);
    for (int i = 0; i < N; ++i) {
      img.logmod[i] = lC + logmod[i] + expo[i].real();
      img.arg[i] = aC + arg0 + arg_rat[i] + expo[i].imag();
    }
  }
}

cplx ConformalSlitMap::eval(cplx z) const {
  const cplx a = pair_->a(), b = pair_->b();
  if (pair_->grid->distance_to_boundary(z) < 5.0 * pair_->grid->max_spacing())
    throw NearBoundary("slit map evaluated inside the exclusion band");
  return norm_ * (z - b) / (z - a) * std::exp(completion(z));
}

cplx ConformalSlitMap::fitted_residue(int samples) const {
  const cplx a = pair_->a(), b = pair_->b();
  double band = 5.0 * pair_->grid->max_spacing();
  double r = 0.5 * std::min(pair_->grid->distance_to_boundary(a) - band,
                            std::abs(a - b));
  cplx acc(0);
  for (int k = 0; k < samples; ++k) {
    double phi = kTwoPi * k / samples;
    cplx e = std::exp(cplx(0, phi));
    acc += eval(a + r * e) * e;
  }
  return acc * r / double(samples);
}

ConformalSlitMap build_slit_map(std::shared_ptr<const PrincipalPair> pair,
                                SlitKind kind) {
  return ConformalSlitMap(std::move(pair), kind);
}

ConformalSlitMap build_H(std::shared_ptr<const PrincipalPair> pair) {
  return ConformalSlitMap(std::move(pair), SlitKind::combinedH);
}

SlitData extract_slit_data(const ConformalSlitMap& map) {
  SlitData data;
  const auto& pair = map.pair();
  const int nc = static_cast<int>(pair.grid->curves.size());
  for (int j = 0; j < nc; ++j) {
    const auto& img = map.boundary_image(j);
    if (map.kind() == SlitKind::circular) {
      double mean = 0;
      for (double x : img.logmod) mean += x;
      mean /= img.logmod.size();
      TrigInterp vi(img.arg);
      auto roots = interpolant_extrema(img.arg);
      if (roots.size() < 2) throw DegenerateSlit("fewer than two arg extrema");
      double vmin = 1e300, vmax = -1e300, pmin = 0, pmax = 0;
      for (double th : roots) {
        double v = vi.eval(th);
        if (v < vmin) {
          vmin = v;
          pmin = th;
        }
        if (v > vmax) {
          vmax = v;
          pmax = th;
        }
      }
      if (vmax - vmin < 1e-9) throw DegenerateSlit("circular slit collapses to a point");
      data.circular.push_back({std::exp(mean), vmin, vmax, pmin, pmax});
      data.circular_extrema.push_back(static_cast<int>(roots.size()));
    } else if (map.kind() == SlitKind::radial) {
      double mean = 0;
      for (double x : img.arg) mean += x;
      mean /= img.arg.size();
      TrigInterp ui(img.logmod);
      auto roots = interpolant_extrema(img.logmod);
      if (roots.size() < 2) throw DegenerateSlit("fewer than two log-modulus extrema");
      double umin = 1e300, umax = -1e300, pmin = 0, pmax = 0;
      for (double th : roots) {
        double u = ui.eval(th);
        if (u < umin) {
          umin = u;
          pmin = th;
        }
        if (u > umax) {
          umax = u;
          pmax = th;
        }
      }
      if (umax - umin < 1e-9) throw DegenerateSlit("radial slit collapses to a point");
      double theta = std::remainder(mean, kTwoPi);
      data.radial.push_back({theta, std::exp(umin), std::exp(umax), pmin, pmax});
      data.radial_extrema.push_back(static_cast<int>(roots.size()));
    } else {
      throw DegenerateSlit("slit data requires a circular or radial map");
    }
  }
  return data;
}

SlitData extract_slit_data(std::shared_ptr<const PrincipalPair> pair) {
  auto P = build_slit_map(pair, SlitKind::circular);
  auto Q = build_slit_map(pair, SlitKind::radial);
  SlitData data = extract_slit_data(P);
  SlitData qdata = extract_slit_data(Q);
  data.radial = std::move(qdata.radial);
  data.radial_extrema = std::move(qdata.radial_extrema);
  return data;
}

bool slits_interleaved(const SlitData& data, int curve) {
  if (curve >= static_cast<int>(data.circular.size()) ||
      curve >= static_cast<int>(data.radial.size()))
    return false;
  struct Pt {
    double th;
    int type;  // 0 = arg-P extremum, 1 = log|Q| extremum
  };
  std::vector<Pt> pts{{data.circular[curve].pre1, 0},
                      {data.circular[curve].pre2, 0},
                      {data.radial[curve].pre1, 1},
                      {data.radial[curve].pre2, 1}};
  for (auto& p : pts) p.th = std::fmod(p.th + kTwoPi, kTwoPi);
  std::sort(pts.begin(), pts.end(), [](const Pt& x, const Pt& y) { return x.th < y.th; });
  for (int i = 0; i < 4; ++i)
    if (pts[i].type == pts[(i + 1) % 4].type) return false;
  return true;
}

cplx eval_F(const PrincipalPair& pair, cplx z) {
  const cplx a = pair.a();
  double band = 5.0 * pair.grid->max_spacing();
  if (std::abs(z - a) < 1e-9) {
    // F has a removable singularity at a; recover the value by the mean over
    // a small probe circle (mean value property of the analytic F).
    double r = 0.25 * std::min(pair.grid->distance_to_boundary(a) - band,
                               std::abs(a - pair.b()));
    cplx acc(0);
    const int M = 16;
    for (int k = 0; k < M; ++k) {
      cplx zz = a + r * std::exp(cplx(0, kTwoPi * k / M));
      acc += eval_F(pair, zz);
    }
    return acc / double(M);
  }
  cplx pz = pair.p.grad_z_unchecked(z);
  cplx qz = pair.q.grad_z_unchecked(z);
  if (std::abs(pz) < 1e-12 * (1.0 + std::abs(qz)))
    throw PoleOfF("dp/dz vanishes at the evaluation point");
  return qz / pz;
}

std::vector<std::vector<cplx>> boundary_F(const PrincipalPair& pair) {
  std::vector<std::vector<cplx>> out(pair.grid->curves.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j].resize(pair.grid->N);
    for (int i = 0; i < pair.grid->N; ++i) {
      cplx pz = pair.p_trace.dz[j][i];
      if (std::abs(pz) < 1e-14) throw PoleOfF("boundary node hits a pole of F");
      out[j][i] = pair.q_trace.dz[j][i] / pz;
    }
  }
  return out;
}

double e_log_area(const PrincipalPair& pair) {
  double acc = 0;
  for (std::size_t j = 0; j < pair.grid->curves.size(); ++j)
    for (int i = 0; i < pair.grid->N; ++i) {
      double hval = 0.5 * (pair.p_trace.value[j][i] + pair.q_trace.value[j][i]);
      double hdn = 0.5 * (pair.p_trace.dn[j][i] + pair.q_trace.dn[j][i]);
      acc += hval * hdn * pair.grid->curves[j].w[i];
    }
  return -acc;
}

ConvexityReport convexity_check(const PrincipalPair& pair, int curve, int samples) {
  auto self = std::make_shared<PrincipalPair>(pair);
  ConformalSlitMap H(self, SlitKind::combinedH);
  const auto& img = H.boundary_image(curve);
  TrigInterp xi(img.logmod), yi(img.arg);
  double osgn = pair.grid->curves[curve].orient_sign;
  ConvexityReport rep;
  rep.max_curvature = -1e300;
  rep.min_curvature = 1e300;
  for (int k = 0; k < samples; ++k) {
    double th = kTwoPi * k / samples;
    double x1 = xi.deriv(th, 1), x2 = xi.deriv(th, 2);
    double y1 = yi.deriv(th, 1), y2 = yi.deriv(th, 2);
    double speed2 = x1 * x1 + y1 * y1;
    double kappa = osgn * (x1 * y2 - y1 * x2) / std::pow(speed2, 1.5);
    rep.max_curvature = std::max(rep.max_curvature, kappa);
    rep.min_curvature = std::min(rep.min_curvature, kappa);
  }
  rep.one_signed = rep.max_curvature < 0 || rep.min_curvature > 0;
  return rep;
}

std::vector<cplx> h_boundary_samples(const PrincipalPair& pair, int curve, int samples) {
  auto self = std::make_shared<PrincipalPair>(pair);
  ConformalSlitMap H(self, SlitKind::combinedH);
  const auto& img = H.boundary_image(curve);
  TrigInterp xi(img.logmod), yi(img.arg);
  std::vector<cplx> out(samples);
  for (int k = 0; k < samples; ++k) {
    double th = kTwoPi * k / samples;
    out[k] = std::exp(cplx(xi.eval(th), yi.eval(th)));
  }
  return out;
}

int h_preimage_count(const PrincipalPair& pair, cplx w, int samples) {
  int count = 1;  // simple pole at a
  for (std::size_t j = 0; j < pair.grid->curves.size(); ++j) {
    auto image = h_boundary_samples(pair, static_cast<int>(j), samples);
    double total = 0;
    for (int k = 0; k < samples; ++k) {
      cplx c0 = image[k] - w;
      cplx c1 = image[(k + 1) % samples] - w;
      total += std::arg(c1 / c0);
    }
    count += static_cast<int>(pair.grid->curves[j].orient_sign) *
             static_cast<int>(std::lround(total / kTwoPi));
  }
  return count;
}

bool polyline_simple(const std::vector<cplx>& pts) {
  const int n = static_cast<int>(pts.size());
  auto seg_cross = [](cplx a, cplx b, cplx c, cplx d) {
    auto orient = [](cplx p, cplx q, cplx r) {
      double v = ((q - p) * std::conj(r - p)).imag();
      return v > 0 ? 1 : (v < 0 ? -1 : 0);
    };
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent around the wrap
      if (seg_cross(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]))
        return false;
    }
  }
  return true;
}

}  // namespace hsl
