#include "hsl/family.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

namespace hsl {

namespace {

cplx coeff_value(const DomainFamily::Coeff& c, cplx t) {
  return cplx(c.re->eval(t, 0).real(), c.im->eval(t, 0).real());
}

cplx coeff_dtbar(const DomainFamily::Coeff& c, cplx t) {
  // d/d tbar = (1/2)(d/dt1 + i d/dt2) applied to re + i im.
  Jet2 jr = c.re->jet(t, 0), ji = c.im->jet(t, 0);
  cplx re_tb = 0.5 * (jr.g[0] + cplx(0, 1) * jr.g[1]);
  cplx im_tb = 0.5 * (ji.g[0] + cplx(0, 1) * ji.g[1]);
  return re_tb + cplx(0, 1) * im_tb;
}

}  // namespace

MarkedDomain DomainFamily::domain_at(cplx t) const {
  std::optional<SmoothCurve> outer;
  std::vector<SmoothCurve> holes;
  for (const auto& fc : curves) {
    std::vector<FourierCoeff> coeffs;
    for (const auto& c : fc.coeffs) coeffs.push_back({c.k, coeff_value(c, t)});
    auto curve = build_curve(std::move(coeffs),
                             fc.hole ? Orientation::negative : Orientation::positive);
    if (fc.hole)
      holes.push_back(std::move(curve));
    else
      outer = std::move(curve);
  }
  if (!outer) throw InvalidDomain("family needs one non-hole curve");
  return MarkedDomain::create(std::move(*outer), std::move(holes), section_a(t),
                              section_b(t));
}

cplx DomainFamily::boundary_point(cplx t, int curve, double theta) const {
  cplx acc(0);
  for (const auto& c : curves[curve].coeffs)
    acc += coeff_value(c, t) * std::exp(cplx(0, c.k * theta));
  return acc;
}

cplx DomainFamily::boundary_dwdtbar(cplx t, int curve, double theta) const {
  cplx acc(0);
  for (const auto& c : curves[curve].coeffs)
    acc += coeff_dtbar(c, t) * std::exp(cplx(0, c.k * theta));
  return acc;
}

DomainFamily DomainFamily::pole_normalized() const {
  DomainFamily out;
  out.radius = radius;
  out.phi = Expr::shift_z(phi, a);
  out.a = Expr::constant(0.0);
  out.b = Expr::sub(b, a);
  for (const auto& fc : curves) {
    Curve shifted = fc;
    bool has_zero = false;
    for (auto& c : shifted.coeffs) {
      if (c.k == 0) {
        c.re = Expr::sub(c.re, Expr::re_of(a));
        c.im = Expr::sub(c.im, Expr::im_of(a));
        has_zero = true;
      }
    }
    if (!has_zero) {
      auto zero = Expr::constant(0.0);
      shifted.coeffs.push_back(
          {0, Expr::sub(zero, Expr::re_of(a)), Expr::sub(zero, Expr::im_of(a))});
    }
    out.curves.push_back(std::move(shifted));
  }
  return out;
}

void DomainFamily::validate(double tmax, int t_samples, int theta_samples) const {
  std::vector<cplx> ts{cplx(0, 0)};
  for (int k = 0; k < t_samples; ++k)
    ts.push_back(tmax * std::exp(cplx(0, kTwoPi * k / t_samples)));
  for (cplx t : ts) {
    if (std::abs(t) >= radius)
      throw StencilOutOfDisk("validation sample outside the parameter disk");
    cplx a_val = section_a(t), b_val = section_b(t);
    if (std::abs(a_val - b_val) < 1e-12)
      throw InvalidDomain("family sections collide");
    MarkedDomain md = domain_at(t);  // also runs domain validation for a, b
    for (int j = 0; j < static_cast<int>(curves.size()); ++j)
      for (int m = 0; m < theta_samples; ++m) {
        double th = kTwoPi * m / theta_samples;
        cplx z = boundary_point(t, j, th);
        cplx val = phi->eval(t, z);
        if (std::abs(val) > 1e-8)
          throw InvalidDomain("defining function does not vanish on the boundary");
        Wirtinger w = wirtinger(phi->jet(t, z));
        if (std::abs(w.d_z) < 1e-10)
          throw BoundaryNotSmooth("phi_z vanishes on the boundary");
      }
    (void)md;
  }
}

LeviPoint eval_levi(const DomainFamily& family, cplx t, cplx z) {
  Wirtinger w = wirtinger(family.phi->jet(t, z));
  double az = std::abs(w.d_z);
  if (az < 1e-10) throw BoundaryNotSmooth("phi_z vanishes at the boundary point");
  LeviPoint out;
  out.k1 = w.d_t / az;
  cplx num = w.d_ttb * (az * az) - 2.0 * (w.d_tbz * w.d_t * w.d_zb).real() +
             std::norm(w.d_t) * w.d_zzb;
  cplx k2 = num / (az * az * az);
  if (std::abs(k2.imag()) > 1e-9 * (1.0 + std::abs(k2.real())))
    throw BoundaryNotSmooth("Levi curvature has a nonreal residue");
  out.k2 = k2.real();
  return out;
}

cplx eval_k1(const DomainFamily& family, cplx t, int curve, double theta) {
  return eval_levi(family, t, family.boundary_point(t, curve, theta)).k1;
}

double eval_k2(const DomainFamily& family, cplx t, int curve, double theta) {
  return eval_levi(family, t, family.boundary_point(t, curve, theta)).k2;
}

namespace {

struct SolvedFamilyPoint {
  std::shared_ptr<const MarkedDomain> domain;
  PrincipalPair pair;
};

SolvedFamilyPoint solve_point(const DomainFamily& fam, cplx t, int N) {
  SolvedFamilyPoint sp;
  sp.domain = std::make_shared<MarkedDomain>(fam.domain_at(t));
  sp.pair = compute_principal_pair(sp.domain, N);
  return sp;
}

// Boundary integrals (1/pi) Int k1 |p_z|^2 ds and the q companion.
struct FirstVariationTerms {
  cplx integral_p;
  cplx integral_q;
};

FirstVariationTerms boundary_first_variation(const DomainFamily& fam, cplx t,
                                             const PrincipalPair& pair) {
  FirstVariationTerms out{};
  const auto& grid = *pair.grid;
  for (std::size_t j = 0; j < grid.curves.size(); ++j)
    for (int i = 0; i < grid.N; ++i) {
      cplx k1 = eval_k1(fam, t, static_cast<int>(j), grid.curves[j].theta[i]);
      double wq = grid.curves[j].w[i];
      out.integral_p += k1 * std::norm(pair.p_trace.dz[j][i]) * wq;
      out.integral_q += k1 * std::norm(pair.q_trace.dz[j][i]) * wq;
    }
  out.integral_p /= kPi;
  out.integral_q /= kPi;
  return out;
}

double quantity_of(const PrincipalPair& pair, VariedQuantity which) {
  switch (which) {
    case VariedQuantity::alpha:
      return pair.alpha;
    case VariedQuantity::beta:
      return pair.beta;
    case VariedQuantity::span:
      return pair.alpha - pair.beta;
  }
  return 0;
}

}  // namespace

cplx first_variation(const DomainFamily& family, cplx t, VariedQuantity which,
                     const VariationOptions& opt) {
  DomainFamily fam = family.pole_normalized();
  auto sp = solve_point(fam, t, opt.N);
  auto terms = boundary_first_variation(fam, t, sp.pair);
  cplx xi_prime = fam.section_b_prime(t);
  switch (which) {
    case VariedQuantity::alpha:
      return terms.integral_p + 2.0 * sp.pair.dh_xi_dz * xi_prime;
    case VariedQuantity::beta:
      return -terms.integral_q + 2.0 * sp.pair.dmh_xi_dz * xi_prime;
    case VariedQuantity::span:
      return terms.integral_p + terms.integral_q;
  }
  return {};
}

cplx fd_derivative(const DomainFamily& family, cplx t, VariedQuantity which,
                   FdOrder order, const VariationOptions& opt) {
  DomainFamily fam = family.pole_normalized();
  auto value = [&](cplx tt) {
    return quantity_of(solve_point(fam, tt, opt.N).pair, which);
  };
  double h = opt.h_t;
  if (std::abs(t) + h > fam.radius)
    throw StencilOutOfDisk("finite-difference stencil leaves the parameter disk");

  if (order == FdOrder::dt) {
    auto D = [&](double hh) {
      double dx = (value(t + hh) - value(t - hh)) / (2.0 * hh);
      double dy = (value(t + cplx(0, hh)) - value(t - cplx(0, hh))) / (2.0 * hh);
      return 0.5 * cplx(dx, -dy);
    };
    cplx d1 = D(h), d2 = D(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
  }
  double v0 = value(t);
  auto L = [&](double hh) {
    return (value(t + hh) + value(t - hh) + value(t + cplx(0, hh)) +
            value(t - cplx(0, hh)) - 4.0 * v0) /
           (4.0 * hh * hh);
  };
  double l1 = L(h), l2 = L(0.5 * h);
  return cplx((4.0 * l2 - l1) / 3.0, 0);
}

SpanVariationComparison compare_span_first_variation(const DomainFamily& family,
                                                     cplx t,
                                                     const VariationOptions& opt) {
  DomainFamily fam = family.pole_normalized();
  auto sp = solve_point(fam, t, opt.N);
  auto terms = boundary_first_variation(fam, t, sp.pair);
  cplx xi_prime = fam.section_b_prime(t);
  SpanVariationComparison cmp;
  cmp.bare = terms.integral_p + terms.integral_q;
  cmp.with_sections =
      cmp.bare + 2.0 * (sp.pair.dh_xi_dz - sp.pair.dmh_xi_dz) * xi_prime;
  cmp.fd = fd_derivative(family, t, VariedQuantity::span, FdOrder::dt, opt);
  return cmp;
}

SecondVariationBreakdown second_variation_span(const DomainFamily& family, cplx t,
                                               const VariationOptions& opt) {
  DomainFamily fam = family.pole_normalized();
  const double h = opt.h_t;
  if (std::abs(t) + h > fam.radius)
    throw StencilOutOfDisk("t-stencil leaves the parameter disk");

  // Stencil solves: center, +-h, +-ih. The solves run at twice the caller's
  // resolution: the t-differencing divides evaluation noise by h_t, and the
  // finer grid keeps the near-boundary strip (and its error) narrow.
  const int N2 = 2 * opt.N;
  std::array<cplx, 5> ts{t, t + h, t - h, t + cplx(0, h), t - cplx(0, h)};
  std::array<SolvedFamilyPoint, 5> sps;
  parallel_for(5, [&](std::size_t k) { sps[k] = solve_point(fam, ts[k], N2); });
  const auto& pair0 = sps[0].pair;
  const auto& grid0 = *pair0.grid;

  SecondVariationBreakdown out;
  for (std::size_t j = 0; j < grid0.curves.size(); ++j)
    for (int i = 0; i < grid0.N; ++i) {
      double k2 = eval_k2(fam, t, static_cast<int>(j), grid0.curves[j].theta[i]);
      out.boundary_term += k2 *
                           (std::norm(pair0.p_trace.dz[j][i]) +
                            std::norm(pair0.q_trace.dz[j][i])) *
                           grid0.curves[j].w[i];
    }
  out.boundary_term /= kPi;

  // Mixed derivative d^2/d tbar dz at the boundary nodes (fixed theta):
  // d/dtbar of the traced gradient minus the advection by the moving node.
  const double band = 5.0 * grid0.max_spacing();
  // The mixed derivative M = d^2 p / d tbar dz is holomorphic in z, so the
  // strip between the boundary and the interior evaluation region is covered
  // by a first-order Taylor expansion of M around the nearest node.
  struct BandTaylor {
    std::vector<std::vector<cplx>> m0;  // M at the nodes
    std::vector<std::vector<cplx>> m1;  // dM/dz at the nodes
  };
  auto band_values = [&](bool use_p) {
    auto dz_at = [&](int k, std::size_t j, int i) {
      const auto& tr = use_p ? sps[k].pair.p_trace : sps[k].pair.q_trace;
      return tr.dz[j][i];
    };
    std::array<std::vector<std::vector<cplx>>, 5> seconds;
    parallel_for(5, [&](std::size_t k) {
      seconds[k] = boundary_second_derivative(use_p ? sps[k].pair.p : sps[k].pair.q);
    });
    auto third = boundary_third_derivative(use_p ? pair0.p : pair0.q);
    BandTaylor bt;
    bt.m0.resize(grid0.curves.size());
    bt.m1.resize(grid0.curves.size());
    for (std::size_t j = 0; j < grid0.curves.size(); ++j) {
      bt.m0[j].resize(grid0.N);
      bt.m1[j].resize(grid0.N);
      for (int i = 0; i < grid0.N; ++i) {
        cplx dwdtb =
            fam.boundary_dwdtbar(t, static_cast<int>(j), grid0.curves[j].theta[i]);
        cplx dx = (dz_at(1, j, i) - dz_at(2, j, i)) / (2.0 * h);
        cplx dy = (dz_at(3, j, i) - dz_at(4, j, i)) / (2.0 * h);
        bt.m0[j][i] = 0.5 * (dx + cplx(0, 1) * dy) - seconds[0][j][i] * dwdtb;
        cplx gx = (seconds[1][j][i] - seconds[2][j][i]) / (2.0 * h);
        cplx gy = (seconds[3][j][i] - seconds[4][j][i]) / (2.0 * h);
        bt.m1[j][i] = 0.5 * (gx + cplx(0, 1) * gy) - third[j][i] * dwdtb;
      }
    }
    return bt;
  };
  auto band_p = band_values(true);
  auto band_q = band_values(false);

  auto mixed_interior = [&](cplx z, bool use_p) {
    auto grad = [&](int k) {
      const auto& f = use_p ? sps[k].pair.p : sps[k].pair.q;
      return f.grad_z_unchecked(z);
    };
    cplx dx = (grad(1) - grad(2)) / (2.0 * h);
    cplx dy = (grad(3) - grad(4)) / (2.0 * h);
    return 0.5 * (dx + cplx(0, 1) * dy);
  };

  const MarkedDomain& md0 = *sps[0].domain;
  auto is_inside = [&](cplx z, int samples) {
    int w = md0.outer().winding(z, samples);
    for (const auto& hole : md0.holes()) w -= hole.winding(z, samples);
    return w == 1;
  };

  // Tensor-product cell quadrature on the bounding box, boundary cells
  // refined once; points in the exclusion band take the boundary-limit value
  // of the integrand at the nearest node.
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (int m = 0; m < 512; ++m) {
    cplx z = md0.outer().point(kTwoPi * m / 512);
    x0 = std::min(x0, z.real());
    x1 = std::max(x1, z.real());
    y0 = std::min(y0, z.imag());
    y1 = std::max(y1, z.imag());
  }
  double ha = grid0.max_spacing();
  int nx = static_cast<int>(std::ceil((x1 - x0) / ha));
  int ny = static_cast<int>(std::ceil((y1 - y0) / ha));

  auto cell_value = [&](cplx c) -> double {
    double dist = grid0.distance_to_boundary(c);
    if (dist >= band) {
      if (!is_inside(c, 512)) return 0.0;
      return std::norm(mixed_interior(c, true)) + std::norm(mixed_interior(c, false));
    }
    if (!is_inside(c, 2048)) return 0.0;
    auto [j, i] = grid0.nearest_node(c);
    cplx d = c - grid0.curves[j].z[i];
    return std::norm(band_p.m0[j][i] + band_p.m1[j][i] * d) +
           std::norm(band_q.m0[j][i] + band_q.m1[j][i] * d);
  };

  std::vector<double> rowsum(ny, 0.0);
  parallel_for(ny, [&](std::size_t iy) {
    double acc = 0;
    for (int ix = 0; ix < nx; ++ix) {
      cplx c(x0 + (ix + 0.5) * ha, y0 + (iy + 0.5) * ha);
      double dist = grid0.distance_to_boundary(c);
      if (dist > 3.0 * ha && dist >= band && !is_inside(c, 512)) continue;
      if (dist < 3.0 * ha) {
        // boundary cell: one refinement pass, a second for the subcells that
        // still straddle the curve
        for (int sx = 0; sx < 2; ++sx)
          for (int sy = 0; sy < 2; ++sy) {
            cplx sc = c + 0.25 * ha * cplx(sx == 0 ? -1 : 1, sy == 0 ? -1 : 1);
            if (grid0.distance_to_boundary(sc) < 1.0 * ha) {
              for (int ux = 0; ux < 2; ++ux)
                for (int uy = 0; uy < 2; ++uy) {
                  cplx uc = sc + 0.125 * ha * cplx(ux == 0 ? -1 : 1, uy == 0 ? -1 : 1);
                  acc += 0.0625 * ha * ha * cell_value(uc);
                }
            } else {
              acc += 0.25 * ha * ha * cell_value(sc);
            }
          }
      } else {
        acc += ha * ha * cell_value(c);
      }
    }
    rowsum[iy] = acc;
  });
  double area_integral = 0;
  for (double v : rowsum) area_integral += v;

  out.area_term = 4.0 / kPi * area_integral;
  out.total = out.boundary_term + out.area_term;
  return out;
}

VariationReport subharmonicity_scan(const DomainFamily& family, const GridSpec& grid,
                                    const VariationOptions& opt) {
  DomainFamily fam = family.pole_normalized();
  const int n = grid.n;
  const double h = grid.step();
  const int ne = n + 2;

  VariationReport rep;
  rep.grid = grid;
  std::vector<double> espan(ne * ne, 0), ealpha(ne * ne, 0), ebeta(ne * ne, 0);
  std::vector<int> estatus(ne * ne, 0);

  parallel_for(static_cast<std::size_t>(ne) * ne, [&](std::size_t idx) {
    int iy = static_cast<int>(idx) / ne, ix = static_cast<int>(idx) % ne;
    cplx t = grid.center + cplx(-grid.radius + (ix - 1) * h, -grid.radius + (iy - 1) * h);
    try {
      auto sp = solve_point(fam, t, opt.N);
      espan[idx] = sp.pair.alpha - sp.pair.beta;
      ealpha[idx] = sp.pair.alpha;
      ebeta[idx] = sp.pair.beta;
    } catch (const std::exception&) {
      estatus[idx] = 1;
    }
  });

  double span_max = 0;
  rep.min_k2 = 1e300;
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      int e = (iy + 1) * ne + (ix + 1);
      cplx t = grid.point(ix, iy);
      rep.t.push_back(t);
      rep.span.push_back(espan[e]);
      rep.alpha.push_back(ealpha[e]);
      rep.beta.push_back(ebeta[e]);
      int bad = estatus[e] + estatus[e - 1] + estatus[e + 1] + estatus[e - ne] +
                estatus[e + ne];
      rep.status.push_back(bad ? 1 : 0);
      auto lap = [&](const std::vector<double>& f) {
        return (f[e - 1] + f[e + 1] + f[e - ne] + f[e + ne] - 4.0 * f[e]) /
               (4.0 * h * h);
      };
      rep.lap_span.push_back(bad ? 0.0 : lap(espan));
      rep.lap_beta.push_back(bad ? 0.0 : lap(ebeta));
      if (!bad) span_max = std::max(span_max, std::abs(espan[e]));

      // Levi curvature sampled over the boundary of the total space.
      for (int j = 0; j < static_cast<int>(fam.curves.size()); ++j)
        for (int m = 0; m < 64; ++m)
          rep.min_k2 = std::min(rep.min_k2, eval_k2(fam, t, j, kTwoPi * m / 64));
    }

  rep.tol = 1e-5 * std::max(1.0, span_max);
  double min_lap_span = 1e300, max_lap_beta = -1e300;
  for (std::size_t i = 0; i < rep.lap_span.size(); ++i) {
    if (rep.status[i]) continue;
    min_lap_span = std::min(min_lap_span, rep.lap_span[i]);
    max_lap_beta = std::max(max_lap_beta, rep.lap_beta[i]);
  }
  rep.pseudoconvex = rep.min_k2 >= -1e-8;
  rep.span_subharmonic = min_lap_span >= -rep.tol;
  rep.beta_superharmonic = max_lap_beta <= rep.tol;
  return rep;
}

LogCoshReport logcosh_subharmonicity(const DomainFamily& family, const GridSpec& grid,
                                     const VariationOptions& opt) {
  const int n = grid.n;
  const double h = grid.step();
  const int ne = n + 2;

  LogCoshReport rep;
  rep.grid = grid;
  std::vector<double> edelta(ne * ne, 0);
  std::vector<int> estatus(ne * ne, 0);

  parallel_for(static_cast<std::size_t>(ne) * ne, [&](std::size_t idx) {
    int iy = static_cast<int>(idx) / ne, ix = static_cast<int>(idx) % ne;
    cplx t = grid.center + cplx(-grid.radius + (ix - 1) * h, -grid.radius + (iy - 1) * h);
    try {
      MarkedDomain md = family.domain_at(t);
      if (md.nu() != 1)
        throw NotSimplyConnected("log cosh d needs simply connected fibers");
      double d = poincare_distance(md, opt.N);
      edelta[idx] = std::log(std::cosh(d));
    } catch (const NotSimplyConnected&) {
      throw;
    } catch (const std::exception&) {
      estatus[idx] = 1;
    }
  });

  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      int e = (iy + 1) * ne + (ix + 1);
      rep.t.push_back(grid.point(ix, iy));
      rep.delta.push_back(edelta[e]);
      int bad = estatus[e] + estatus[e - 1] + estatus[e + 1] + estatus[e - ne] +
                estatus[e + ne];
      rep.status.push_back(bad ? 1 : 0);
      rep.lap_delta.push_back(
          bad ? 0.0
              : (edelta[e - 1] + edelta[e + 1] + edelta[e - ne] + edelta[e + ne] -
                 4.0 * edelta[e]) /
                    (4.0 * h * h));
    }

  double dmax = 0;
  for (std::size_t i = 0; i < rep.delta.size(); ++i)
    if (!rep.status[i]) dmax = std::max(dmax, std::abs(rep.delta[i]));
  rep.tol = 1e-5 * std::max(1.0, dmax);
  double min_lap = 1e300;
  for (std::size_t i = 0; i < rep.lap_delta.size(); ++i)
    if (!rep.status[i]) min_lap = std::min(min_lap, rep.lap_delta[i]);
  rep.subharmonic = min_lap >= -rep.tol;
  return rep;
}

SFunctionLineReport sfunction_psh_check(const MarkedDomain& domain, cplx xi0, cplx d0,
                                        cplx eta0, cplx d1, const GridSpec& grid,
                                        int N) {
  const int n = grid.n;
  const double h = grid.step();
  const int ne = n + 2;

  auto probe = sample_boundary(std::make_shared<MarkedDomain>(domain), N);
  double refuse = 10.0 * probe->max_spacing();

  SFunctionLineReport rep;
  std::vector<double> espan(ne * ne, 0);
  std::vector<int> estatus(ne * ne, 0);
  std::vector<cplx> ets(ne * ne);
  for (int iy = 0; iy < ne; ++iy)
    for (int ix = 0; ix < ne; ++ix) {
      cplx u = grid.center + cplx(-grid.radius + (ix - 1) * h, -grid.radius + (iy - 1) * h);
      ets[iy * ne + ix] = u;
      if (std::abs((xi0 + u * d0) - (eta0 + u * d1)) < refuse)
        throw LineHitsDiagonal("line grid enters the diagonal band");
    }

  parallel_for(static_cast<std::size_t>(ne) * ne, [&](std::size_t idx) {
    cplx u = ets[idx];
    try {
      espan[idx] =
          harmonic_span(domain.with_points(xi0 + u * d0, eta0 + u * d1), N).s;
    } catch (const std::exception&) {
      estatus[idx] = 1;
    }
  });

  rep.min_lap = 1e300;
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      int e = (iy + 1) * ne + (ix + 1);
      rep.u.push_back(ets[e]);
      rep.span.push_back(espan[e]);
      int bad = estatus[e] + estatus[e - 1] + estatus[e + 1] + estatus[e - ne] +
                estatus[e + ne];
      rep.status.push_back(bad ? 1 : 0);
      double lap = bad ? std::nan("")
                       : (espan[e - 1] + espan[e + 1] + espan[e - ne] +
                          espan[e + ne] - 4.0 * espan[e]) /
                             (4.0 * h * h);
      rep.lap.push_back(lap);
      if (!bad) rep.min_lap = std::min(rep.min_lap, lap);
    }
  rep.strictly_subharmonic = rep.min_lap >= 1e-8;
  return rep;
}

RigidityReport rigidity_check(const DomainFamily& family, const GridSpec& grid,
                              const VariationOptions& opt) {
  DomainFamily fam = family.pole_normalized();
  const int n = grid.n;

  struct Row {
    std::vector<cplx> endpoints;  // A~_j(t)
    double span = 0;
    bool ok = false;
  };
  std::vector<Row> rows(static_cast<std::size_t>(n) * n);
  parallel_for(rows.size(), [&](std::size_t idx) {
    int iy = static_cast<int>(idx) / n, ix = static_cast<int>(idx) % n;
    cplx t = grid.point(ix, iy);
    try {
      auto sp = solve_point(fam, t, opt.N);
      auto pair = std::make_shared<PrincipalPair>(sp.pair);
      auto data = extract_slit_data(build_slit_map(pair, SlitKind::circular));
      cplx ref = std::polar(data.circular[0].r, data.circular[0].theta1);
      Row row;
      for (const auto& s : data.circular)
        row.endpoints.push_back(std::polar(s.r, s.theta1) / ref);
      row.span = sp.pair.alpha - sp.pair.beta;
      row.ok = true;
      rows[idx] = std::move(row);
    } catch (const std::exception&) {
    }
  });

  // Reference values at the grid center (n odd puts it on a grid point).
  const Row& center = rows[(n / 2) * n + (n / 2)];
  RigidityReport rep;
  if (!center.ok) return rep;
  for (const auto& row : rows) {
    if (!row.ok) continue;
    for (std::size_t j = 0; j < row.endpoints.size(); ++j)
      rep.max_slit_deviation = std::max(
          rep.max_slit_deviation, std::abs(row.endpoints[j] - center.endpoints[j]));
    rep.max_span_deviation =
        std::max(rep.max_span_deviation, std::abs(row.span - center.span));
  }
  rep.trivial_candidate =
      rep.max_slit_deviation <= 1e-5 && rep.max_span_deviation <= 1e-5;
  return rep;
}

DomainFamily make_product_family(cplx b) {
  DomainFamily fam;
  fam.phi = Expr::parse("abs2(z) - 1");
  fam.curves.push_back({{{1, Expr::constant(1.0), Expr::constant(0.0)}}, false});
  fam.a = Expr::constant(0.0);
  fam.b = Expr::parse(fmt_g9(b.real()));
  fam.radius = 1.0;
  return fam;
}

DomainFamily make_hartogs_family(cplx b) {
  DomainFamily fam;
  fam.phi = Expr::parse("0.5*log(abs2(z)) - 0.5*(t + conj(t))");
  fam.curves.push_back(
      {{{1, Expr::parse("exp(0.5*(t + conj(t)))"), Expr::constant(0.0)}}, false});
  fam.a = Expr::constant(0.0);
  fam.b = Expr::parse(fmt_g9(b.real()));
  fam.radius = 1.0;
  return fam;
}

DomainFamily make_translation_family(cplx offset) {
  DomainFamily fam;
  fam.phi = Expr::parse("abs2(z - t) - 1");
  fam.curves.push_back({{{0, Expr::parse("re(t)"), Expr::parse("im(t)")},
                         {1, Expr::constant(1.0), Expr::constant(0.0)}},
                        false});
  fam.a = Expr::parse("t");
  fam.b = Expr::parse("t + " + fmt_g9(offset.real()));
  fam.radius = 1.0;
  return fam;
}

DomainFamily make_concave_family(cplx b) {
  DomainFamily fam;
  fam.phi = Expr::parse("abs2(z) - 1 - abs2(t)");
  fam.curves.push_back(
      {{{1, Expr::parse("exp(0.5*log(1 + abs2(t)))"), Expr::constant(0.0)}}, false});
  fam.a = Expr::constant(0.0);
  fam.b = Expr::parse(fmt_g9(b.real()));
  fam.radius = 1.0;
  return fam;
}

DomainFamily make_moving_section_family(cplx b0, cplx rate) {
  DomainFamily fam = make_product_family(b0);
  fam.b = Expr::parse(fmt_g9(b0.real()) + " + " + fmt_g9(rate.real()) + "*t");
  return fam;
}

}  // namespace hsl
