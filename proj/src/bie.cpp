#include "hsl/bie.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace hsl {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

Side domain_side(int curve_index) {
  // Interior of the domain is the enclosed (left) side of the outer curve and
  // the exterior (right) side of each hole curve.
  return curve_index == 0 ? Side::left : Side::right;
}

double estimate_condition(const MatrixXd& A, const Eigen::PartialPivLU<MatrixXd>& lu) {
  const int n = static_cast<int>(A.rows());
  VectorXd v = VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  double smax = 1;
  for (int it = 0; it < 4; ++it) {
    VectorXd w = A.transpose() * (A * v);
    double nw = w.norm();
    if (nw == 0) break;
    smax = std::sqrt(nw);
    v = w / nw;
  }
  // One inverse-power loop for the smallest singular value.
  VectorXd u(n);
  for (int i = 0; i < n; ++i) u(i) = std::cos(1.0 + 0.7 * i);
  u.normalize();
  double smin_inv = 1;
  for (int it = 0; it < 4; ++it) {
    VectorXd w = lu.solve(lu.adjoint().solve(u));
    double nw = w.norm();
    if (nw == 0) break;
    smin_inv = std::sqrt(nw);
    u = w / nw;
  }
  return smax * smin_inv;
}

VectorXd checked_solve(const MatrixXd& A, const VectorXd& rhs) {
  Eigen::PartialPivLU<MatrixXd> lu(A);
  double cond = estimate_condition(A, lu);
  if (!std::isfinite(cond) || cond > 1e12)
    throw SolveFailure("boundary system numerically singular (cond ~ " +
                       std::to_string(cond) + ")");
  return lu.solve(rhs);
}

// Double-layer value kernel entry (real part of the Cauchy kernel) carrying
// the orientation sign and the trapezoidal weight, excluding the 1/2 jump.
double dl_entry(const BoundaryGrid& grid, int jc, int ji, int kc, int km) {
  const auto& src = grid.curves[kc];
  double wq = kTwoPi / grid.N;
  if (jc == kc && ji == km) {
    cplx diag = src.d2z[ji] / (2.0 * src.dz[ji]);
    return src.orient_sign * wq / kTwoPi * diag.imag();
  }
  cplx x = grid.curves[jc].z[ji];
  cplx num = src.dz[km] / (src.z[km] - x);
  return src.orient_sign * wq / kTwoPi * num.imag();
}

// Neumann kernel entry d/dn_x log|x - w| against arclength, with the
// curvature diagonal limit; excludes the -1/2 jump.
double neumann_entry(const BoundaryGrid& grid, int jc, int ji, int kc, int km) {
  const auto& src = grid.curves[kc];
  const auto& tgt = grid.curves[jc];
  double wq = kTwoPi / grid.N * std::abs(src.dz[km]);
  if (jc == kc && ji == km) {
    double kappa = (std::conj(src.dz[ji]) * src.d2z[ji]).imag() /
                   (2.0 * std::pow(std::abs(src.dz[ji]), 3));
    return src.orient_sign * kappa * wq / kTwoPi;
  }
  cplx x = tgt.z[ji];
  cplx diff = x - src.z[km];
  double k = (std::conj(tgt.normal[ji]) * diff).real() / std::norm(diff);
  return k * wq / kTwoPi;
}

cplx hole_interior_point(const SmoothCurve& hole) {
  cplx c = hole.enclosed_centroid();
  if (hole.winding(c) == 1) return c;
  for (int m = 0; m < 16; ++m) {
    double th = kTwoPi * m / 16;
    cplx n_into_hole = cplx(0, 1) * hole.d1(th) / std::abs(hole.d1(th));
    cplx p = hole.point(th) + 0.25 * hole.min_distance_to(c) * n_into_hole;
    if (hole.winding(p) == 1) return p;
  }
  throw InvalidDomain("could not find a point inside a hole");
}

}  // namespace

BoundaryData sample_data(const BoundaryGrid& grid,
                         const std::function<double(cplx)>& f) {
  BoundaryData out(grid.curves.size());
  for (std::size_t j = 0; j < grid.curves.size(); ++j) {
    out[j].resize(grid.N);
    for (int m = 0; m < grid.N; ++m) out[j][m] = f(grid.curves[j].z[m]);
  }
  return out;
}

double HarmonicField::singular_value(cplx z) const {
  double acc = 0;
  for (const auto& [p, s] : singular_) acc += s * std::log(std::abs(z - p));
  return acc;
}

cplx HarmonicField::singular_grad(cplx z) const {
  cplx acc(0);
  for (const auto& [p, s] : singular_) acc += s / (2.0 * (z - p));
  return acc;
}

double HarmonicField::near_boundary_band() const {
  return 5.0 * grid_->max_spacing();
}

double HarmonicField::layer_value(cplx z) const {
  if (kind_ == LayerKind::double_layer) {
    cplx f(0);
    for (std::size_t j = 0; j < grid_->curves.size(); ++j) {
      CurveCauchy cc(grid_->curves[j]);
      std::vector<cplx> mu(density_[j].begin(), density_[j].end());
      f += grid_->curves[j].orient_sign * cc.value(mu, z);
    }
    double acc = f.real();
    for (const auto& [p, a] : logs_) acc += a * std::log(std::abs(z - p));
    return acc;
  }
  // Single layer evaluated through the holomorphic completion of the
  // cumulative density (valid because per-curve charges vanish).
  cplx f(0);
  for (std::size_t j = 0; j < grid_->curves.size(); ++j) {
    CurveCauchy cc(grid_->curves[j]);
    std::vector<cplx> lam(cumulative_[j].begin(), cumulative_[j].end());
    f += cc.value(lam, z);
  }
  return (cplx(0, -1) * f).real();
}

cplx HarmonicField::layer_grad(cplx z) const {
  if (kind_ == LayerKind::double_layer) {
    cplx f(0);
    for (std::size_t j = 0; j < grid_->curves.size(); ++j) {
      CurveCauchy cc(grid_->curves[j]);
      std::vector<cplx> mu(density_[j].begin(), density_[j].end());
      f += grid_->curves[j].orient_sign * cc.derivative(mu, z);
    }
    cplx acc = 0.5 * f;
    for (const auto& [p, a] : logs_) acc += a / (2.0 * (z - p));
    return acc;
  }
  cplx f(0);
  for (std::size_t j = 0; j < grid_->curves.size(); ++j) {
    CurveCauchy cc(grid_->curves[j]);
    f += cc.value(cplx_density_[j], z);
  }
  return cplx(0, -0.5) * f;
}

double HarmonicField::value(cplx z) const {
  if (grid_->distance_to_boundary(z) < near_boundary_band())
    throw NearBoundary("evaluation point inside the near-boundary band");
  return gauge_ + singular_value(z) + layer_value(z);
}

cplx HarmonicField::grad_z(cplx z) const {
  if (grid_->distance_to_boundary(z) < near_boundary_band())
    throw NearBoundary("evaluation point inside the near-boundary band");
  return singular_grad(z) + layer_grad(z);
}

cplx HarmonicField::grad_z_unchecked(cplx z) const {
  return singular_grad(z) + layer_grad(z);
}

cplx HarmonicField::completion(cplx z) const {
  if (!logs_.empty())
    throw SolveFailure("field with completion log sources has no single-valued conjugate");
  cplx f(gauge_, 0);
  if (kind_ == LayerKind::double_layer) {
    for (std::size_t j = 0; j < grid_->curves.size(); ++j) {
      CurveCauchy cc(grid_->curves[j]);
      std::vector<cplx> mu(density_[j].begin(), density_[j].end());
      f += grid_->curves[j].orient_sign * cc.value(mu, z);
    }
  } else {
    for (std::size_t j = 0; j < grid_->curves.size(); ++j) {
      CurveCauchy cc(grid_->curves[j]);
      std::vector<cplx> lam(cumulative_[j].begin(), cumulative_[j].end());
      f += cplx(0, -1) * cc.value(lam, z);
    }
  }
  return f;
}

std::vector<cplx> HarmonicField::completion_boundary(int curve) const {
  if (!logs_.empty())
    throw SolveFailure("field with completion log sources has no single-valued conjugate");
  const int nc = static_cast<int>(grid_->curves.size());
  const int N = grid_->N;
  Side side = curve == 0 ? Side::left : Side::right;
  std::vector<cplx> out(N, cplx(gauge_, 0));
  for (int k = 0; k < nc; ++k) {
    CurveCauchy cc(grid_->curves[k]);
    if (kind_ == LayerKind::double_layer) {
      std::vector<cplx> mu(density_[k].begin(), density_[k].end());
      double osgn = grid_->curves[k].orient_sign;
      if (k == curve) {
        auto lim = cc.boundary_limits(mu, side);
        for (int i = 0; i < N; ++i) out[i] += osgn * lim[i];
      } else {
        for (int i = 0; i < N; ++i)
          out[i] += osgn * cc.value(mu, grid_->curves[curve].z[i]);
      }
    } else {
      std::vector<cplx> lam(cumulative_[k].begin(), cumulative_[k].end());
      if (k == curve) {
        auto lim = cc.boundary_limits(lam, side);
        for (int i = 0; i < N; ++i) out[i] += cplx(0, -1) * lim[i];
      } else {
        for (int i = 0; i < N; ++i)
          out[i] += cplx(0, -1) * cc.value(lam, grid_->curves[curve].z[i]);
      }
    }
  }
  return out;
}

HarmonicField HarmonicField::with_gauge(double gauge) const {
  HarmonicField f = *this;
  f.gauge_ = gauge;
  return f;
}

HarmonicField HarmonicField::with_singular(std::vector<PointSource> singular) const {
  HarmonicField f = *this;
  f.singular_ = std::move(singular);
  return f;
}

HarmonicField HarmonicField::with_density_shift(double delta) const {
  if (kind_ != LayerKind::double_layer)
    throw SolveFailure("density shift applies to double-layer fields only");
  HarmonicField f = *this;
  for (auto& mu : f.density_)
    for (auto& v : mu) v += delta;
  for (auto& c : f.constants_) c += delta;
  return f;
}

HarmonicField solve_dirichlet(std::shared_ptr<const BoundaryGrid> grid,
                              const BoundaryData& g) {
  const int nc = static_cast<int>(grid->curves.size());
  const int N = grid->N;
  const int M = nc * N;
  const int holes = nc - 1;
  MatrixXd A = MatrixXd::Zero(M + holes, M + holes);
  VectorXd rhs = VectorXd::Zero(M + holes);

  std::vector<cplx> hole_pts(holes);
  for (int h = 0; h < holes; ++h)
    hole_pts[h] = hole_interior_point(grid->domain->holes()[h]);

  for (int jc = 0; jc < nc; ++jc)
    for (int ji = 0; ji < N; ++ji) {
      int row = jc * N + ji;
      for (int kc = 0; kc < nc; ++kc)
        for (int km = 0; km < N; ++km)
          A(row, kc * N + km) = dl_entry(*grid, jc, ji, kc, km);
      A(row, row) += 0.5;
      for (int h = 0; h < holes; ++h)
        A(row, M + h) = std::log(std::abs(grid->curves[jc].z[ji] - hole_pts[h]));
      rhs(row) = g[jc][ji];
    }
  for (int h = 0; h < holes; ++h) {
    int row = M + h;
    for (int km = 0; km < N; ++km)
      A(row, (h + 1) * N + km) = grid->curves[h + 1].w[km];
  }

  VectorXd sol = checked_solve(A, rhs);

  HarmonicField f;
  f.grid_ = grid;
  f.kind_ = LayerKind::double_layer;
  f.density_.resize(nc);
  for (int jc = 0; jc < nc; ++jc) {
    f.density_[jc].assign(N, 0.0);
    for (int ji = 0; ji < N; ++ji) f.density_[jc][ji] = sol(jc * N + ji);
  }
  for (int h = 0; h < holes; ++h) f.logs_.push_back({hole_pts[h], sol(M + h)});
  return f;
}

HarmonicField solve_modified_dirichlet(std::shared_ptr<const BoundaryGrid> grid,
                                       const BoundaryData& g) {
  const int nc = static_cast<int>(grid->curves.size());
  const int N = grid->N;
  const int M = nc * N;
  MatrixXd A = MatrixXd::Zero(M + nc, M + nc);
  VectorXd rhs = VectorXd::Zero(M + nc);

  for (int jc = 0; jc < nc; ++jc)
    for (int ji = 0; ji < N; ++ji) {
      int row = jc * N + ji;
      for (int kc = 0; kc < nc; ++kc)
        for (int km = 0; km < N; ++km)
          A(row, kc * N + km) = dl_entry(*grid, jc, ji, kc, km);
      A(row, row) += 0.5;
      A(row, M + jc) = -1.0;  // unknown boundary constant on this curve
      rhs(row) = g[jc][ji];
    }
  for (int kc = 0; kc < nc; ++kc) {
    int row = M + kc;
    for (int km = 0; km < N; ++km) A(row, kc * N + km) = grid->curves[kc].w[km];
  }

  VectorXd sol = checked_solve(A, rhs);

  HarmonicField f;
  f.grid_ = grid;
  f.kind_ = LayerKind::double_layer;
  f.density_.resize(nc);
  f.constants_.resize(nc);
  for (int jc = 0; jc < nc; ++jc) {
    f.density_[jc].assign(N, 0.0);
    for (int ji = 0; ji < N; ++ji) f.density_[jc][ji] = sol(jc * N + ji);
    f.constants_[jc] = sol(M + jc);
  }
  f.zero_flux_imposed_ = true;
  // Canonical representative: c_1 = 0 (a constant density shifts the field).
  return f.with_density_shift(-f.constants_[0]);
}

HarmonicField solve_neumann(std::shared_ptr<const BoundaryGrid> grid,
                            const BoundaryData& h) {
  const int nc = static_cast<int>(grid->curves.size());
  const int N = grid->N;
  const int M = nc * N;

  double total = 0, total_abs = 0;
  for (int jc = 0; jc < nc; ++jc)
    for (int m = 0; m < N; ++m) {
      total += h[jc][m] * grid->curves[jc].w[m];
      total_abs += std::abs(h[jc][m]) * grid->curves[jc].w[m];
    }
  if (total_abs > 0 && std::abs(total) > 1e-8 * total_abs)
    throw IncompatibleData("Neumann data violates the compatibility integral");

  MatrixXd A = MatrixXd::Zero(M + 1, M + 1);
  VectorXd rhs = VectorXd::Zero(M + 1);
  for (int jc = 0; jc < nc; ++jc)
    for (int ji = 0; ji < N; ++ji) {
      int row = jc * N + ji;
      for (int kc = 0; kc < nc; ++kc)
        for (int km = 0; km < N; ++km)
          A(row, kc * N + km) = neumann_entry(*grid, jc, ji, kc, km);
      A(row, row) -= 0.5;
      A(row, M) = 1.0;
      rhs(row) = h[jc][ji];
    }
  for (int kc = 0; kc < nc; ++kc)
    for (int km = 0; km < N; ++km) A(M, kc * N + km) = grid->curves[kc].w[km];

  VectorXd sol = checked_solve(A, rhs);

  HarmonicField f;
  f.grid_ = grid;
  f.kind_ = LayerKind::single_layer;
  f.density_.resize(nc);
  f.cumulative_.resize(nc);
  f.cplx_density_.resize(nc);
  for (int jc = 0; jc < nc; ++jc) {
    auto& sigma = f.density_[jc];
    sigma.assign(N, 0.0);
    for (int ji = 0; ji < N; ++ji) sigma[ji] = sol(jc * N + ji);
    // Remove the (numerically tiny) per-curve charge so the cumulative
    // density is exactly periodic and the completion single-valued.
    double charge = 0, len = 0;
    for (int ji = 0; ji < N; ++ji) {
      charge += sigma[ji] * grid->curves[jc].w[ji];
      len += grid->curves[jc].w[ji];
    }
    for (int ji = 0; ji < N; ++ji) sigma[ji] -= charge / len;

    std::vector<double> st(N);
    for (int ji = 0; ji < N; ++ji) st[ji] = sigma[ji] * std::abs(grid->curves[jc].dz[ji]);
    double mean = 0;
    for (double v : st) mean += v;
    mean /= N;
    for (double& v : st) v -= mean;  // exact discrete zero mean
    f.cumulative_[jc] = spectral_antiderivative(st);
    f.cplx_density_[jc].resize(N);
    for (int ji = 0; ji < N; ++ji)
      f.cplx_density_[jc][ji] = st[ji] / grid->curves[jc].dz[ji];
  }
  return f;
}

HarmonicField green_function(std::shared_ptr<const BoundaryGrid> grid, cplx pole) {
  if (contains(*grid->domain, pole, grid->N) != PointClass::inside)
    throw InvalidDomain("Green's function pole must be strictly interior");
  BoundaryData g = sample_data(*grid, [pole](cplx z) {
    return std::log(std::abs(z - pole));
  });
  return solve_dirichlet(grid, g).with_singular({{pole, -1.0}});
}

double BoundaryTrace::flux(int curve) const {
  double acc = 0;
  for (int m = 0; m < grid->N; ++m) acc += dn[curve][m] * grid->curves[curve].w[m];
  return acc;
}

double BoundaryTrace::total_flux() const {
  double acc = 0;
  for (std::size_t j = 0; j < dn.size(); ++j) acc += flux(static_cast<int>(j));
  return acc;
}

class FieldTracer {
 public:
  static BoundaryTrace trace(const HarmonicField& f) {
    const auto& grid = *f.grid_;
    const int nc = static_cast<int>(grid.curves.size());
    const int N = grid.N;
    BoundaryTrace tr;
    tr.grid = f.grid_;
    tr.value.resize(nc);
    tr.dn.resize(nc);
    tr.ds.resize(nc);
    tr.dz.resize(nc);

    std::vector<CurveCauchy> cc;
    cc.reserve(nc);
    for (int j = 0; j < nc; ++j) cc.emplace_back(grid.curves[j]);

    for (int j = 0; j < nc; ++j) {
      tr.value[j].assign(N, 0.0);
      tr.dz[j].assign(N, cplx(0));

      if (f.kind_ == LayerKind::double_layer) {
        std::vector<cplx> mu(f.density_[j].begin(), f.density_[j].end());
        auto lim = cc[j].boundary_limits(mu, domain_side(j));
        auto limd = cc[j].boundary_limit_derivatives(mu, domain_side(j));
        double osgn = grid.curves[j].orient_sign;
        for (int i = 0; i < N; ++i) {
          tr.value[j][i] = osgn * lim[i].real();
          tr.dz[j][i] = 0.5 * osgn * limd[i];
        }
        for (int k = 0; k < nc; ++k) {
          if (k == j) continue;
          std::vector<cplx> muk(f.density_[k].begin(), f.density_[k].end());
          double osk = grid.curves[k].orient_sign;
          for (int i = 0; i < N; ++i) {
            cplx x = grid.curves[j].z[i];
            tr.value[j][i] += osk * cc[k].value(muk, x).real();
            tr.dz[j][i] += 0.5 * osk * cc[k].derivative(muk, x);
          }
        }
        for (const auto& [p, a] : f.logs_)
          for (int i = 0; i < N; ++i) {
            cplx x = grid.curves[j].z[i];
            tr.value[j][i] += a * std::log(std::abs(x - p));
            tr.dz[j][i] += a / (2.0 * (x - p));
          }
      } else {
        auto same = cc[j].single_layer_same_curve(f.density_[j]);
        auto limpsi = cc[j].boundary_limits(f.cplx_density_[j], domain_side(j));
        for (int i = 0; i < N; ++i) {
          tr.value[j][i] = same[i];
          tr.dz[j][i] = cplx(0, -0.5) * limpsi[i];
        }
        for (int k = 0; k < nc; ++k) {
          if (k == j) continue;
          for (int i = 0; i < N; ++i) {
            cplx x = grid.curves[j].z[i];
            double acc = 0;
            for (int m = 0; m < N; ++m)
              acc += f.density_[k][m] *
                     std::log(std::abs(x - grid.curves[k].z[m])) *
                     grid.curves[k].w[m];
            tr.value[j][i] += acc / kTwoPi;
            tr.dz[j][i] += cplx(0, -0.5) * cc[k].value(f.cplx_density_[k], x);
          }
        }
      }

      for (int i = 0; i < N; ++i) {
        cplx x = grid.curves[j].z[i];
        tr.value[j][i] += f.gauge_ + f.singular_value(x);
        tr.dz[j][i] += f.singular_grad(x);
      }

      // Tangential derivative from spectral differentiation of the values,
      // normal derivative from the complex derivative limit.
      auto dv = spectral_derivative(tr.value[j]);
      tr.ds[j].assign(N, 0.0);
      tr.dn[j].assign(N, 0.0);
      for (int i = 0; i < N; ++i) {
        double speed = std::abs(grid.curves[j].dz[i]);
        tr.ds[j][i] = grid.curves[j].orient_sign * dv[i] / speed;
        tr.dn[j][i] = 2.0 * (grid.curves[j].normal[i] * tr.dz[j][i]).real();
      }
    }
    return tr;
  }

  static std::vector<std::vector<cplx>> higher(const HarmonicField& f, int order) {
    const auto& grid = *f.grid_;
    const int nc = static_cast<int>(grid.curves.size());
    const int N = grid.N;
    std::vector<std::vector<cplx>> out(nc);
    std::vector<CurveCauchy> cc;
    cc.reserve(nc);
    for (int j = 0; j < nc; ++j) cc.emplace_back(grid.curves[j]);

    // order = 2 or 3: boundary limit of d^order u / dz^order
    for (int j = 0; j < nc; ++j) {
      out[j].assign(N, cplx(0));
      Side side = domain_side(j);
      if (f.kind_ == LayerKind::double_layer) {
        std::vector<cplx> mu(f.density_[j].begin(), f.density_[j].end());
        auto lim = order == 2 ? cc[j].boundary_limit_seconds(mu, side)
                              : cc[j].boundary_limit_thirds(mu, side);
        double osgn = grid.curves[j].orient_sign;
        for (int i = 0; i < N; ++i) out[j][i] = 0.5 * osgn * lim[i];
        for (int k = 0; k < nc; ++k) {
          if (k == j) continue;
          std::vector<cplx> muk(f.density_[k].begin(), f.density_[k].end());
          double osk = grid.curves[k].orient_sign;
          for (int i = 0; i < N; ++i) {
            cplx x = grid.curves[j].z[i];
            out[j][i] += 0.5 * osk *
                         (order == 2 ? cc[k].second_derivative(muk, x)
                                     : cc[k].third_derivative(muk, x));
          }
        }
        for (const auto& [p, a] : f.logs_)
          for (int i = 0; i < N; ++i) {
            cplx x = grid.curves[j].z[i];
            cplx d = x - p;
            out[j][i] += order == 2 ? -a / (2.0 * d * d) : a / (d * d * d);
          }
      } else {
        auto lim = order == 2
                       ? cc[j].boundary_limit_derivatives(f.cplx_density_[j], side)
                       : cc[j].boundary_limit_seconds(f.cplx_density_[j], side);
        for (int i = 0; i < N; ++i) out[j][i] = cplx(0, -0.5) * lim[i];
        for (int k = 0; k < nc; ++k) {
          if (k == j) continue;
          for (int i = 0; i < N; ++i) {
            cplx x = grid.curves[j].z[i];
            out[j][i] += cplx(0, -0.5) *
                         (order == 2 ? cc[k].derivative(f.cplx_density_[k], x)
                                     : cc[k].second_derivative(f.cplx_density_[k], x));
          }
        }
      }
      for (int i = 0; i < N; ++i) {
        cplx x = grid.curves[j].z[i];
        for (const auto& [p, s] : f.singular_) {
          cplx d = x - p;
          out[j][i] += order == 2 ? -s / (2.0 * d * d) : s / (d * d * d);
        }
      }
    }
    return out;
  }

};

BoundaryTrace boundary_trace(const HarmonicField& field) {
  return FieldTracer::trace(field);
}

std::vector<std::vector<cplx>> boundary_second_derivative(const HarmonicField& field) {
  return FieldTracer::higher(field, 2);
}

std::vector<std::vector<cplx>> boundary_third_derivative(const HarmonicField& field) {
  return FieldTracer::higher(field, 3);
}

}  // namespace hsl
