#include <doctest.h>

#include <cmath>

#include "hsl/bie.hpp"
#include "oracle_fd.hpp"

using namespace hsl;

namespace {

std::shared_ptr<const BoundaryGrid> disk_grid(int N = 256) {
  auto md = std::make_shared<MarkedDomain>(MarkedDomain::create(
      build_curve({{1, 1.0}}, Orientation::positive), {}, cplx(0), cplx(0.5, 0)));
  return sample_boundary(md, N);
}

std::shared_ptr<const BoundaryGrid> annulus_grid(int N = 256) {
  auto outer = build_curve({{1, 1.0}}, Orientation::positive);
  auto inner = build_curve({{1, 0.5}}, Orientation::negative);
  auto md = std::make_shared<MarkedDomain>(
      MarkedDomain::create(outer, {inner}, cplx(0.75, 0), cplx(0, 0.75)));
  return sample_boundary(md, N);
}

std::shared_ptr<const BoundaryGrid> ellipse_grid(int N = 256) {
  auto md = std::make_shared<MarkedDomain>(MarkedDomain::create(
      build_curve({{1, 1.0}, {-1, 0.3}}, Orientation::positive), {}, cplx(0),
      cplx(0.4, 0)));
  return sample_boundary(md, N);
}

}  // namespace

TEST_CASE("Dirichlet: harmonic polynomial data on the disk") {
  auto grid = disk_grid();
  auto u = solve_dirichlet(grid, sample_data(*grid, [](cplx z) { return z.real(); }));
  CHECK(u.value(cplx(0.3, 0.4)) == doctest::Approx(0.3).epsilon(1e-11));
  CHECK(u.value(cplx(-0.2, 0.1)) == doctest::Approx(-0.2).epsilon(1e-11));

  auto c = solve_dirichlet(grid, sample_data(*grid, [](cplx) { return 1.0; }));
  CHECK(c.value(cplx(0.1, 0.2)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Dirichlet: annulus two-constant data against separation of variables") {
  auto grid = annulus_grid();
  BoundaryData g(2);
  g[0].assign(grid->N, 0.0);
  g[1].assign(grid->N, 1.0);
  auto u = solve_dirichlet(grid, g);
  // u = log|z| / log(r_in)
  for (cplx p : {cplx(0.75, 0), cplx(0, -0.8), cplx(-0.6, 0.25)})
    CHECK(u.value(p) ==
          doctest::Approx(std::log(std::abs(p)) / std::log(0.5)).epsilon(1e-10));
  CHECK(u.value(cplx(0.75, 0)) == doctest::Approx(0.4150375).epsilon(1e-6));
}

TEST_CASE("Dirichlet: maximum principle spot check") {
  auto grid = ellipse_grid();
  auto g = sample_data(*grid, [](cplx z) { return z.real() * z.imag() + 0.3; });
  double gmin = 1e300, gmax = -1e300;
  for (const auto& row : g)
    for (double v : row) {
      gmin = std::min(gmin, v);
      gmax = std::max(gmax, v);
    }
  auto u = solve_dirichlet(grid, g);
  for (cplx p : {cplx(0.2, 0.1), cplx(-0.5, 0.2), cplx(0.8, -0.1), cplx(0, -0.4)}) {
    double v = u.value(p);
    CHECK(v >= gmin - 1e-8);
    CHECK(v <= gmax + 1e-8);
  }
}

TEST_CASE("modified Dirichlet: disk and annulus canonical cases") {
  auto grid = disk_grid();
  auto u0 = solve_modified_dirichlet(grid, sample_data(*grid, [](cplx) { return 0.0; }));
  CHECK(std::abs(u0.value(cplx(0.3, 0.2))) < 1e-12);
  CHECK(u0.component_constants()[0] == doctest::Approx(0.0));

  auto agrid = annulus_grid();
  auto ulog = solve_modified_dirichlet(
      agrid, sample_data(*agrid, [](cplx z) { return std::log(std::abs(z)); }));
  CHECK(std::abs(ulog.value(cplx(0.7, 0.1))) < 1e-10);
  CHECK(std::abs(ulog.value(cplx(0, -0.8))) < 1e-10);
  CHECK(ulog.component_constants()[0] == doctest::Approx(0.0));
  CHECK(ulog.component_constants()[1] ==
        doctest::Approx(-std::log(0.5)).epsilon(1e-10));

  // zero flux of the layer part through each curve
  auto tr = boundary_trace(ulog);
  CHECK(std::abs(tr.flux(0)) < 1e-9);
  CHECK(std::abs(tr.flux(1)) < 1e-9);
}

TEST_CASE("modified Dirichlet: ellipse against the Shortley-Weller oracle") {
  auto grid = ellipse_grid();
  auto u = solve_modified_dirichlet(grid,
                                    sample_data(*grid, [](cplx z) { return z.real(); }));
  // Simply connected: zero flux is automatic, so with c_1 = 0 this is the
  // plain Dirichlet extension of Re z.
  fd_oracle::ShortleyWellerDirichlet fd(
      [](double x, double y) {
        // z(theta) = e^{it} + 0.3 e^{-it}: semi-axes 1.3 and 0.7
        return x * x / (1.3 * 1.3) + y * y / (0.7 * 0.7) - 1.0;
      },
      [](cplx z) { return z.real(); }, -1.35, 1.35, -0.75, 0.75, 400);
  cplx probes[10] = {{0.3, 0.2},  {-0.4, 0.1}, {0.9, -0.2}, {-0.8, -0.3}, {0.0, 0.45},
                     {0.5, -0.4}, {-1.0, 0.1}, {0.2, -0.5}, {-0.2, 0.35}, {0.7, 0.3}};
  for (cplx p : probes)
    CHECK(std::abs(u.value(p) - fd.eval(p)) < 1e-4);
}

TEST_CASE("Neumann: zero data, cosine data, and compatibility") {
  auto grid = disk_grid();
  auto u0 = solve_neumann(grid, sample_data(*grid, [](cplx) { return 0.0; }));
  CHECK(std::abs(u0.value(cplx(0.2, 0.3))) < 1e-12);

  // du/dn = cos(theta) on |z| = 1 gives u = Re z + const
  auto u = solve_neumann(grid, sample_data(*grid, [](cplx z) { return z.real(); }));
  CHECK(std::abs(u.grad_z(cplx(0.2, 0.1)) - cplx(0.5, 0)) < 1e-11);
  CHECK(u.value(cplx(0.3, 0)) - u.value(cplx(-0.3, 0)) ==
        doctest::Approx(0.6).epsilon(1e-11));

  CHECK_THROWS_AS(
      solve_neumann(grid, sample_data(*grid, [](cplx) { return 1.0; })),
      IncompatibleData);
}

TEST_CASE("Neumann: annulus data against polar FD oracle and closed form") {
  auto grid = annulus_grid();
  BoundaryData h(2);
  h[0].resize(grid->N);
  h[1].assign(grid->N, 0.0);
  for (int i = 0; i < grid->N; ++i)
    h[0][i] = grid->curves[0].z[i].real();  // cos(theta) on the outer circle
  auto u = solve_neumann(grid, h);

  // closed form: u = (4r/3 + 1/(3r)) cos(theta) + const
  auto exact = [](cplx p) {
    double r = std::abs(p);
    return (4.0 * r / 3.0 + 1.0 / (3.0 * r)) * std::cos(std::arg(p));
  };
  cplx ref(0.75, 0);
  for (cplx p : {cplx(0, 0.8), cplx(-0.7, 0.2), cplx(0.2, -0.72)})
    CHECK(u.value(p) - u.value(ref) ==
          doctest::Approx(exact(p) - exact(ref)).epsilon(1e-9));

  fd_oracle::PolarAnnulusNeumann fd(0.5, 1.0, [](double th) { return std::cos(th); },
                                    [](double) { return 0.0; }, 129, 192);
  for (cplx p : {cplx(0, 0.8), cplx(-0.7, 0.2)})
    CHECK(std::abs((u.value(p) - u.value(ref)) - (fd.eval(p) - fd.eval(ref))) < 1e-4);

  // Neumann trace reproduces the data
  auto tr = boundary_trace(u);
  double max_err = 0;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < grid->N; ++i)
      max_err = std::max(max_err, std::abs(tr.dn[j][i] - h[j][i]));
  CHECK(max_err < 1e-8);
}

TEST_CASE("Green's function: disk closed forms and annulus positivity") {
  auto grid = disk_grid();
  auto g0 = green_function(grid, cplx(0));
  CHECK(g0.value(cplx(0.5, 0)) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(std::abs(g0.grad_z(cplx(0.5, 0)) - cplx(-1.0, 0)) < 1e-11);

  auto g = green_function(grid, cplx(0.3, 0));
  auto mobius = [](cplx z) {
    return -std::log(std::abs(z - 0.3)) + std::log(std::abs(1.0 - 0.3 * z));
  };
  for (cplx p : {cplx(0), cplx(-0.4, 0.3), cplx(0.1, -0.6)})
    CHECK(g.value(p) == doctest::Approx(mobius(p)).epsilon(1e-11));
  CHECK(g.value(cplx(0)) == doctest::Approx(-std::log(0.3)).epsilon(1e-11));

  auto agrid = annulus_grid();
  auto ga = green_function(agrid, cplx(0.75, 0));
  for (int k = 0; k < 20; ++k) {
    double r = 0.63 + 0.24 * k / 19.0;
    cplx p = std::polar(r, 0.3 + 0.25 * k);
    CHECK(ga.value(p) > 0);
  }
  auto tr = boundary_trace(ga);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < agrid->N; ++i) CHECK(std::abs(tr.value[j][i]) < 1e-8);
}

TEST_CASE("boundary trace: closed forms and the Wirtinger identity") {
  auto grid = disk_grid();
  // Green's function with pole 0: dg/dn = -1 on |z| = 1
  auto g0 = green_function(grid, cplx(0));
  auto tr = boundary_trace(g0);
  for (int i = 0; i < grid->N; i += 8)
    CHECK(tr.dn[0][i] == doctest::Approx(-1.0).epsilon(1e-10));

  // constant field: all trace vectors vanish
  auto c = solve_dirichlet(grid, sample_data(*grid, [](cplx) { return 2.5; }));
  auto trc = boundary_trace(c);
  for (int i = 0; i < grid->N; i += 16) {
    CHECK(trc.value[0][i] == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(std::abs(trc.dn[0][i]) < 1e-10);
    CHECK(std::abs(trc.ds[0][i]) < 1e-10);
    CHECK(std::abs(trc.dz[0][i]) < 1e-10);
  }

  // Wirtinger identity |du/dz|^2 = (dn^2 + ds^2)/4 with ds from the spectral
  // derivative of the boundary values (an independent route).
  auto egrid = ellipse_grid();
  auto u = solve_dirichlet(
      egrid, sample_data(*egrid, [](cplx z) { return z.real() * z.real() - z.imag(); }));
  auto tre = boundary_trace(u);
  for (int i = 0; i < egrid->N; ++i) {
    double lhs = std::norm(tre.dz[0][i]);
    double rhs = 0.25 * (tre.dn[0][i] * tre.dn[0][i] + tre.ds[0][i] * tre.ds[0][i]);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
  }
}

TEST_CASE("evaluate and complex gradient contracts") {
  auto grid = disk_grid();
  auto g0 = green_function(grid, cplx(0));
  // field = -log|z| exactly: value log 2, du/dz = -1/(2 z)
  CHECK(g0.value(cplx(0.5, 0)) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(std::abs(g0.grad_z(cplx(0.5, 0)) - cplx(-1, 0)) < 1e-11);

  CHECK_THROWS_AS(g0.value(cplx(0.995, 0)), NearBoundary);

  auto agrid = annulus_grid();
  auto ulog = solve_modified_dirichlet(
      agrid, sample_data(*agrid, [](cplx z) { return std::log(std::abs(z)); }));
  CHECK(std::abs(ulog.value(cplx(0.7, 0))) < 1e-8);
  CHECK(std::abs(ulog.grad_z(cplx(0.7, 0))) < 1e-8);
}

TEST_CASE("field evaluation agrees across grid refinement") {
  for (int variant = 0; variant < 2; ++variant) {
    auto coarse = variant == 0 ? disk_grid(128) : annulus_grid(128);
    auto domain = coarse->domain;
    auto fine = sample_boundary(domain, 256);
    auto gfun = [](cplx z) { return z.real() - 0.2 * z.imag(); };
    auto uc = solve_dirichlet(coarse, sample_data(*coarse, gfun));
    auto uf = solve_dirichlet(fine, sample_data(*fine, gfun));
    cplx probe = domain->a();
    CHECK(std::abs(uc.value(probe) - uf.value(probe)) < 1e-8);
  }
}
