#include <doctest.h>

#include <cmath>

#include "hsl/geometry.hpp"

using namespace hsl;

namespace {

// Independent oracle: exact segment-crossing scan of the sampled polyline.
bool polyline_crosses_itself(const SmoothCurve& c, int n) {
  std::vector<cplx> pts(n);
  for (int m = 0; m < n; ++m) pts[m] = c.point(kTwoPi * m / n);
  auto orient = [](cplx p, cplx q, cplx r) {
    double v = (std::conj(q - p) * (r - p)).imag();
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      cplx a = pts[i], b = pts[(i + 1) % n], p = pts[j], q = pts[(j + 1) % n];
      if (orient(a, b, p) != orient(a, b, q) && orient(p, q, a) != orient(p, q, b))
        return true;
    }
  return false;
}

// Adaptive Simpson quadrature as an arclength oracle.
double adaptive_arclength(const SmoothCurve& c, double lo, double hi, double tol) {
  auto f = [&](double t) { return std::abs(c.d1(t)); };
  std::function<double(double, double, double, double, double, double)> rec =
      [&](double a, double b, double fa, double fm, double fb, double whole) {
        double m = 0.5 * (a + b);
        double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        double flm = f(lm), frm = f(rm);
        double left = (m - a) / 6 * (fa + 4 * flm + fm);
        double right = (b - m) / 6 * (fm + 4 * frm + fb);
        if (std::abs(left + right - whole) < 15 * tol)
          return left + right + (left + right - whole) / 15;
        return rec(a, m, fa, flm, fm, left) + rec(m, b, fm, frm, fb, right);
      };
  double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
  double whole = (hi - lo) / 6 * (fa + 4 * fm + fb);
  return rec(lo, hi, fa, fm, fb, whole);
}

}  // namespace

TEST_CASE("unit circle and ellipse from Fourier coefficients") {
  auto circle = build_curve({{1, 1.0}}, Orientation::positive);
  for (int m = 0; m < 8; ++m)
    CHECK(std::abs(circle.point(kTwoPi * m / 8)) == doctest::Approx(1.0));

  auto ellipse = build_curve({{1, 1.0}, {-1, 0.3}}, Orientation::positive);
  CHECK(std::abs(ellipse.point(0)) == doctest::Approx(1.3));
  CHECK(std::abs(ellipse.point(kPi / 2)) == doctest::Approx(0.7));
}

TEST_CASE("self-intersecting curve is rejected; oracle agrees") {
  std::vector<FourierCoeff> limacon{{1, 1.0}, {2, 0.7}};
  CHECK_THROWS_AS(build_curve(limacon, Orientation::positive), SelfIntersecting);

  // Bypass validation to run the oracle on the raw curve.
  struct Raw : SmoothCurve {};
  // Evaluate the same coefficients directly.
  auto eval = [&](double th) {
    return std::exp(cplx(0, th)) + 0.7 * std::exp(cplx(0, 2 * th));
  };
  std::vector<cplx> pts(1024);
  for (int m = 0; m < 1024; ++m) pts[m] = eval(kTwoPi * m / 1024);
  bool crossing = false;
  auto orient = [](cplx p, cplx q, cplx r) {
    double v = (std::conj(q - p) * (r - p)).imag();
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  };
  for (int i = 0; i < 1024 && !crossing; ++i)
    for (int j = i + 2; j < 1024; ++j) {
      if (i == 0 && j == 1023) continue;
      cplx a = pts[i], b = pts[(i + 1) % 1024], p = pts[j], q = pts[(j + 1) % 1024];
      if (orient(a, b, p) != orient(a, b, q) && orient(p, q, a) != orient(p, q, b)) {
        crossing = true;
        break;
      }
    }
  CHECK(crossing);

  // A valid eccentric curve passes both the validator and the oracle.
  auto ok = build_curve({{1, 1.0}, {-1, 0.3}}, Orientation::positive);
  CHECK_FALSE(polyline_crosses_itself(ok, 1024));
}

TEST_CASE("degenerate curve is rejected") {
  // z(theta) = e^{i theta} + e^{-i theta} = 2 cos(theta): collapses to a segment.
  CHECK_THROWS_AS(build_curve({{1, 1.0}, {-1, 1.0}}, Orientation::positive),
                  DegenerateCurve);
  CHECK_THROWS_AS(build_curve({{2, 1.0}}, Orientation::positive), DegenerateCurve);
}

TEST_CASE("boundary grid weights and arclength") {
  auto md = std::make_shared<MarkedDomain>(MarkedDomain::create(
      build_curve({{1, 1.0}}, Orientation::positive), {}, cplx(0), cplx(0.5, 0)));
  auto grid = sample_boundary(md, 16);
  double total = 0;
  for (double w : grid->curves[0].w) {
    CHECK(w == doctest::Approx(kTwoPi / 16));
    total += w;
  }
  CHECK(total == doctest::Approx(kTwoPi));

  auto ell = build_curve({{1, 1.0}, {-1, 0.3}}, Orientation::positive);
  auto md2 = std::make_shared<MarkedDomain>(
      MarkedDomain::create(ell, {}, cplx(0), cplx(0.4, 0)));
  auto grid2 = sample_boundary(md2, 256);
  double oracle = adaptive_arclength(ell, 0, kTwoPi, 1e-13);
  CHECK(grid2->curves[0].arclength() == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("annulus inner normals point toward the origin") {
  auto outer = build_curve({{1, 1.0}}, Orientation::positive);
  auto inner = build_curve({{1, 0.5}}, Orientation::negative);
  auto md = std::make_shared<MarkedDomain>(
      MarkedDomain::create(outer, {inner}, cplx(0.75, 0), cplx(0, 0.75)));
  auto grid = sample_boundary(md, 64);
  for (int m = 0; m < 64; ++m) {
    cplx z = grid->curves[1].z[m];
    cplx n = grid->curves[1].normal[m];
    // outward normal of the domain points into the hole, i.e. toward 0
    CHECK((std::conj(n) * (-z)).real() > 0);
  }
  // and outer normals point away from the origin
  for (int m = 0; m < 64; ++m) {
    CHECK((std::conj(grid->curves[0].normal[m]) * grid->curves[0].z[m]).real() > 0);
  }
}

TEST_CASE("normal convention against the stored tangent") {
  auto outer = build_curve({{1, 1.0}, {2, 0.1}}, Orientation::positive);
  auto inner = build_curve({{1, 0.3}}, Orientation::negative);
  auto md = std::make_shared<MarkedDomain>(
      MarkedDomain::create(outer, {inner}, cplx(0.6, 0), cplx(0, 0.6)));
  auto grid = sample_boundary(md, 32);
  for (int j = 0; j < 2; ++j)
    for (int m = 0; m < 32; ++m) {
      cplx t = grid->curves[j].dz[m];
      cplx expect = cplx(0, -1) * grid->curves[j].orient_sign * t / std::abs(t);
      CHECK(std::abs(grid->curves[j].normal[m] - expect) < 1e-14);
    }
}

TEST_CASE("point classification") {
  auto outer = build_curve({{1, 1.0}}, Orientation::positive);
  auto md = MarkedDomain::create(outer, {}, cplx(0), cplx(0.5, 0));
  CHECK(contains(md, cplx(0), 256) == PointClass::inside);
  CHECK(contains(md, cplx(2, 0), 256) == PointClass::outside);
  CHECK(contains(md, cplx(0.999, 0), 256) == PointClass::near_boundary);

  auto inner = build_curve({{1, 0.5}}, Orientation::negative);
  auto annulus = MarkedDomain::create(outer, {inner}, cplx(0.75, 0), cplx(0, 0.75));
  CHECK(contains(annulus, cplx(0.25, 0), 256) == PointClass::outside);
  CHECK(contains(annulus, cplx(0.75, 0), 256) == PointClass::inside);
}

TEST_CASE("spectral stability under N doubling") {
  auto ell = build_curve({{1, 1.0}, {-1, 0.25}, {2, 0.05}}, Orientation::positive);
  auto md = std::make_shared<MarkedDomain>(
      MarkedDomain::create(ell, {}, cplx(0), cplx(0.4, 0)));
  auto g1 = sample_boundary(md, 128);
  auto g2 = sample_boundary(md, 256);
  CHECK(std::abs(g1->curves[0].arclength() - g2->curves[0].arclength()) <
        1e-10 * g2->curves[0].arclength());
}

TEST_CASE("domain validation rejects bad markings") {
  auto outer = build_curve({{1, 1.0}}, Orientation::positive);
  CHECK_THROWS_AS(MarkedDomain::create(outer, {}, cplx(0.2, 0), cplx(0.2, 0)),
                  InvalidDomain);
  CHECK_THROWS_AS(MarkedDomain::create(outer, {}, cplx(2, 0), cplx(0.5, 0)),
                  InvalidDomain);
  auto inner = build_curve({{1, 0.5}}, Orientation::negative);
  CHECK_THROWS_AS(
      MarkedDomain::create(outer, {inner}, cplx(0.25, 0), cplx(0.75, 0)),
      InvalidDomain);
}
