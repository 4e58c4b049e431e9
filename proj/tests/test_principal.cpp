#include <doctest.h>

#include <cmath>

#include "hsl/oracles.hpp"
#include "hsl/principal.hpp"

using namespace hsl;

namespace {

std::shared_ptr<PrincipalPair> disk_pair(int N = 256) {
  auto md = std::make_shared<MarkedDomain>(MarkedDomain::create(
      build_curve({{1, 1.0}}, Orientation::positive), {}, cplx(0), cplx(0.5, 0)));
  return std::make_shared<PrincipalPair>(compute_principal_pair(md, N));
}

std::shared_ptr<PrincipalPair> two_connected_pair(int N = 256) {
  auto outer = build_curve({{1, 1.0}}, Orientation::positive);
  auto hole = build_curve({{0, cplx(0.45, 0.35)}, {1, 0.15}}, Orientation::negative);
  auto md = std::make_shared<MarkedDomain>(
      MarkedDomain::create(outer, {hole}, cplx(-0.3, 0), cplx(0.2, -0.3)));
  return std::make_shared<PrincipalPair>(compute_principal_pair(md, N));
}

}  // namespace

TEST_CASE("principal pair on the disk matches the closed forms") {
  auto pair = disk_pair();
  // alpha = -2 log|xi| - log(1 - |xi|^2), beta with the opposite log sign
  CHECK(pair->alpha == doctest::Approx(std::log(16.0 / 3.0)).epsilon(1e-10));
  CHECK(pair->beta == doctest::Approx(std::log(3.0)).epsilon(1e-10));
  CHECK(pair->alpha >= pair->beta);

  // singular expansion normalization: p + log|z-a| - log|z-b| -> -log|b-a|
  // at radius-shrinking probes around a
  for (double r : {0.2, 0.1, 0.05}) {
    cplx z = pair->a() + cplx(r, 0);
    double h0 = pair->p.value(z) + std::log(std::abs(z - pair->a())) -
                std::log(std::abs(z - pair->b())) + std::log(std::abs(pair->b() - pair->a()));
    CHECK(std::abs(h0) < 0.5 * r);  // h_0(a) = 0, h_0 = O(|z - a|)
  }

  // conditions (L1)/(L0): flux of the full fields through the boundary
  CHECK(std::abs(pair->p_trace.flux(0)) < 1e-9);
  double max_qn = 0;
  for (double v : pair->q_trace.dn[0]) max_qn = std::max(max_qn, std::abs(v));
  CHECK(max_qn < 1e-9);

  // derivative data at b from the closed forms:
  // dh/dz = (1/2)(-1/xi + xi/(1-xi^2)), dmh/dz with the opposite sign of the
  // second term
  double xi = 0.5;
  cplx dh_ref = 0.5 * (-1.0 / xi + xi / (1 - xi * xi));
  cplx dmh_ref = 0.5 * (-1.0 / xi - xi / (1 - xi * xi));
  CHECK(std::abs(pair->dh_xi_dz - dh_ref) < 1e-9);
  CHECK(std::abs(pair->dmh_xi_dz - dmh_ref) < 1e-9);
}

TEST_CASE("coincident marked points are rejected") {
  auto md = std::make_shared<MarkedDomain>(MarkedDomain::create(
      build_curve({{1, 1.0}}, Orientation::positive), {}, cplx(0), cplx(0.01, 0)));
  CHECK_THROWS_AS(compute_principal_pair(md, 256), MarkedPointsTooClose);
}

TEST_CASE("slit maps against the disk oracles") {
  auto pair = disk_pair();
  auto P = build_slit_map(pair, SlitKind::circular);
  auto Q = build_slit_map(pair, SlitKind::radial);
  auto H = build_H(pair);

  oracles::DiskCase dc{1.0, cplx(0.5, 0)};
  for (cplx z : {cplx(-0.5, 0), cplx(0.2, 0.3), cplx(-0.1, -0.6)}) {
    CHECK(std::abs(P.eval(z) - oracles::disk_P(dc, z)) < 1e-9);
    CHECK(std::abs(Q.eval(z) - oracles::disk_Q(dc, z)) < 1e-9);
    CHECK(std::abs(H.eval(z) - (1.0 / z - 2.0)) < 1e-9);
    CHECK(std::abs(H.eval(z) * H.eval(z) - P.eval(z) * Q.eval(z)) < 1e-8);
  }
  CHECK(std::abs(P.eval(cplx(-0.5, 0)) - cplx(-3.2, 0)) < 1e-9);
  CHECK(std::abs(Q.eval(cplx(-0.5, 0)) - cplx(-5.0, 0)) < 1e-9);
  CHECK(std::abs(H.eval(cplx(-0.5, 0)) - cplx(-4.0, 0)) < 1e-9);

  // residue-1 normalization, fitted from a probe circle
  CHECK(std::abs(P.fitted_residue() - 1.0) < 1e-7);
  CHECK(std::abs(Q.fitted_residue() - 1.0) < 1e-7);
  CHECK(std::abs(H.fitted_residue() - 1.0) < 1e-7);

  // W(b) = 0
  double band = 5.0 * pair->grid->max_spacing();
  (void)band;
  CHECK(std::abs(P.eval(pair->b() + cplx(1e-7, 0))) < 1e-5);
}

TEST_CASE("slit map boundary constancy invariants") {
  auto pair = two_connected_pair();
  auto P = build_slit_map(pair, SlitKind::circular);
  auto Q = build_slit_map(pair, SlitKind::radial);
  for (int j = 0; j < 2; ++j) {
    const auto& pimg = P.boundary_image(j);
    double mean = 0;
    for (double v : pimg.logmod) mean += v;
    mean /= pimg.logmod.size();
    for (double v : pimg.logmod) CHECK(std::abs(v - mean) < 1e-7 * std::abs(mean) + 1e-9);

    const auto& qimg = Q.boundary_image(j);
    double amean = 0;
    for (double v : qimg.arg) amean += v;
    amean /= qimg.arg.size();
    for (double v : qimg.arg) CHECK(std::abs(v - amean) < 1e-7);
  }

  // single-valuedness: conjugate periods vanish (flux of p, tangential
  // period of q)
  for (int j = 0; j < 2; ++j) {
    CHECK(std::abs(pair->p_trace.flux(j)) < 1e-8);
    double qflux = 0;
    for (int i = 0; i < pair->grid->N; ++i)
      qflux += pair->q_trace.dn[j][i] * pair->grid->curves[j].w[i];
    CHECK(std::abs(qflux) < 1e-8);
  }
}

TEST_CASE("slit data on the disk") {
  auto pair = disk_pair();
  auto data = extract_slit_data(pair);
  REQUIRE(data.circular.size() == 1);
  REQUIRE(data.radial.size() == 1);

  // |P| = 2 on the boundary; the arc spans 2 pi / 3 around angle pi
  CHECK(data.circular[0].r == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(data.circular[0].theta2 - data.circular[0].theta1 ==
        doctest::Approx(kTwoPi / 3).epsilon(1e-8));

  // radial slit at angle pi with extent [0.5, 4.5]
  CHECK(std::abs(std::remainder(data.radial[0].theta - kPi, kTwoPi)) < 1e-9);
  CHECK(data.radial[0].r1 == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(data.radial[0].r2 == doctest::Approx(4.5).epsilon(1e-9));

  CHECK(data.circular_extrema[0] == 2);
  CHECK(data.radial_extrema[0] == 2);
  CHECK(slits_interleaved(data, 0));

  // oracle cross-check of the circular slit radius and angular extent from
  // 512 samples of the closed form
  oracles::DiskCase dc{1.0, cplx(0.5, 0)};
  double vmin = 1e300, vmax = -1e300;
  for (int m = 0; m < 512; ++m) {
    cplx w = oracles::disk_P(dc, std::polar(1.0, kTwoPi * m / 512));
    CHECK(std::abs(w) == doctest::Approx(2.0).epsilon(1e-12));
    double a = std::arg(w);
    vmin = std::min(vmin, a);
    vmax = std::max(vmax, a);
  }
  // arg range of the oracle matches the extracted extent
  CHECK(data.circular[0].theta2 - data.circular[0].theta1 ==
        doctest::Approx(kTwoPi / 3).epsilon(1e-6));
}

TEST_CASE("slit data interleaves on a two-connected domain") {
  auto pair = two_connected_pair();
  auto data = extract_slit_data(pair);
  for (int j = 0; j < 2; ++j) {
    CHECK(data.circular_extrema[j] == 2);
    CHECK(data.radial_extrema[j] == 2);
    CHECK(slits_interleaved(data, j));
    CHECK(data.circular[j].theta2 - data.circular[j].theta1 > 1e-9);
    CHECK(data.circular[j].theta2 - data.circular[j].theta1 < kTwoPi);
    CHECK(data.radial[j].r1 > 0);
    CHECK(data.radial[j].r1 <= data.radial[j].r2);
  }
}

TEST_CASE("F-function properties") {
  auto pair = disk_pair();
  CHECK(std::abs(eval_F(*pair, pair->a()) - 1.0) < 1e-9);

  auto pair2 = two_connected_pair();
  CHECK(std::abs(eval_F(*pair2, pair2->a()) - 1.0) < 1e-8);
  auto F = boundary_F(*pair2);
  for (const auto& row : F)
    for (cplx f : row) CHECK(std::abs(f.real()) < 1e-6);

  int positive = 0, tried = 0;
  double band = 5.0 * pair2->grid->max_spacing();
  for (int k = 0; tried < 50 && k < 4000; ++k) {
    cplx z = std::polar(0.05 + 0.00023 * k, 2.39996 * k);
    if (contains(*pair2->grid->domain, z, 256) != PointClass::inside) continue;
    if (pair2->grid->distance_to_boundary(z) < band) continue;
    ++tried;
    if (eval_F(*pair2, z).real() > 0) ++positive;
  }
  CHECK(tried == 50);
  CHECK(positive == 50);
}

TEST_CASE("E_log area identity") {
  auto pair = disk_pair();
  CHECK(e_log_area(*pair) ==
        doctest::Approx(kPi * std::log(4.0 / 3.0)).epsilon(1e-9));

  auto pair2 = two_connected_pair();
  double s = pair2->alpha - pair2->beta;
  CHECK(e_log_area(*pair2) == doctest::Approx(kPi / 2.0 * s).epsilon(1e-6));
}

TEST_CASE("convexity of the log H boundary images") {
  auto pair = disk_pair();
  auto rep = convexity_check(*pair, 0, 512);
  CHECK(rep.one_signed);
  CHECK(rep.max_curvature < 0);

  // closed-form oracle: tau(theta) = log(e^{-i theta} - 2) up to constants;
  // its curvature is strictly one-signed
  auto pair2 = two_connected_pair();
  for (int j = 0; j < 2; ++j) {
    auto r2 = convexity_check(*pair2, j, 512);
    CHECK(r2.one_signed);
    CHECK(r2.max_curvature < 0);
  }

  // -H(C_j) simple closed curve
  for (int j = 0; j < 2; ++j) {
    auto samples = h_boundary_samples(*pair2, j, 512);
    for (auto& v : samples) v = -v;
    CHECK(polyline_simple(samples));
  }
}

TEST_CASE("univalence of H by the argument principle") {
  auto pair = disk_pair();
  // H(D) = exterior of the disk |w + 2| <= 1
  for (int k = 0; k < 50; ++k) {
    cplx w = std::polar(0.3 + 0.1 * (k % 7), 0.7 * k) - cplx(1.0, 0);
    int n = h_preimage_count(*pair, w, 512);
    CHECK((n == 0 || n == 1));
    bool in_complement = std::abs(w + 2.0) < 1.0;
    CHECK(n == (in_complement ? 0 : 1));
  }
}
