#include <doctest.h>

#include <cmath>

#include "hsl/oracles.hpp"

using namespace hsl;
using namespace hsl::oracles;

TEST_CASE("disk slit map formulas") {
  DiskCase c{1.0, cplx(0.5, 0)};
  CHECK(std::abs(disk_P(c, cplx(-0.5, 0)) - cplx(-3.2, 0)) < 1e-14);
  CHECK(std::abs(disk_Q(c, cplx(-0.5, 0)) - cplx(-5.0, 0)) < 1e-14);
  CHECK(std::abs(disk_P(c, c.xi)) < 1e-14);
  CHECK(std::abs(disk_Q(c, c.xi)) < 1e-14);

  // P Q = (1/z - 1/xi)^2 at scattered points
  for (int k = 0; k < 20; ++k) {
    cplx z = std::polar(0.15 + 0.04 * k, 1.7 * k);
    cplx lhs = disk_P(c, z) * disk_Q(c, z);
    cplx h = 1.0 / z - 1.0 / c.xi;
    CHECK(std::abs(lhs - h * h) < 1e-12 * std::abs(h * h));
  }
}

TEST_CASE("disk constants") {
  DiskCase c{1.0, cplx(0.5, 0)};
  auto k = disk_constants(c);
  CHECK(k.alpha == doctest::Approx(std::log(16.0 / 3.0)));
  CHECK(k.beta == doctest::Approx(std::log(3.0)));
  CHECK(k.s == doctest::Approx(2 * std::log(4.0 / 3.0)));

  // xi -> 0: span -> 0
  DiskCase tiny{1.0, cplx(1e-6, 0)};
  CHECK(disk_constants(tiny).s < 1e-11);

  // scale invariance: s depends on |xi|/r only
  DiskCase big{2.0, cplx(1, 0)};
  CHECK(disk_constants(big).s == doctest::Approx(k.s));
}

TEST_CASE("transport predictions") {
  auto pred = transport(cplx(2, 0));
  CHECK(pred.alpha_shift == doctest::Approx(-std::log(2.0)));
  CHECK(pred.beta_shift == doctest::Approx(-std::log(2.0)));
  auto id = transport(cplx(1, 0));
  CHECK(id.alpha_shift == doctest::Approx(0.0));

  // transported domain geometry
  auto md = MarkedDomain::create(build_curve({{1, 1.0}}, Orientation::positive), {},
                                 cplx(0), cplx(0.5, 0));
  auto moved = transport_domain(md, cplx(2, 0), cplx(1, 1));
  CHECK(std::abs(moved.a() - cplx(1, 1)) < 1e-15);
  CHECK(std::abs(moved.b() - cplx(2, 1)) < 1e-15);
  CHECK(std::abs(moved.outer().point(0) - cplx(3, 1)) < 1e-13);
}

TEST_CASE("disk Poincare distance") {
  DiskCase c{1.0, cplx(0.5, 0)};
  CHECK(disk_poincare_distance(c) == doctest::Approx(0.5 * std::log(3.0)));
  // identity: s = 4 log cosh d holds exactly for the closed forms
  CHECK(4 * std::log(std::cosh(disk_poincare_distance(c))) ==
        doctest::Approx(disk_constants(c).s).epsilon(1e-14));
}
