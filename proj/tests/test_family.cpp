#include <doctest.h>

#include <cmath>

#include "hsl/family.hpp"

using namespace hsl;

TEST_CASE("k1 and k2 on the canonical families") {
  auto product = make_product_family();
  CHECK(std::abs(eval_k1(product, cplx(0.1, 0.2), 0, 0.7)) < 1e-14);
  CHECK(std::abs(eval_k2(product, cplx(0.1, 0.2), 0, 0.7)) < 1e-14);

  auto hartogs = make_hartogs_family();
  CHECK(std::abs(eval_k1(hartogs, cplx(0), 0, 0.0) - cplx(-1, 0)) < 1e-12);
  CHECK(std::abs(eval_k1(hartogs, cplx(0.2, -0.1), 0, 1.3) - cplx(-1, 0)) < 1e-12);
  CHECK(std::abs(eval_k2(hartogs, cplx(0.1, 0.1), 0, 2.0)) < 1e-12);

  auto translation = make_translation_family();
  CHECK(std::abs(eval_k1(translation, cplx(0), 0, 0.0) - cplx(-1, 0)) < 1e-12);

  auto concave = make_concave_family();
  CHECK(eval_k2(concave, cplx(0), 0, 0.0) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("k2 does not depend on the choice of defining function") {
  // multiply phi by the positive factor exp(re(t)) + abs2(z)
  auto fam = make_concave_family();
  auto scaled = fam;
  scaled.phi = Expr::parse("(abs2(z) - 1 - abs2(t)) * (exp(re(t)) + abs2(z))");
  for (double th : {0.0, 1.1, 2.9})
    for (cplx t : {cplx(0), cplx(0.2, 0.1)}) {
      double k2a = eval_k2(fam, t, 0, th);
      double k2b = eval_k2(scaled, t, 0, th);
      CHECK(std::abs(k2a - k2b) < 1e-8);
      cplx k1a = eval_k1(fam, t, 0, th);
      cplx k1b = eval_k1(scaled, t, 0, th);
      CHECK(std::abs(k1a - k1b) < 1e-8);
    }
}

TEST_CASE("family validation") {
  auto fam = make_hartogs_family();
  CHECK_NOTHROW(fam.validate(0.4));
  auto broken = fam;
  broken.phi = Expr::parse("0.5*log(abs2(z)) - 0.5*(t + conj(t)) + 0.1");
  CHECK_THROWS_AS(broken.validate(0.2), InvalidDomain);
}

TEST_CASE("pole normalization turns the translation family into a product") {
  auto fam = make_translation_family().pole_normalized();
  for (cplx t : {cplx(0), cplx(0.3, -0.2)}) {
    MarkedDomain md = fam.domain_at(t);
    CHECK(std::abs(md.a()) < 1e-14);
    CHECK(std::abs(md.b() - cplx(0.25, 0)) < 1e-14);
    CHECK(std::abs(md.outer().point(0.0) - cplx(1, 0)) < 1e-13);
    CHECK(std::abs(eval_k1(fam, t, 0, 0.4)) < 1e-13);
  }
}

TEST_CASE("first variation formulas against closed forms") {
  VariationOptions opt;
  auto hartogs = make_hartogs_family();
  cplx fv = first_variation(hartogs, cplx(0), VariedQuantity::alpha, opt);
  CHECK(fv.real() == doctest::Approx(-1.0 / 15.0).epsilon(1e-7));
  CHECK(std::abs(fv.imag()) < 1e-9);

  // beta for the Hartogs family: beta(t) = 2 log 4 + log(1 - e^{-2 Re t}/16)
  // d beta/dt at 0 = +1/15 ... d/dt = (1/2) d/dx of log(1 - u e^{-2x}).
  cplx fb = first_variation(hartogs, cplx(0), VariedQuantity::beta, opt);
  CHECK(fb.real() == doctest::Approx(1.0 / 15.0).epsilon(1e-7));

  cplx fs = first_variation(hartogs, cplx(0), VariedQuantity::span, opt);
  CHECK(fs.real() == doctest::Approx(-2.0 / 15.0).epsilon(1e-7));

  auto product = make_product_family();
  CHECK(std::abs(first_variation(product, cplx(0), VariedQuantity::span, opt)) <
        1e-10);

  auto translation = make_translation_family();
  CHECK(std::abs(first_variation(translation, cplx(0.1, 0.1),
                                 VariedQuantity::span, opt)) < 1e-10);
}

TEST_CASE("finite differences cross-check the formulas and constants") {
  VariationOptions opt;
  auto hartogs = make_hartogs_family();
  cplx fd = fd_derivative(hartogs, cplx(0), VariedQuantity::alpha, FdOrder::dt, opt);
  CHECK(fd.real() == doctest::Approx(-1.0 / 15.0).epsilon(1e-6));
  CHECK(std::abs(fd - first_variation(hartogs, cplx(0), VariedQuantity::alpha, opt)) <
        1e-4);

  auto product = make_product_family();
  CHECK(std::abs(fd_derivative(product, cplx(0), VariedQuantity::span, FdOrder::dt,
                               opt)) < 1e-10);

  // concave family: span Laplacian -2/15 at t = 0
  auto concave = make_concave_family();
  cplx lap =
      fd_derivative(concave, cplx(0), VariedQuantity::span, FdOrder::laplacian, opt);
  CHECK(lap.real() == doctest::Approx(-2.0 / 15.0).epsilon(1e-5));

  CHECK_THROWS_AS(fd_derivative(hartogs, cplx(0.9995, 0), VariedQuantity::span,
                                FdOrder::dt, opt),
                  StencilOutOfDisk);
}

TEST_CASE("moving sections: the section term is what finite differences see") {
  VariationOptions opt;
  auto fam = make_moving_section_family();
  auto cmp = compare_span_first_variation(fam, cplx(0), opt);
  // truth: d/dt s(0.25 + 0.1 t) = 2 xi' conj(xi)/(1-|xi|^2) = 0.05333...
  double truth = 2.0 * 0.1 * 0.25 / (1 - 0.0625);
  CHECK(std::abs(cmp.fd - cplx(truth, 0)) < 1e-6);
  CHECK(std::abs(cmp.with_sections - cmp.fd) < 1e-6);
  CHECK(std::abs(cmp.bare - cmp.fd) > 1e-2);  // the bare form misses the term
}

TEST_CASE("second variation of the span on the Levi-flat Hartogs family") {
  VariationOptions opt;
  auto hartogs = make_hartogs_family();
  auto sv = second_variation_span(hartogs, cplx(0), opt);
  CHECK(std::abs(sv.boundary_term) < 1e-8);  // k2 = 0
  CHECK(sv.total == doctest::Approx(32.0 / 225.0).epsilon(1e-3));
  cplx lap =
      fd_derivative(hartogs, cplx(0), VariedQuantity::span, FdOrder::laplacian, opt);
  CHECK(std::abs(sv.total - lap.real()) < 1e-3 * std::abs(lap.real()));
}

TEST_CASE("subharmonicity scan flags") {
  VariationOptions opt;
  GridSpec grid{cplx(0), 0.3, 5};
  auto hart = subharmonicity_scan(make_hartogs_family(), grid, opt);
  CHECK(hart.pseudoconvex);
  CHECK(hart.span_subharmonic);
  CHECK(hart.beta_superharmonic);
  CHECK(hart.min_k2 >= -1e-10);
  for (int s : hart.status) CHECK(s == 0);

  auto conc = subharmonicity_scan(make_concave_family(), grid, opt);
  CHECK(conc.min_k2 == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK_FALSE(conc.span_subharmonic);
  int center = (grid.n / 2) * grid.n + grid.n / 2;
  CHECK(conc.lap_span[center] == doctest::Approx(-2.0 / 15.0).epsilon(2e-2));

  auto prod = subharmonicity_scan(make_product_family(), grid, opt);
  for (std::size_t i = 0; i < prod.lap_span.size(); ++i) {
    CHECK(std::abs(prod.lap_span[i]) < 1e-8);
    CHECK(std::abs(prod.lap_beta[i]) < 1e-8);
  }
}

TEST_CASE("log cosh d reports") {
  VariationOptions opt;
  GridSpec grid{cplx(0), 0.25, 5};
  auto rep = logcosh_subharmonicity(make_hartogs_family(), grid, opt);
  CHECK(rep.subharmonic);
  // closed form: delta(t) = -(1/2) log(1 - rho^2), rho = 0.25 e^{-Re t}
  for (std::size_t i = 0; i < rep.t.size(); ++i) {
    double rho = 0.25 * std::exp(-rep.t[i].real());
    CHECK(rep.delta[i] ==
          doctest::Approx(-0.5 * std::log(1 - rho * rho)).epsilon(1e-8));
  }

  auto trep = logcosh_subharmonicity(make_translation_family(), grid, opt);
  for (std::size_t i = 0; i < trep.lap_delta.size(); ++i)
    CHECK(std::abs(trep.lap_delta[i]) < 1e-7);

  DomainFamily annuli = make_product_family();
  annuli.curves.push_back(
      {{{1, Expr::constant(0.1), Expr::constant(0.0)},
        {0, Expr::constant(-0.5), Expr::constant(0.0)}},
       true});
  annuli.b = Expr::parse("0.25");
  GridSpec small{cplx(0), 0.05, 3};
  CHECK_THROWS_AS(logcosh_subharmonicity(annuli, small, opt), NotSimplyConnected);
}

TEST_CASE("S-function line restriction is strictly subharmonic") {
  auto md = MarkedDomain::create(build_curve({{1, 1.0}}, Orientation::positive), {},
                                 cplx(0), cplx(0.5, 0));
  GridSpec grid{cplx(0), 0.15, 5};
  auto rep = sfunction_psh_check(md, cplx(0), cplx(0), cplx(0.45, 0), cplx(1, 0),
                                 grid, 256);
  CHECK(rep.strictly_subharmonic);
  // closed form along the line: s = 2 log 1/(1 - |0.45 + u|^2)
  for (std::size_t i = 0; i < rep.u.size(); ++i) {
    if (rep.status[i]) continue;
    double r2 = std::norm(cplx(0.45, 0) + rep.u[i]);
    CHECK(rep.span[i] == doctest::Approx(-2 * std::log(1 - r2)).epsilon(1e-7));
  }

  CHECK_THROWS_AS(sfunction_psh_check(md, cplx(0), cplx(1, 0), cplx(0.02, 0),
                                      cplx(1, 0), grid, 256),
                  LineHitsDiagonal);
}

TEST_CASE("rigidity flags: trivial families flagged, Hartogs not") {
  VariationOptions opt;
  GridSpec grid{cplx(0), 0.1, 3};
  CHECK(rigidity_check(make_product_family(), grid, opt).trivial_candidate);
  CHECK(rigidity_check(make_translation_family(), grid, opt).trivial_candidate);
  auto hart = rigidity_check(make_hartogs_family(), grid, opt);
  CHECK_FALSE(hart.trivial_candidate);
  CHECK(hart.max_span_deviation > 1e-3);
}
