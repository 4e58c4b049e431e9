#include "hsl/span.hpp"

#include <cmath>

namespace hsl {

SpanResult harmonic_span(const PrincipalPair& pair) {
  SpanResult r;
  r.alpha = pair.alpha;
  r.beta = pair.beta;
  r.s = pair.alpha - pair.beta;
  r.s_from_area = 2.0 / kPi * e_log_area(pair);
  r.fingerprint = pair.grid->domain->fingerprint();
  r.a = pair.a();
  r.b = pair.b();
  return r;
}

SpanResult harmonic_span(const MarkedDomain& domain, int N) {
  return harmonic_span(compute_principal_pair(domain, N));
}

double poincare_distance(const MarkedDomain& domain, int N) {
  if (domain.nu() != 1)
    throw NotSimplyConnected("Poincare distance requires a simply connected domain");
  auto md = std::make_shared<MarkedDomain>(domain);
  auto grid = sample_boundary(md, N);
  HarmonicField g = green_function(grid, domain.a());
  double rho = std::exp(-g.value(domain.b()));
  return 0.5 * std::log((1.0 + rho) / (1.0 - rho));
}

double span_distance_residual(const MarkedDomain& domain, int N) {
  double s = harmonic_span(domain, N).s;
  double d = poincare_distance(domain, N);
  return std::abs(s - 4.0 * std::log(std::cosh(d)));
}

double poincare_distance_via_map(const MarkedDomain& domain, int N) {
  if (domain.nu() != 1)
    throw NotSimplyConnected("Poincare distance requires a simply connected domain");
  auto md = std::make_shared<MarkedDomain>(domain);
  auto grid = sample_boundary(md, N);
  HarmonicField g = green_function(grid, domain.a());

  // phi = (z - a) exp(-f) with f the completion of the Dirichlet corrector;
  // |phi| = exp(-g) maps the domain onto the unit disk with phi(a) = 0.
  auto f_bnd = g.completion_boundary(0);
  const auto& cg = grid->curves[0];
  std::vector<cplx> phi(grid->N);
  for (int i = 0; i < grid->N; ++i)
    phi[i] = (cg.z[i] - domain.a()) * std::exp(-f_bnd[i]);

  // Reconstruct phi(b) from the boundary correspondence alone.
  cplx acc(0);
  for (int m = 0; m < grid->N; ++m)
    acc += phi[m] * cg.dz[m] / (cg.z[m] - domain.b());
  cplx phib = acc * (kTwoPi / grid->N) / cplx(0, kTwoPi);

  double rho = std::abs(phib);
  return 0.5 * std::log((1.0 + rho) / (1.0 - rho));
}

SFunctionGrid s_function_grid(const MarkedDomain& domain, cplx xi,
                              const std::vector<cplx>& etas, int N) {
  SFunctionGrid out;
  out.xi = xi;
  out.eta = etas;
  out.span.assign(etas.size(), 0.0);
  out.status.assign(etas.size(), 0);

  auto probe = sample_boundary(std::make_shared<MarkedDomain>(domain), N);
  double refuse_band = 10.0 * probe->max_spacing();

  parallel_for(etas.size(), [&](std::size_t k) {
    cplx eta = etas[k];
    if (std::abs(eta - xi) < refuse_band ||
        contains(domain, eta, N) != PointClass::inside ||
        contains(domain, xi, N) != PointClass::inside) {
      out.status[k] = 1;
      return;
    }
    try {
      out.span[k] = harmonic_span(domain.with_points(xi, eta), N).s;
    } catch (const std::exception&) {
      out.status[k] = 2;
    }
  });
  return out;
}

ExhaustionResult exhaustion_sequence(const std::vector<MarkedDomain>& nested,
                                     const MarkedDomain& full, int N) {
  // Nesting: every boundary sample of D_n must not be outside D_{n+1}.
  auto check = [&](const MarkedDomain& inner, const MarkedDomain& outer) {
    for (int j = 0; j < inner.nu(); ++j)
      for (int m = 0; m < 128; ++m) {
        cplx z = inner.curve(j).point(kTwoPi * m / 128);
        if (contains(outer, z, N) == PointClass::outside)
          throw NotNested("boundary sample escapes the next domain");
      }
  };
  for (std::size_t n = 0; n + 1 < nested.size(); ++n) check(nested[n], nested[n + 1]);
  if (!nested.empty()) check(nested.back(), full);

  ExhaustionResult res;
  res.spans.resize(nested.size());
  parallel_for(nested.size(), [&](std::size_t n) {
    res.spans[n] = harmonic_span(nested[n].with_points(full.a(), full.b()), N).s;
  });
  for (std::size_t n = 0; n + 1 < res.spans.size(); ++n)
    if (res.spans[n + 1] > res.spans[n] + 1e-8)
      throw NotNested("spans increase along the exhaustion");
  res.full_span = harmonic_span(full, N).s;
  res.gap = res.spans.empty() ? 0.0 : res.spans.back() - res.full_span;
  return res;
}

}  // namespace hsl
