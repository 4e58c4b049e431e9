#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "hsl/acceptance.hpp"
#include "hsl/io.hpp"
#include "hsl/span.hpp"

namespace {

using namespace hsl;

struct CommonOpts {
  int nodes = 256;
  int grid_n = 9;
  double center_re = 0, center_im = 0;
  double grid_radius = 0.3;
  double ht = 1e-3;
  std::string out_dir = ".";
  std::string emit = "csv,json";
};

bool wants(const CommonOpts& o, const std::string& kind) {
  return o.emit.find(kind) != std::string::npos;
}

void check_common(const CommonOpts& o) {
  if (o.nodes < 16 || o.nodes % 2 != 0)
    throw ParseError("--nodes must be even and >= 16", 0);
  if (o.grid_n < 3 || o.grid_n % 2 == 0)
    throw ParseError("--grid must be odd and >= 3", 0);
}

int cmd_span(const std::string& path, const CommonOpts& opts) {
  MarkedDomain md = load_domain(path);
  auto pair = std::make_shared<PrincipalPair>(compute_principal_pair(md, opts.nodes));
  SpanResult span = harmonic_span(*pair);
  auto slits = extract_slit_data(pair);

  JsonWriter w;
  w.begin_object();
  w.field("alpha", span.alpha);
  w.field("beta", span.beta);
  w.field("span", span.s);
  w.field("e_log", kPi / 2.0 * span.s_from_area);
  w.field("area_identity_residual", span.s_from_area - span.s);
  if (md.nu() == 1) {
    double d = poincare_distance(md, opts.nodes);
    w.field("poincare_distance", d);
    w.field("distance_identity_residual",
            span.s - 4.0 * std::log(std::cosh(d)));
  }
  w.begin_array("circular_slits");
  for (const auto& s : slits.circular) {
    w.begin_object();
    w.field("r", s.r);
    w.field("theta1", s.theta1);
    w.field("theta2", s.theta2);
    w.end_object();
  }
  w.end_array();
  w.begin_array("radial_slits");
  for (const auto& s : slits.radial) {
    w.begin_object();
    w.field("theta", s.theta);
    w.field("r1", s.r1);
    w.field("r2", s.r2);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  std::cout << w.str() << "\n";

  if (wants(opts, "svg")) {
    std::filesystem::create_directories(opts.out_dir);
    write_file(opts.out_dir + "/slits.svg", svg_slits(slits, "slit images"));
  }
  return 0;
}

int cmd_scan(const std::string& path, const CommonOpts& opts) {
  DomainFamily fam = load_family(path);
  GridSpec grid{cplx(opts.center_re, opts.center_im), opts.grid_radius, opts.grid_n};
  fam.validate(std::min(0.9 * fam.radius,
                        std::abs(grid.center) + grid.radius * 1.5 + 2 * opts.ht));
  VariationOptions vopt;
  vopt.N = opts.nodes;
  vopt.h_t = opts.ht;
  auto rep = subharmonicity_scan(fam, grid, vopt);

  std::filesystem::create_directories(opts.out_dir);
  if (wants(opts, "csv")) {
    CsvWriter csv({"t_re", "t_im", "span", "alpha", "beta", "lap_span", "lap_beta",
                   "min_k2", "status"});
    for (std::size_t i = 0; i < rep.t.size(); ++i)
      csv.row({fmt_g9(rep.t[i].real()), fmt_g9(rep.t[i].imag()), fmt_g9(rep.span[i]),
               fmt_g9(rep.alpha[i]), fmt_g9(rep.beta[i]), fmt_g9(rep.lap_span[i]),
               fmt_g9(rep.lap_beta[i]), fmt_g9(rep.min_k2),
               std::to_string(rep.status[i])});
    write_file(opts.out_dir + "/scan.csv", csv.str());
  }
  if (wants(opts, "json")) {
    JsonWriter w;
    w.begin_object();
    w.field("pseudoconvex", rep.pseudoconvex);
    w.field("span_subharmonic", rep.span_subharmonic);
    w.field("beta_superharmonic", rep.beta_superharmonic);
    w.field("min_k2", rep.min_k2);
    w.field("tol", rep.tol);
    w.end_object();
    write_file(opts.out_dir + "/verdict.json", w.str());
  }
  if (wants(opts, "svg")) {
    write_file(opts.out_dir + "/span_heatmap.svg",
               svg_heatmap(rep.t, rep.span, rep.status, grid.n, "span(t)"));
    auto md = std::make_shared<MarkedDomain>(fam.domain_at(grid.center));
    auto pair =
        std::make_shared<PrincipalPair>(compute_principal_pair(md, vopt.N));
    write_file(opts.out_dir + "/slits_center.svg",
               svg_slits(extract_slit_data(pair), "slit images at t = center"));
  }
  std::cout << "scan written to " << opts.out_dir << "\n";
  return 0;
}

int cmd_sfunction(const std::string& path, double xi_re, double xi_im,
                  const CommonOpts& opts) {
  MarkedDomain md = load_domain(path);
  cplx xi(xi_re, xi_im);
  GridSpec grid{cplx(opts.center_re, opts.center_im), opts.grid_radius, opts.grid_n};
  std::vector<cplx> etas;
  for (int iy = 0; iy < grid.n; ++iy)
    for (int ix = 0; ix < grid.n; ++ix) etas.push_back(grid.point(ix, iy));
  auto res = s_function_grid(md, xi, etas, opts.nodes);

  std::filesystem::create_directories(opts.out_dir);
  CsvWriter csv({"eta_re", "eta_im", "span", "status"});
  for (std::size_t i = 0; i < etas.size(); ++i)
    csv.row({fmt_g9(etas[i].real()), fmt_g9(etas[i].imag()),
             res.status[i] == 0 ? fmt_g9(res.span[i]) : "",
             std::to_string(res.status[i])});
  write_file(opts.out_dir + "/sfunction.csv", csv.str());
  if (wants(opts, "svg"))
    write_file(opts.out_dir + "/sfunction.svg",
               svg_heatmap(etas, res.span, res.status, grid.n, "s(xi, eta)"));
  std::cout << "sfunction written to " << opts.out_dir << "\n";
  return 0;
}

int cmd_verify(const std::string& suite) {
  auto results = run_acceptance(suite);
  std::cout << format_results(results);
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"harmonic span and conformal slit map toolkit"};
  app.require_subcommand(1);
  CommonOpts opts;

  std::string domain_path, family_path, suite = "all";
  double xi_re = 0, xi_im = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--nodes", opts.nodes, "boundary nodes per curve (even, >= 16)");
    cmd->add_option("--grid", opts.grid_n, "grid points per side (odd)");
    cmd->add_option("--center", [&opts](const std::vector<std::string>& vals) {
      return std::sscanf(vals[0].c_str(), "%lf,%lf", &opts.center_re,
                         &opts.center_im) == 2;
    }, "grid center as re,im");
    cmd->add_option("--radius", opts.grid_radius, "grid half-width");
    cmd->add_option("--ht", opts.ht, "finite-difference step in t");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--emit", opts.emit, "comma list of csv,json,svg");
  };

  auto* span_cmd = app.add_subcommand("span", "alpha, beta, span and slit data of a domain");
  span_cmd->add_option("domain", domain_path, "domain JSON file")->required();
  add_common(span_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "variation scan over a t-grid");
  scan_cmd->add_option("family", family_path, "family JSON file")->required();
  add_common(scan_cmd);

  auto* sf_cmd = app.add_subcommand("sfunction", "S-function grid for a fixed xi");
  sf_cmd->add_option("domain", domain_path, "domain JSON file")->required();
  sf_cmd->add_option("--xi-re", xi_re, "Re xi");
  sf_cmd->add_option("--xi-im", xi_im, "Im xi");
  add_common(sf_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run an acceptance suite");
  verify_cmd->add_option("suite", suite, "disk | identities | variation | all");

  CLI11_PARSE(app, argc, argv);

  try {
    check_common(opts);
    if (span_cmd->parsed()) return cmd_span(domain_path, opts);
    if (scan_cmd->parsed()) return cmd_scan(family_path, opts);
    if (sf_cmd->parsed()) return cmd_sfunction(domain_path, xi_re, xi_im, opts);
    if (verify_cmd->parsed()) return cmd_verify(suite);
  } catch (const hsl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const hsl::InvalidDomain& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
