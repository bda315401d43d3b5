// Experiment driver for the reparametrized IGA Laplace eigenproblem:
// spectra, GLT symbol tables, Weyl counting, eigenfrequency ordering,
// pack counts, and symbol-sampling estimates, written as CSV/JSON files.
//
// Exit codes: 0 success, 1 check failure, 2 usage or validation error,
// 3 numerical error.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "iga/analysis.hpp"
#include "iga/errors.hpp"
#include "iga/io.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonOpts {
  int p = 1;
  std::string family = "identity";
  std::optional<double> a;
  std::optional<double> gamma;
  std::string psi_method = "auto";
  int grid_res = 2048;
  std::string out_dir = ".";
  unsigned seed = 0;  // reserved for randomized probes
  bool check = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--p", opts.p, "spline degree")->check(CLI::PositiveNumber);
  cmd->add_option("--family", opts.family, "identity|exp_convex|log_concave")
      ->check(CLI::IsMember({"identity", "exp_convex", "log_concave"}));
  cmd->add_option("--a", opts.a, "family parameter a");
  cmd->add_option("--gamma", opts.gamma, "family parameter gamma in (0,1)");
  cmd->add_option("--psi-method", opts.psi_method,
                  "auto|explicit_p1|integral_1d|grid_2d_oracle");
  cmd->add_option("--grid-res", opts.grid_res, "grid oracle resolution");
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--seed", opts.seed, "seed for randomized probes");
  cmd->add_flag("--check", opts.check, "turn report properties into exit codes");
}

iga::Reparametrization make_phi(const CommonOpts& opts) {
  if (opts.family == "identity") return iga::Reparametrization::identity();
  if (!opts.a)
    throw std::invalid_argument("family '" + opts.family +
                                "' requires --a");
  if (!opts.gamma)
    throw std::invalid_argument("family '" + opts.family +
                                "' requires --gamma");
  if (opts.family == "exp_convex") return iga::make_exp_convex(*opts.a, *opts.gamma);
  return iga::make_log_concave(*opts.a, *opts.gamma);
}

iga::PsiFunction make_psi(const CommonOpts& opts,
                          const iga::Reparametrization& phi) {
  const iga::FullSymbol sym(opts.p, phi);
  const iga::PsiMethod method =
      opts.psi_method == "auto" ? iga::PsiFunction::default_method(opts.p)
                                : iga::psi_method_from_string(opts.psi_method);
  return iga::PsiFunction(sym, method, opts.grid_res);
}

iga::DiscreteSpectrum run_pipeline(int p, int n,
                                   const iga::Reparametrization& phi) {
  const iga::FullSymbol sym(p, phi);
  return iga::solve_spectrum(iga::assemble_mass(p, n, phi),
                             iga::assemble_stiffness(p, n, phi), p, n,
                             sym.max_value());
}

std::ofstream open_out(const CommonOpts& opts, const std::string& name) {
  fs::create_directories(opts.out_dir);
  std::ofstream os(fs::path(opts.out_dir) / name);
  if (!os) throw std::invalid_argument("cannot open output file " + name);
  return os;
}

void write_json(const CommonOpts& opts, const std::string& name,
                const iga::json& j) {
  auto os = open_out(opts, name);
  os << j.dump(2) << '\n';
}

std::vector<int> parse_ladder(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma - pos);
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty n ladder");
  return out;
}

iga::json config_echo(const CommonOpts& opts) {
  iga::json j;
  j["p"] = opts.p;
  j["family"] = opts.family;
  if (opts.a) j["a"] = *opts.a;
  if (opts.gamma) j["gamma"] = *opts.gamma;
  j["psi_method"] = opts.psi_method;
  j["seed"] = opts.seed;
  return j;
}

// --- subcommand bodies, each returns the process exit code ---

int cmd_spectrum(const CommonOpts& opts, int n, bool dump_matrices) {
  const auto phi = make_phi(opts);
  const iga::FullSymbol sym(opts.p, phi);
  const auto M = iga::assemble_mass(opts.p, n, phi);
  const auto K = iga::assemble_stiffness(opts.p, n, phi);
  const auto spec = iga::solve_spectrum(M, K, opts.p, n, sym.max_value());
  {
    auto os = open_out(opts, "spectrum.csv");
    iga::write_spectrum_csv(spec, os);
  }
  auto summary = iga::spectrum_summary_json(spec);
  summary["config"] = config_echo(opts);
  write_json(opts, "summary.json", summary);
  if (dump_matrices) {
    auto mos = open_out(opts, "mass.txt");
    iga::dump_triplets(M, mos);
    auto kos = open_out(opts, "stiffness.txt");
    iga::dump_triplets(K, kos);
  }
  std::cout << "spectrum: N=" << spec.N << " outliers=" << spec.outlier_count
            << "\n";
  return 0;
}

int cmd_symbol(const CommonOpts& opts, int x_res, int theta_res,
               int table_points) {
  const auto phi = make_phi(opts);
  const iga::FullSymbol sym(opts.p, phi);
  {
    auto os = open_out(opts, "omega_grid.csv");
    iga::write_symbol_grid_csv(sym, x_res, theta_res, os);
  }
  const auto psi = make_psi(opts, phi);
  {
    auto os = open_out(opts, "psi.csv");
    iga::write_psi_table_csv(psi, table_points, os);
  }
  {
    auto os = open_out(opts, "xi.csv");
    const iga::Rearrangement re(psi);
    iga::write_xi_table_csv(re, table_points, os);
  }
  std::cout << "symbol: max omega=" << iga::format_g17(sym.max_value())
            << "\n";
  return 0;
}

int cmd_weyl(const CommonOpts& opts, const std::string& ladder, int probes) {
  const auto phi = make_phi(opts);
  const auto psi = make_psi(opts, phi);
  std::vector<double> probe_y;
  for (int i = 0; i < probes; ++i)
    probe_y.push_back(psi.y_max() * i / (probes - 1));
  std::vector<iga::WeylEntry> entries;
  for (int n : parse_ladder(ladder))
    entries.push_back(
        iga::weyl_counting(run_pipeline(opts.p, n, phi), psi, probe_y));
  const auto report = iga::merge_weyl(entries);
  {
    auto os = open_out(opts, "weyl.csv");
    iga::write_weyl_csv(report, os);
  }
  auto j = iga::weyl_json(report);
  j["config"] = config_echo(opts);
  write_json(opts, "weyl.json", j);
  for (std::size_t i = 0; i < report.n_values.size(); ++i)
    std::cout << "weyl: n=" << report.n_values[i]
              << " sup_error=" << iga::format_g17(report.sup_errors[i])
              << "\n";
  if (opts.check && !report.nonincreasing) {
    std::cerr << "check failed: sup errors are not nonincreasing\n";
    return 1;
  }
  return 0;
}

struct PairSpec {
  std::string family;
  double a;
};

PairSpec parse_pair_item(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("pair item '" + s + "' is not family:a");
  PairSpec ps;
  ps.family = s.substr(0, colon);
  ps.a = std::stod(s.substr(colon + 1));
  if (ps.family != "exp" && ps.family != "log")
    throw std::invalid_argument("pair family must be exp or log");
  return ps;
}

iga::Reparametrization build_pair_member(const PairSpec& ps, double gamma) {
  return ps.family == "exp" ? iga::make_exp_convex(ps.a, gamma)
                            : iga::make_log_concave(ps.a, gamma);
}

int cmd_order(const CommonOpts& opts, int n, const std::string& pair,
              int probes) {
  if (!opts.gamma)
    throw std::invalid_argument("order requires --gamma for the pair");
  const auto comma = pair.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--pair wants 'family:a,family:a'");
  const auto spec_a = parse_pair_item(pair.substr(0, comma));
  const auto spec_b = parse_pair_item(pair.substr(comma + 1));
  auto phi_a = build_pair_member(spec_a, *opts.gamma);
  auto phi_b = build_pair_member(spec_b, *opts.gamma);

  // Theorem roles: phi1 must dominate near the anchored endpoint. Try the
  // given order, then the swap.
  std::pair<double, double> window;
  bool swapped = false;
  try {
    window = iga::ordering_hypothesis_from_family(phi_a, phi_b, opts.p);
  } catch (const std::invalid_argument&) {
    window = iga::ordering_hypothesis_from_family(phi_b, phi_a, opts.p);
    std::swap(phi_a, phi_b);
    swapped = true;
  }
  const auto interval = iga::closed_subinterval(window);

  const iga::FullSymbol sym1(opts.p, phi_a), sym2(opts.p, phi_b);
  const iga::PsiMethod method =
      opts.psi_method == "auto" ? iga::PsiFunction::default_method(opts.p)
                                : iga::psi_method_from_string(opts.psi_method);
  const iga::PsiFunction psi1(sym1, method, opts.grid_res);
  const iga::PsiFunction psi2(sym2, method, opts.grid_res);
  const auto s1 = run_pipeline(opts.p, n, phi_a);
  const auto s2 = run_pipeline(opts.p, n, phi_b);
  const auto report = iga::verify_ordering(s1, s2, psi1, psi2, interval,
                                           probes);

  auto j = iga::ordering_json(report);
  j["phi1"] = phi_a.name();
  j["phi2"] = phi_b.name();
  j["swapped_input_order"] = swapped;
  j["config"] = config_echo(opts);
  write_json(opts, "order.json", j);
  std::cout << "order: phi1=" << phi_a.name() << " phi2=" << phi_b.name()
            << " gap_min=" << iga::format_g17(report.psi_gap_min)
            << " pairs=" << report.pairs_checked
            << " violations=" << report.violations.size() << "\n";
  if (opts.check &&
      (!report.hypothesis_verified || !report.violations.empty())) {
    std::cerr << "check failed: ordering hypothesis or conclusion violated\n";
    return 1;
  }
  return 0;
}

int cmd_pack(const CommonOpts& opts, int n, const std::string& window, int r) {
  const auto phi = make_phi(opts);
  const auto spec = run_pipeline(opts.p, n, phi);
  std::pair<double, double> interval;
  bool auto_concave = window == "auto-concave";
  if (auto_concave) {
    if (opts.p != 1)
      throw std::invalid_argument(
          "auto-concave window uses the p=1 concavity certificate");
    const double edge = std::sqrt(6.0) / phi.deriv1(1.0);
    interval = {0.1 * edge, 0.9 * edge};
  } else {
    const auto comma = window.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--window wants 'lo,hi' or auto-concave");
    interval = {std::stod(window.substr(0, comma)),
                std::stod(window.substr(comma + 1))};
  }
  const auto report = iga::pack_counts(spec, interval, r);
  {
    auto os = open_out(opts, "pack.csv");
    iga::write_pack_csv(report, os);
  }
  auto j = iga::pack_json(report);
  j["auto_concave_window"] = auto_concave;
  j["config"] = config_echo(opts);
  write_json(opts, "pack.json", j);
  std::cout << "pack: counts=";
  for (long c : report.counts) std::cout << c << ' ';
  std::cout << "(" << iga::to_string(report.monotonic) << ")\n";
  if (opts.check && auto_concave &&
      report.monotonic != iga::Monotonic::decreasing) {
    std::cerr << "check failed: counts not strictly decreasing on the "
                 "concavity window\n";
    return 1;
  }
  return 0;
}

int cmd_estimate(const CommonOpts& opts, const std::string& ladder) {
  const auto phi = make_phi(opts);
  const auto psi = make_psi(opts, phi);
  const iga::Rearrangement re(psi);
  const auto gamma = iga::slope_at_zero(psi);
  std::vector<int> n_values = parse_ladder(ladder);
  std::vector<iga::EstimateReport> reports;
  std::vector<int> outlier_counts;
  for (int n : n_values) {
    const auto spec = run_pipeline(opts.p, n, phi);
    outlier_counts.push_back(spec.outlier_count);
    reports.push_back(iga::estimate_errors(spec, re, gamma));
  }
  {
    auto os = open_out(opts, "estimate.csv");
    iga::write_estimate_csv(n_values, reports, os);
  }
  auto j = iga::estimate_json(n_values, reports, gamma, outlier_counts);
  j["config"] = config_echo(opts);
  write_json(opts, "estimate.json", j);
  for (std::size_t i = 0; i < n_values.size(); ++i)
    std::cout << "estimate: n=" << n_values[i]
              << " abs_error=" << iga::format_g17(reports[i].abs_error)
              << "\n";
  if (opts.check) {
    bool decreasing = true;
    for (std::size_t i = 1; i < reports.size(); ++i)
      if (reports[i].abs_error >= reports[i - 1].abs_error) decreasing = false;
    if (!decreasing || reports.back().abs_error >= 0.02) {
      std::cerr << "check failed: abs errors not strictly decreasing below "
                   "0.02\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IGA Laplace eigenfrequency experiments"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file (flags override)");

  CommonOpts opts;
  int n = 64;
  std::string ladder = "64,128,256,512";
  int probes = 1000;
  bool dump_matrices = false;
  int x_res = 64, theta_res = 64, table_points = 256;
  std::string pair;
  std::string window = "auto-concave";
  int r = 8;

  auto* spectrum = app.add_subcommand("spectrum", "assemble and solve");
  add_common(spectrum, opts);
  spectrum->add_option("--n", n, "mesh intervals");
  spectrum->add_flag("--dump-matrices", dump_matrices,
                     "write mass/stiffness triplet files");

  auto* symbol = app.add_subcommand("symbol", "sample the GLT symbol");
  add_common(symbol, opts);
  symbol->add_option("--x-res", x_res, "omega grid x resolution");
  symbol->add_option("--theta-res", theta_res, "omega grid theta resolution");
  symbol->add_option("--table-points", table_points, "psi/xi table rows");

  auto* weyl = app.add_subcommand("weyl", "uniform discrete Weyl law");
  add_common(weyl, opts);
  weyl->add_option("--n-ladder", ladder, "comma-separated n values");
  weyl->add_option("--probes", probes, "probe grid size");

  auto* order = app.add_subcommand("order", "eigenfrequency ordering");
  add_common(order, opts);
  order->add_option("--n", n, "mesh intervals");
  order->add_option("--pair", pair, "family:a,family:a")->required();
  order->add_option("--probes", probes, "hypothesis probe count");

  auto* pack = app.add_subcommand("pack", "pack counts over a window");
  add_common(pack, opts);
  pack->add_option("--n", n, "mesh intervals");
  pack->add_option("--window", window, "'lo,hi' or auto-concave");
  pack->add_option("--r", r, "number of cells");

  auto* estimate = app.add_subcommand("estimate", "symbol sampling estimates");
  add_common(estimate, opts);
  estimate->add_option("--n-ladder", ladder, "comma-separated n values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(opts, n, dump_matrices);
    if (symbol->parsed()) return cmd_symbol(opts, x_res, theta_res, table_points);
    if (weyl->parsed()) return cmd_weyl(opts, ladder, probes);
    if (order->parsed()) return cmd_order(opts, n, pair, probes);
    if (pack->parsed()) return cmd_pack(opts, n, window, r);
    if (estimate->parsed()) return cmd_estimate(opts, ladder);
  } catch (const iga::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const iga::invalid_reparametrization& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
