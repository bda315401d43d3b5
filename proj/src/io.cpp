#include "iga/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace iga {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_spectrum_csv(const DiscreteSpectrum& spec, std::ostream& os) {
  os << "k,lambda,normalized_frequency,is_outlier\n";
  for (int k = 1; k <= spec.N; ++k) {
    const std::size_t i = static_cast<std::size_t>(k - 1);
    os << k << ',' << format_g17(spec.eigenvalues[i]) << ','
       << format_g17(spec.normalized_frequencies[i]) << ','
       << (k > spec.inlier_count() ? 1 : 0) << '\n';
  }
}

void write_symbol_grid_csv(const FullSymbol& sym, int x_res, int theta_res,
                           std::ostream& os) {
  os << "x,theta,omega\n";
  for (int i = 0; i <= x_res; ++i) {
    const double x = static_cast<double>(i) / x_res;
    for (int j = 0; j <= theta_res; ++j) {
      const double theta = M_PI * j / theta_res;
      os << format_g17(x) << ',' << format_g17(theta) << ','
         << format_g17(sym.omega(x, theta)) << '\n';
    }
  }
}

void write_psi_table_csv(const PsiFunction& psi, int count, std::ostream& os) {
  os << "y,psi\n";
  for (int i = 0; i <= count; ++i) {
    const double y = psi.y_max() * i / count;
    os << format_g17(y) << ',' << format_g17(psi(y)) << '\n';
  }
}

void write_xi_table_csv(const Rearrangement& re, int count, std::ostream& os) {
  os << "x,sqrt_xi\n";
  for (int i = 0; i <= count; ++i) {
    const double x = static_cast<double>(i) / count;
    os << format_g17(x) << ',' << format_g17(re(x)) << '\n';
  }
}

void write_weyl_csv(const WeylReport& report, std::ostream& os) {
  os << "n,sup_error\n";
  for (std::size_t i = 0; i < report.n_values.size(); ++i)
    os << report.n_values[i] << ',' << format_g17(report.sup_errors[i])
       << '\n';
}

void write_estimate_csv(const std::vector<int>& n_values,
                        const std::vector<EstimateReport>& reports,
                        std::ostream& os) {
  os << "n,abs_error,weighted_rel_error,uniform_rel_error\n";
  for (std::size_t i = 0; i < n_values.size(); ++i)
    os << n_values[i] << ',' << format_g17(reports[i].abs_error) << ','
       << format_g17(reports[i].weighted_rel_error) << ','
       << format_g17(reports[i].uniform_rel_error) << '\n';
}

void write_pack_csv(const PackReport& report, std::ostream& os) {
  os << "i,y_lo,y_hi,count\n";
  for (int i = 1; i <= report.r; ++i) {
    const double ya = report.y0 + (report.yr - report.y0) * (i - 1) / report.r;
    const double yb = report.y0 + (report.yr - report.y0) * i / report.r;
    os << i << ',' << format_g17(ya) << ',' << format_g17(yb) << ','
       << report.counts[static_cast<std::size_t>(i - 1)] << '\n';
  }
}

json spectrum_summary_json(const DiscreteSpectrum& spec) {
  json j;
  j["p"] = spec.p;
  j["n"] = spec.n;
  j["N"] = spec.N;
  j["outlier_count"] = spec.outlier_count;
  j["max_range"] = spec.max_range;
  j["near_degenerate"] = spec.near_degenerate;
  j["min_eigenvalue"] = spec.eigenvalues.front();
  j["max_eigenvalue"] = spec.eigenvalues.back();
  j["max_normalized_eigenvalue"] =
      spec.eigenvalues.back() / (static_cast<double>(spec.n) * spec.n);
  return j;
}

json weyl_json(const WeylReport& report) {
  json j;
  j["n_values"] = report.n_values;
  j["sup_errors"] = report.sup_errors;
  j["nonincreasing"] = report.nonincreasing;
  json tables = json::array();
  for (std::size_t i = 0; i < report.n_values.size(); ++i) {
    json t;
    t["n"] = report.n_values[i];
    json rows = json::array();
    for (const auto& [y, err] : report.pointwise_errors[i])
      rows.push_back({y, err});
    t["pointwise"] = rows;
    tables.push_back(t);
  }
  j["tables"] = tables;
  return j;
}

json gamma_json(const GammaSlope& gamma) {
  json j;
  j["psi_prime_at_zero"] = gamma.psi_prime_at_zero;
  j["gamma"] = gamma.gamma;
  j["bound_lo"] = gamma.bound_lo;
  j["bound_hi"] = gamma.bound_hi;
  j["within_bounds"] = gamma.within_bounds;
  if (!gamma.warning.empty()) j["warning"] = gamma.warning;
  return j;
}

json estimate_json(const std::vector<int>& n_values,
                   const std::vector<EstimateReport>& reports,
                   const GammaSlope& gamma,
                   const std::vector<int>& outlier_counts) {
  json j;
  j["n_values"] = n_values;
  if (!outlier_counts.empty()) j["outlier_counts"] = outlier_counts;
  json abs = json::array(), wrel = json::array(), urel = json::array();
  json beta = json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    abs.push_back(reports[i].abs_error);
    wrel.push_back(reports[i].weighted_rel_error);
    urel.push_back(reports[i].uniform_rel_error);
    json b;
    b["n"] = n_values[i];
    json entries = json::array();
    for (const auto& [k, ratio] : reports[i].beta_probe)
      entries.push_back({k, ratio});
    b["entries"] = entries;
    beta.push_back(b);
  }
  j["abs_errors"] = abs;
  j["weighted_rel_errors"] = wrel;
  j["uniform_rel_errors"] = urel;
  j["beta_probes"] = beta;
  j["gamma"] = gamma_json(gamma);
  return j;
}

json ordering_json(const OrderingReport& report) {
  json j;
  j["interval"] = {report.y_lo, report.y_hi};
  j["psi_gap_min"] = report.psi_gap_min;
  j["hypothesis_verified"] = report.hypothesis_verified;
  j["pairs_checked"] = report.pairs_checked;
  j["violations"] = report.violations;
  return j;
}

json pack_json(const PackReport& report) {
  json j;
  j["interval"] = {report.y0, report.yr};
  j["r"] = report.r;
  j["counts"] = report.counts;
  j["monotonic"] = to_string(report.monotonic);
  return j;
}

json outlier_trend_json(const OutlierTrend& trend) {
  json j;
  json rows = json::array();
  for (const auto& row : trend.rows) {
    json r;
    r["n"] = row.n;
    r["N"] = row.N;
    r["outliers"] = row.outliers;
    r["ratio"] = row.ratio;
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["constant_outliers"] = trend.constant_outliers;
  j["ratio_nonincreasing"] = trend.ratio_nonincreasing;
  return j;
}

}  // namespace iga
