#include "iga/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "iga/errors.hpp"
#include "iga/numerics.hpp"
#include "iga/symbol.hpp"

namespace iga {

const char* to_string(Monotonic m) {
  switch (m) {
    case Monotonic::increasing: return "increasing";
    case Monotonic::decreasing: return "decreasing";
    case Monotonic::mixed: return "mixed";
  }
  return "?";
}

double counting_function(const DiscreteSpectrum& spec, double y) {
  const auto& freq = spec.normalized_frequencies;
  const auto count = std::upper_bound(freq.begin(), freq.end(), y) -
                     freq.begin();
  return static_cast<double>(count) / (spec.N + 1);
}

WeylEntry weyl_counting(const DiscreteSpectrum& spec, const PsiFunction& psi,
                        const std::vector<double>& probe_y) {
  if (spec.eigenvalues.empty())
    throw std::invalid_argument("weyl_counting: empty spectrum");
  const double y_max = psi.y_max();
  const auto& freq = spec.normalized_frequencies;

  WeylEntry entry;
  entry.n = spec.n;
  entry.N = spec.N;

  double sup = 0.0;
  // The sup of |step - Psi/pi| over each flat piece is attained at the
  // jumps: compare both one-sided values of G there.
  for (int k = 0; k < spec.inlier_count(); ++k) {
    const double y = freq[static_cast<std::size_t>(k)];
    if (y > y_max) break;
    const double target = psi(y) / M_PI;
    const double g_left =
        static_cast<double>(std::lower_bound(freq.begin(), freq.end(), y) -
                            freq.begin()) /
        (spec.N + 1);
    const double g_right = counting_function(spec, y);
    sup = std::max({sup, std::abs(g_left - target),
                    std::abs(g_right - target)});
  }
  // Right end of the range: all inliers counted, Psi(y_max)/pi = 1.
  sup = std::max(sup, std::abs(counting_function(spec, y_max) -
                               psi(y_max) / M_PI));

  for (double y : probe_y) {
    if (y < 0.0 || y > y_max)
      throw std::invalid_argument("weyl_counting: probe outside range");
    const double err = std::abs(counting_function(spec, y) - psi(y) / M_PI);
    entry.pointwise.emplace_back(y, err);
    sup = std::max(sup, err);
  }
  entry.sup_error = sup;
  return entry;
}

WeylReport merge_weyl(const std::vector<WeylEntry>& entries) {
  WeylReport report;
  report.nonincreasing = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    report.n_values.push_back(entries[i].n);
    report.sup_errors.push_back(entries[i].sup_error);
    report.pointwise_errors.push_back(entries[i].pointwise);
    if (i > 0 && entries[i].sup_error > entries[i - 1].sup_error)
      report.nonincreasing = false;
  }
  return report;
}

EstimateReport estimate_errors(const DiscreteSpectrum& spec,
                               const Rearrangement& re,
                               const GammaSlope& gamma) {
  if (spec.p != re.psi().symbol().degree())
    throw std::invalid_argument("estimate_errors: degree mismatch");
  EstimateReport report;
  const auto& freq = spec.normalized_frequencies;
  const int inliers = spec.inlier_count();
  for (int k = 1; k <= inliers; ++k) {
    const double x = static_cast<double>(k) / (spec.N + 1);
    const double xi = re(x);
    const double f = freq[static_cast<std::size_t>(k - 1)];
    report.abs_error = std::max(report.abs_error, std::abs(f - xi));
    const double rel = std::abs(f / xi - 1.0);
    report.weighted_rel_error = std::max(report.weighted_rel_error, x * rel);
    report.uniform_rel_error = std::max(report.uniform_rel_error, rel);
  }
  const int root = static_cast<int>(std::ceil(std::sqrt(spec.N)));
  for (int k : {1, 2, root}) {
    if (k < 1 || k > inliers) continue;
    if (!report.beta_probe.empty() && report.beta_probe.back().first == k)
      continue;
    const double x = static_cast<double>(k) / (spec.N + 1);
    report.beta_probe.emplace_back(
        k, freq[static_cast<std::size_t>(k - 1)] / (gamma.gamma * x));
  }
  return report;
}

OrderingReport verify_ordering(const DiscreteSpectrum& spec1,
                               const DiscreteSpectrum& spec2,
                               const PsiFunction& psi1,
                               const PsiFunction& psi2,
                               std::pair<double, double> interval,
                               int probe_count) {
  if (spec1.p != spec2.p || spec1.n != spec2.n)
    throw std::invalid_argument("verify_ordering: spectra use different (p,n)");
  if (probe_count < 2)
    throw std::invalid_argument("verify_ordering: probe_count < 2");
  const auto [y_lo, y_hi] = interval;
  const double range_cap =
      std::min(psi1.symbol().max_value(), psi2.symbol().max_value());
  if (!(y_lo >= 0.0 && y_lo < y_hi && y_hi <= range_cap * (1.0 + 1e-12)))
    throw std::invalid_argument(
        "verify_ordering: interval not inside the common symbol range");

  OrderingReport report;
  report.y_lo = y_lo;
  report.y_hi = y_hi;
  report.psi_gap_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < probe_count; ++i) {
    const double y = y_lo + (y_hi - y_lo) * i / (probe_count - 1);
    const double gap = psi1(std::sqrt(y)) - psi2(std::sqrt(y));
    report.psi_gap_min = std::min(report.psi_gap_min, gap);
  }
  report.hypothesis_verified = report.psi_gap_min > 0.0;

  const double n2 = static_cast<double>(spec1.n) * spec1.n;
  for (int k = 1; k <= spec1.N; ++k) {
    const double nl1 = spec1.eigenvalues[static_cast<std::size_t>(k - 1)] / n2;
    const double nl2 = spec2.eigenvalues[static_cast<std::size_t>(k - 1)] / n2;
    if (nl1 < y_lo || nl1 > y_hi || nl2 < y_lo || nl2 > y_hi) continue;
    ++report.pairs_checked;
    if (!(std::sqrt(spec1.eigenvalues[static_cast<std::size_t>(k - 1)]) <
          std::sqrt(spec2.eigenvalues[static_cast<std::size_t>(k - 1)])))
      report.violations.push_back(k);
  }
  return report;
}

std::pair<double, double> ordering_hypothesis_from_family(
    const Reparametrization& phi1, const Reparametrization& phi2, int p) {
  const bool convex = phi1.convexity() == Convexity::strictly_convex &&
                      phi2.convexity() == Convexity::strictly_convex;
  const bool concave = phi1.convexity() == Convexity::strictly_concave &&
                       phi2.convexity() == Convexity::strictly_concave;
  if (!convex && !concave)
    throw std::invalid_argument(
        "ordering_hypothesis_from_family: invalid-pair, need two strictly "
        "convex or two strictly concave maps");
  const double anchor = convex ? 0.0 : 1.0;
  if (std::abs(phi1.deriv1(anchor) - phi2.deriv1(anchor)) > 1e-10)
    throw std::invalid_argument(
        "ordering_hypothesis_from_family: invalid-pair, phi' mismatch at the "
        "anchored endpoint");

  // Sign scan of d = phi1' - phi2' on a 1000-point grid. Convex pairs need
  // the first zero with d >= 0 before it; concave pairs the last zero with
  // d >= 0 after it.
  constexpr int kGrid = 1000;
  auto d = [&](double x) { return phi1.deriv1(x) - phi2.deriv1(x); };
  double x0 = -1.0;
  if (convex) {
    int i = 1;
    for (; i < kGrid; ++i) {
      const double xa = static_cast<double>(i) / kGrid;
      const double da = d(xa);
      if (da < 0.0) break;
    }
    if (i == 1 || i == kGrid)
      throw std::invalid_argument(
          "ordering_hypothesis_from_family: invalid-pair, no sign change of "
          "phi1' - phi2' in (0,1)");
    const double lo = static_cast<double>(i - 1) / kGrid;
    const double hi = static_cast<double>(i) / kGrid;
    x0 = bisect_monotone(d, lo, hi, 0.0, 1e-13, 200);
  } else {
    int i = kGrid - 1;
    for (; i > 0; --i) {
      const double xa = static_cast<double>(i) / kGrid;
      if (d(xa) < 0.0) break;
    }
    if (i == kGrid - 1 || i == 0)
      throw std::invalid_argument(
          "ordering_hypothesis_from_family: invalid-pair, no sign change of "
          "phi1' - phi2' in (0,1)");
    const double lo = static_cast<double>(i) / kGrid;
    const double hi = static_cast<double>(i + 1) / kGrid;
    x0 = bisect_monotone(d, lo, hi, 0.0, 1e-13, 200);
  }

  // Dominance of phi1' on the anchored side, sampled on the same grid.
  for (int i = 0; i <= kGrid; ++i) {
    const double s = static_cast<double>(i) / kGrid;
    const double x = convex ? x0 * s : x0 + (1.0 - x0) * s;
    if (d(x) < -1e-12)
      throw std::invalid_argument(
          "ordering_hypothesis_from_family: invalid-pair, phi1' < phi2' on "
          "the anchored side");
  }

  const double e_pi = SymbolEp(p).e_max();
  const double d_at_x0 = phi1.deriv1(x0);
  const double d_at_anchor = phi1.deriv1(anchor);
  return {e_pi / (d_at_x0 * d_at_x0), e_pi / (d_at_anchor * d_at_anchor)};
}

std::pair<double, double> closed_subinterval(std::pair<double, double> open_iv,
                                             double margin_fraction) {
  const double margin = (open_iv.second - open_iv.first) * margin_fraction;
  return {open_iv.first + margin, open_iv.second - margin};
}

PackReport pack_counts(const DiscreteSpectrum& spec,
                       std::pair<double, double> interval, int r) {
  if (r < 2) throw std::invalid_argument("pack_counts: r < 2");
  const auto [y0, yr] = interval;
  if (!(y0 < yr)) throw std::invalid_argument("pack_counts: empty interval");
  PackReport report;
  report.y0 = y0;
  report.yr = yr;
  report.r = r;
  const auto& freq = spec.normalized_frequencies;
  auto count_leq = [&](double y) {
    return std::upper_bound(freq.begin(), freq.end(), y) - freq.begin();
  };
  bool increasing = true, decreasing = true;
  long prev = 0;
  for (int i = 1; i <= r; ++i) {
    const double ya = y0 + (yr - y0) * (i - 1) / r;
    const double yb = i == r ? yr : y0 + (yr - y0) * i / r;
    const long c = count_leq(yb) - count_leq(ya);
    if (i > 1) {
      if (c <= prev) increasing = false;
      if (c >= prev) decreasing = false;
    }
    report.counts.push_back(c);
    prev = c;
  }
  report.monotonic = increasing   ? Monotonic::increasing
                     : decreasing ? Monotonic::decreasing
                                  : Monotonic::mixed;
  return report;
}

OutlierTrend outlier_trend(int p, const Reparametrization& phi,
                           const std::vector<int>& n_values) {
  if (n_values.size() < 3)
    throw std::invalid_argument("outlier_trend: need at least 3 n values");
  for (std::size_t i = 1; i < n_values.size(); ++i)
    if (n_values[i] <= n_values[i - 1])
      throw std::invalid_argument("outlier_trend: n values not ascending");

  OutlierTrend trend;
  trend.constant_outliers = true;
  trend.ratio_nonincreasing = true;
  const FullSymbol sym(p, phi);
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    const int n = n_values[i];
    const auto M = assemble_mass(p, n, phi);
    const auto K = assemble_stiffness(p, n, phi);
    const auto spec = solve_spectrum(M, K, p, n, sym.max_value());
    OutlierRow row;
    row.n = n;
    row.N = spec.N;
    row.outliers = spec.outlier_count;
    row.ratio = static_cast<double>(spec.outlier_count) / spec.N;
    if (i > 0) {
      if (row.outliers != trend.rows.back().outliers)
        trend.constant_outliers = false;
      if (row.ratio > trend.rows.back().ratio)
        trend.ratio_nonincreasing = false;
    }
    trend.rows.push_back(row);
  }
  return trend;
}

}  // namespace iga
