#pragma once

#include <utility>
#include <vector>

#include "iga/distribution.hpp"
#include "iga/eigensolve.hpp"

namespace iga {

// --- Discrete Weyl's law -------------------------------------------------

// One discretization level: sup_y |G_n(y) - Psi(y)/pi| with the sup taken
// over the step-function jump points plus the probe grid, and the probe
// table of pointwise errors.
struct WeylEntry {
  int n = 0;
  int N = 0;
  double sup_error = 0.0;
  std::vector<std::pair<double, double>> pointwise;  // (y, |G - Psi/pi|)
};

struct WeylReport {
  std::vector<int> n_values;
  std::vector<double> sup_errors;
  std::vector<std::vector<std::pair<double, double>>> pointwise_errors;
  bool nonincreasing = false;
};

WeylEntry weyl_counting(const DiscreteSpectrum& spec, const PsiFunction& psi,
                        const std::vector<double>& probe_y);
WeylReport merge_weyl(const std::vector<WeylEntry>& entries);

// G_n^p(y) = |{k : normalized frequency_k <= y}| / (N+1).
double counting_function(const DiscreteSpectrum& spec, double y);

// --- Eigenfrequency estimates --------------------------------------------

struct EstimateReport {
  double abs_error = 0.0;           // max_k |freq_k - sqrt(xi)(k/(N+1))|
  double weighted_rel_error = 0.0;  // max_k (k/(N+1))|freq_k/xi_k - 1|
  double uniform_rel_error = 0.0;   // max_k |freq_k/xi_k - 1|
  std::vector<std::pair<int, double>> beta_probe;  // freq_k/(gamma k/(N+1))
};

EstimateReport estimate_errors(const DiscreteSpectrum& spec,
                               const Rearrangement& re,
                               const GammaSlope& gamma);

// --- Eigenfrequency ordering ----------------------------------------------

// Conclusions are asserted only when hypothesis_verified: the Psi gap
// Psi_{phi1}(sqrt y) - Psi_{phi2}(sqrt y) must be positive on the probe
// grid. The interval is in normalized-eigenvalue units (y = lambda/n^2).
struct OrderingReport {
  double y_lo = 0.0, y_hi = 0.0;
  double psi_gap_min = 0.0;
  bool hypothesis_verified = false;
  int pairs_checked = 0;
  std::vector<int> violations;  // 1-based indices k
};

OrderingReport verify_ordering(const DiscreteSpectrum& spec1,
                               const DiscreteSpectrum& spec2,
                               const PsiFunction& psi1,
                               const PsiFunction& psi2,
                               std::pair<double, double> interval,
                               int probe_count);

// The guaranteed ordering window for a family pair: both strictly convex
// with phi1'(0) = phi2'(0) and phi1' >= phi2' up to the first zero x0 of
// phi1' - phi2', or both strictly concave with phi1'(1) = phi2'(1) and
// phi1' >= phi2' from the last zero on. Returns
// (e_p(pi)/phi1'(x0)^2, e_p(pi)/phi1'(0 or 1)^2).
std::pair<double, double> ordering_hypothesis_from_family(
    const Reparametrization& phi1, const Reparametrization& phi2, int p);

// Closed interval strictly inside an open window; the ordering hypothesis
// degenerates to a zero gap at the window endpoints.
std::pair<double, double> closed_subinterval(std::pair<double, double> open_iv,
                                             double margin_fraction = 1e-3);

// --- Pack counts -----------------------------------------------------------

enum class Monotonic { increasing, decreasing, mixed };
const char* to_string(Monotonic m);

struct PackReport {
  double y0 = 0.0, yr = 0.0;
  int r = 0;
  std::vector<long> counts;  // frequencies in (y_{i-1}, y_i]
  Monotonic monotonic = Monotonic::mixed;
};

PackReport pack_counts(const DiscreteSpectrum& spec,
                       std::pair<double, double> interval, int r);

// --- Outlier statistics ----------------------------------------------------

struct OutlierRow {
  int n = 0;
  int N = 0;
  int outliers = 0;
  double ratio = 0.0;  // OUT / N
};

struct OutlierTrend {
  std::vector<OutlierRow> rows;
  bool constant_outliers = false;
  bool ratio_nonincreasing = false;
};

// Runs the assembly/eigensolve pipeline over the n ladder.
OutlierTrend outlier_trend(int p, const Reparametrization& phi,
                           const std::vector<int>& n_values);

}  // namespace iga
