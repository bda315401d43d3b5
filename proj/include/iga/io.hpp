#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "iga/analysis.hpp"
#include "iga/distribution.hpp"
#include "iga/eigensolve.hpp"

namespace iga {

using json = nlohmann::ordered_json;

// Fixed float formatting for byte-identical outputs: %.17g.
std::string format_g17(double v);

// CSV writers (RFC-4180-style, header row, '\n' line endings).
void write_spectrum_csv(const DiscreteSpectrum& spec, std::ostream& os);
void write_symbol_grid_csv(const FullSymbol& sym, int x_res, int theta_res,
                           std::ostream& os);
void write_psi_table_csv(const PsiFunction& psi, int count, std::ostream& os);
void write_xi_table_csv(const Rearrangement& re, int count, std::ostream& os);
void write_weyl_csv(const WeylReport& report, std::ostream& os);
void write_estimate_csv(const std::vector<int>& n_values,
                        const std::vector<EstimateReport>& reports,
                        std::ostream& os);
void write_pack_csv(const PackReport& report, std::ostream& os);

// JSON report builders (stable insertion-ordered keys).
json spectrum_summary_json(const DiscreteSpectrum& spec);
json weyl_json(const WeylReport& report);
json estimate_json(const std::vector<int>& n_values,
                   const std::vector<EstimateReport>& reports,
                   const GammaSlope& gamma,
                   const std::vector<int>& outlier_counts = {});
json ordering_json(const OrderingReport& report);
json pack_json(const PackReport& report);
json outlier_trend_json(const OutlierTrend& trend);
json gamma_json(const GammaSlope& gamma);

}  // namespace iga
