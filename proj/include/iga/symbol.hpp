#pragma once

#include <utility>
#include <vector>

#include "iga/reparam.hpp"

namespace iga {

// Trigonometric polynomials built from integer samples of the cardinal
// B-spline N_{2p+1}:
//   f_p(t) = -N''(p+1) - 2 sum_k N''(p+1-k) cos(kt)      (stiffness symbol)
//   g_p(t) =  N(p+1)   + 2 sum_k N(p+1-k)  cos(kt)       (mass symbol)
//   e_p(t) = f_p(t) / g_p(t), increasing on [0, pi], e_p(0) = 0.
// The factored route e_p = (2 - 2cos t) g_{p-1}/g_p follows from
// N''_{2p+1} being the second difference of N_{2p-1} samples.
class SymbolEp {
 public:
  explicit SymbolEp(int degree);

  int degree() const { return p_; }
  double f(double theta) const;
  double g(double theta) const;
  double e(double theta) const;
  double e_factored(double theta) const;  // (2-2cos)g_{p-1}/g_p
  double g_ratio(double theta) const;     // g_{p-1}(theta)/g_p(theta)
  double e_max() const { return e_max_; }

  // theta with e_p(theta) = v, v in [0, e_p(pi)], by bisection.
  double inverse_e(double v) const;

 private:
  int p_;
  std::vector<double> mass_samples_;    // N_{2p+1}(p+1-k), k = 0..p
  std::vector<double> stiff_samples_;   // N''_{2p+1}(p+1-k), k = 0..p
  std::vector<double> lower_samples_;   // N_{2p-1}(p-k), k = 0..p-1
  double e_max_ = 0.0;
};

// (f_p(theta), g_p(theta)); f requires p >= 1, g accepts p >= 0.
std::pair<double, double> eval_fp_gp(int p, double theta);

// Full IGA GLT symbol omega(x, theta) = e_p(theta) / phi'(x)^2 on
// [0,1] x [0,pi]; its range is [0, max_value].
class FullSymbol {
 public:
  FullSymbol(int degree, Reparametrization phi);

  const SymbolEp& ep() const { return ep_; }
  const Reparametrization& phi() const { return phi_; }
  int degree() const { return ep_.degree(); }
  double max_value() const { return max_value_; }
  double sqrt_max() const;  // max Rg(sqrt omega)

  double omega(double x, double theta) const;

 private:
  SymbolEp ep_;
  Reparametrization phi_;
  double max_value_;
};

}  // namespace iga
