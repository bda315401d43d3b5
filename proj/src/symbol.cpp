#include "iga/symbol.hpp"

#include <cmath>
#include <stdexcept>

#include "iga/bspline.hpp"
#include "iga/errors.hpp"
#include "iga/numerics.hpp"

namespace iga {

namespace {

void check_theta(double theta) {
  if (theta < 0.0 || theta > M_PI)
    throw std::invalid_argument("symbol: theta outside [0, pi]");
}

// g_q(theta) from integer samples of N_{2q+1}.
double cosine_sum(const std::vector<double>& samples, double theta) {
  double acc = samples[0];
  for (std::size_t k = 1; k < samples.size(); ++k)
    acc += 2.0 * samples[k] * std::cos(static_cast<double>(k) * theta);
  return acc;
}

std::vector<double> mass_samples_for(int q) {
  std::vector<double> s(static_cast<std::size_t>(q) + 1);
  for (int k = 0; k <= q; ++k)
    s[static_cast<std::size_t>(k)] =
        cardinal_bspline(2 * q + 1, static_cast<double>(q + 1 - k), 0);
  return s;
}

}  // namespace

SymbolEp::SymbolEp(int degree) : p_(degree) {
  if (degree < 1) throw std::invalid_argument("SymbolEp: degree < 1");
  mass_samples_ = mass_samples_for(p_);
  stiff_samples_.resize(static_cast<std::size_t>(p_) + 1);
  for (int k = 0; k <= p_; ++k)
    stiff_samples_[static_cast<std::size_t>(k)] =
        cardinal_bspline(2 * p_ + 1, static_cast<double>(p_ + 1 - k), 2);
  lower_samples_ = mass_samples_for(p_ - 1);
  e_max_ = e(M_PI);
}

double SymbolEp::f(double theta) const {
  check_theta(theta);
  // The integer samples of N''_{2p+1} sum to zero (second difference of a
  // partition of unity), so -N''(p+1) = 2 sum_k N''(p+1-k); folding that in
  // keeps f exactly 0 at theta = 0.
  double acc = 0.0;
  for (std::size_t k = 1; k < stiff_samples_.size(); ++k)
    acc += 2.0 * stiff_samples_[k] *
           (1.0 - std::cos(static_cast<double>(k) * theta));
  return acc;
}

double SymbolEp::g(double theta) const {
  check_theta(theta);
  return cosine_sum(mass_samples_, theta);
}

double SymbolEp::e(double theta) const { return f(theta) / g(theta); }

double SymbolEp::g_ratio(double theta) const {
  check_theta(theta);
  return cosine_sum(lower_samples_, theta) / cosine_sum(mass_samples_, theta);
}

double SymbolEp::e_factored(double theta) const {
  check_theta(theta);
  return (2.0 - 2.0 * std::cos(theta)) * g_ratio(theta);
}

double SymbolEp::inverse_e(double v) const {
  const double slack = 1e-12 * std::max(1.0, std::abs(v));
  if (v < -slack || v > e_max_ + slack)
    throw std::out_of_range("inverse_e: value outside [0, e_p(pi)]");
  if (v <= 0.0) return 0.0;
  if (v >= e_max_) return M_PI;
  return bisect_monotone([this](double t) { return e(t); }, 0.0, M_PI, v,
                         1e-13, 200);
}

std::pair<double, double> eval_fp_gp(int p, double theta) {
  check_theta(theta);
  if (p < 0) throw std::invalid_argument("eval_fp_gp: negative degree");
  const double gp = cosine_sum(mass_samples_for(p), theta);
  if (p == 0) return {0.0, gp};  // f_p is defined for p >= 1 only
  return {SymbolEp(p).f(theta), gp};
}

FullSymbol::FullSymbol(int degree, Reparametrization phi)
    : ep_(degree), phi_(std::move(phi)) {
  double d_min = 0.0;
  switch (phi_.convexity()) {
    case Convexity::strictly_convex: d_min = phi_.deriv1(0.0); break;
    case Convexity::strictly_concave: d_min = phi_.deriv1(1.0); break;
    case Convexity::neutral: d_min = phi_.deriv1_min(); break;
  }
  max_value_ = ep_.e_max() / (d_min * d_min);
}

double FullSymbol::sqrt_max() const { return std::sqrt(max_value_); }

double FullSymbol::omega(double x, double theta) const {
  if (x < 0.0 || x > 1.0)
    throw std::invalid_argument("FullSymbol::omega: x outside [0,1]");
  check_theta(theta);
  const double d = phi_.deriv1(x);
  return ep_.e(theta) / (d * d);
}

}  // namespace iga
