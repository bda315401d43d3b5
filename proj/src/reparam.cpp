#include "iga/reparam.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "iga/errors.hpp"
#include "iga/numerics.hpp"

namespace iga {

namespace {

constexpr int kValidationGrid = 1000;
constexpr double kEndpointTol = 1e-12;
constexpr double kSignTol = 1e-9;

}  // namespace

const char* to_string(Convexity c) {
  switch (c) {
    case Convexity::strictly_convex: return "strictly_convex";
    case Convexity::strictly_concave: return "strictly_concave";
    case Convexity::neutral: return "neutral";
  }
  return "?";
}

Reparametrization::Reparametrization(Fn eval, Fn deriv1, Fn deriv2,
                                     Convexity convexity, std::string name)
    : eval_(std::move(eval)),
      d1_(std::move(deriv1)),
      d2_(std::move(deriv2)),
      convexity_(convexity),
      name_(std::move(name)) {
  if (std::abs(eval_(0.0)) > kEndpointTol)
    throw std::invalid_argument("Reparametrization: phi(0) != 0");
  if (std::abs(eval_(1.0) - 1.0) > kEndpointTol)
    throw std::invalid_argument("Reparametrization: phi(1) != 1");
  for (int i = 0; i <= kValidationGrid; ++i) {
    const double x = static_cast<double>(i) / kValidationGrid;
    if (!(d1_(x) > 0.0))
      throw std::invalid_argument("Reparametrization: phi' <= 0 on the grid");
    const double d2 = d2_(x);
    if (convexity_ == Convexity::strictly_convex && d2 < -kSignTol)
      throw std::invalid_argument("Reparametrization: declared convex, phi'' < 0");
    if (convexity_ == Convexity::strictly_concave && d2 > kSignTol)
      throw std::invalid_argument("Reparametrization: declared concave, phi'' > 0");
  }
}

double Reparametrization::deriv1_min() const {
  return std::min(d1_(0.0), d1_(1.0));
}

double Reparametrization::deriv1_max() const {
  return std::max(d1_(0.0), d1_(1.0));
}

double Reparametrization::inverse_deriv(double v) const {
  if (convexity_ == Convexity::neutral)
    throw unsupported_operation(
        "inverse_deriv: phi' is not strictly monotone for a neutral map");
  const double lo = deriv1_min(), hi = deriv1_max();
  const double slack = 1e-12 * std::max(1.0, std::abs(v));
  if (v < lo - slack || v > hi + slack)
    throw std::out_of_range("inverse_deriv: value outside the range of phi'");
  if (v <= lo) return convexity_ == Convexity::strictly_convex ? 0.0 : 1.0;
  if (v >= hi) return convexity_ == Convexity::strictly_convex ? 1.0 : 0.0;
  const double x = bisect_monotone([this](double t) { return d1_(t); }, 0.0,
                                   1.0, v, 1e-13, 200);
  return x;
}

Reparametrization Reparametrization::identity() {
  return Reparametrization([](double x) { return x; },
                           [](double) { return 1.0; },
                           [](double) { return 0.0; }, Convexity::neutral,
                           "identity");
}

Reparametrization make_exp_convex(double a, double gamma) {
  if (!(a > 0.0)) throw std::invalid_argument("make_exp_convex: a <= 0");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("make_exp_convex: gamma outside (0,1)");
  const double denom = std::exp(a) - (a + 1.0);  // > 0 for a > 0
  const double eb = (1.0 - gamma) / denom;       // e^b
  const double b = std::log(eb);
  const double slope = gamma - a * eb;
  auto eval = [a, b, eb, slope](double x) {
    return std::exp(a * x + b) - eb + slope * x;
  };
  auto d1 = [a, b, slope](double x) { return a * std::exp(a * x + b) + slope; };
  auto d2 = [a, b](double x) { return a * a * std::exp(a * x + b); };
  return Reparametrization(eval, d1, d2, Convexity::strictly_convex,
                           "exp_convex(a=" + std::to_string(a) +
                               ",gamma=" + std::to_string(gamma) + ")");
}

Reparametrization make_log_concave(double a, double gamma) {
  if (!(a > 0.0)) throw std::invalid_argument("make_log_concave: a <= 0");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("make_log_concave: gamma outside (0,1)");
  // x* solves ln(x*+1) - x*/(x*+1) = 1 - gamma; the left side increases
  // from 0 to infinity, so expand the bracket until it covers the target.
  auto rho = [](double t) { return std::log1p(t) - t / (t + 1.0); };
  double hi = 1.0;
  int guard = 0;
  while (rho(hi) < 1.0 - gamma) {
    hi *= 2.0;
    if (++guard > 100)
      throw numerical_error("make_log_concave: bracket expansion failed");
  }
  const double x_star = bisect_monotone(rho, 0.0, hi, 1.0 - gamma, 1e-13, 200);
  const double b = a / x_star;
  const double slope = gamma - a / (a + b);
  const double log_b = std::log(b);
  auto eval = [a, b, log_b, slope](double x) {
    return std::log(a * x + b) - log_b + slope * x;
  };
  auto d1 = [a, b, slope](double x) { return a / (a * x + b) + slope; };
  auto d2 = [a, b](double x) {
    const double t = a * x + b;
    return -a * a / (t * t);
  };
  return Reparametrization(eval, d1, d2, Convexity::strictly_concave,
                           "log_concave(a=" + std::to_string(a) +
                               ",gamma=" + std::to_string(gamma) + ")");
}

}  // namespace iga
