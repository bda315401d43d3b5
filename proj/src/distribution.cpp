#include "iga/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "iga/errors.hpp"
#include "iga/numerics.hpp"

namespace iga {

namespace {

constexpr double kIntegralTol = 1e-10;

// e_1^{-1}(w) in closed form; pi for w past e_1(pi) = 12.
double arccos_branch(double w) {
  if (w >= 12.0) return M_PI;
  const double arg = (6.0 - 2.0 * w) / (6.0 + w);
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

}  // namespace

const char* to_string(PsiMethod m) {
  switch (m) {
    case PsiMethod::explicit_p1: return "explicit_p1";
    case PsiMethod::integral_1d: return "integral_1d";
    case PsiMethod::grid_2d_oracle: return "grid_2d_oracle";
  }
  return "?";
}

PsiMethod psi_method_from_string(const std::string& s) {
  if (s == "explicit_p1") return PsiMethod::explicit_p1;
  if (s == "integral_1d") return PsiMethod::integral_1d;
  if (s == "grid_2d_oracle") return PsiMethod::grid_2d_oracle;
  throw std::invalid_argument("unknown psi method: " + s);
}

PsiFunction::PsiFunction(FullSymbol sym, PsiMethod method, int grid_resolution)
    : sym_(std::move(sym)), method_(method), res_(grid_resolution) {
  switch (method_) {
    case PsiMethod::explicit_p1:
      if (sym_.degree() != 1)
        throw std::invalid_argument("PsiFunction: explicit_p1 needs p = 1");
      break;
    case PsiMethod::integral_1d:
      if (sym_.phi().convexity() == Convexity::neutral)
        throw unsupported_operation(
            "PsiFunction: integral_1d needs a strictly convex or concave map");
      break;
    case PsiMethod::grid_2d_oracle: {
      if (res_ < 16)
        throw std::invalid_argument("PsiFunction: grid resolution too small");
      ep_grid_.resize(static_cast<std::size_t>(res_));
      for (int j = 0; j < res_; ++j)
        ep_grid_[static_cast<std::size_t>(j)] =
            sym_.ep().e(M_PI * (j + 0.5) / res_);
      break;
    }
  }
}

double PsiFunction::operator()(double y) const {
  if (y <= 0.0) return 0.0;
  switch (method_) {
    case PsiMethod::explicit_p1: return eval_explicit_p1(y);
    case PsiMethod::integral_1d: return eval_integral_1d(y);
    case PsiMethod::grid_2d_oracle: return eval_grid(y);
  }
  return 0.0;
}

// Psi(y) = int_0^1 e_1^{-1}(min((y phi'(x))^2, 12)) dx. The two branches of
// the closed form correspond to whether y phi'(x) passes sqrt(12); the
// integral is split there so each adaptive pass sees a smooth piece.
double PsiFunction::eval_explicit_p1(double y) const {
  const Reparametrization& phi = sym_.phi();
  if (y >= y_max()) return M_PI;

  auto integrand = [&](double x) {
    const double t = y * phi.deriv1(x);
    return arccos_branch(t * t);
  };

  const double crit = std::sqrt(12.0) / y;  // phi' level where w hits 12
  const double d_lo = phi.deriv1_min(), d_hi = phi.deriv1_max();
  if (phi.convexity() != Convexity::neutral && crit > d_lo && crit < d_hi) {
    const double xb = phi.inverse_deriv(crit);
    if (phi.convexity() == Convexity::strictly_convex)
      return adaptive_simpson(integrand, 0.0, xb, kIntegralTol) +
             M_PI * (1.0 - xb);
    return M_PI * xb + adaptive_simpson(integrand, xb, 1.0, kIntegralTol);
  }
  return adaptive_simpson(integrand, 0.0, 1.0, kIntegralTol);
}

// Theta-first evaluation: Psi(y) = theta_lo + int_{theta_lo}^{theta_hi}
// mu{ x : phi'(x) >= sqrt(e_p(theta))/y } dtheta, where below theta_lo the
// whole x-fiber is in the sublevel set and above theta_hi none of it is.
double PsiFunction::eval_integral_1d(double y) const {
  const Reparametrization& phi = sym_.phi();
  const SymbolEp& ep = sym_.ep();
  const double e_max = ep.e_max();
  const double d_lo = phi.deriv1_min(), d_hi = phi.deriv1_max();

  const double w_lo = (y * d_lo) * (y * d_lo);
  if (w_lo >= e_max) return M_PI;
  const double theta_lo = ep.inverse_e(w_lo);
  const double w_hi = (y * d_hi) * (y * d_hi);
  const double theta_hi = w_hi >= e_max ? M_PI : ep.inverse_e(w_hi);

  const bool convex = phi.convexity() == Convexity::strictly_convex;
  auto fiber = [&](double theta) {
    const double v =
        std::clamp(std::sqrt(std::max(ep.e(theta), 0.0)) / y, d_lo, d_hi);
    const double xv = phi.inverse_deriv(v);
    return convex ? 1.0 - xv : xv;
  };
  return theta_lo + adaptive_simpson(fiber, theta_lo, theta_hi, kIntegralTol);
}

double PsiFunction::eval_grid(double y) const {
  const Reparametrization& phi = sym_.phi();
  long count = 0;
  for (int i = 0; i < res_; ++i) {
    const double x = (i + 0.5) / res_;
    const double t = y * phi.deriv1(x);
    const double w = t * t;
    count += std::upper_bound(ep_grid_.begin(), ep_grid_.end(), w) -
             ep_grid_.begin();
  }
  return M_PI * static_cast<double>(count) /
         (static_cast<double>(res_) * res_);
}

double Rearrangement::operator()(double x) const {
  if (x < 0.0 || x > 1.0)
    throw std::invalid_argument("Rearrangement: x outside [0,1]");
  if (x == 0.0) return 0.0;
  const double y_max = psi_.y_max();
  if (x == 1.0) return y_max;
  return bisect_monotone([this](double y) { return psi_(y); }, 0.0, y_max,
                         M_PI * x, 1e-11, 200);
}

GammaSlope slope_at_zero(const PsiFunction& psi) {
  const Reparametrization& phi = psi.symbol().phi();
  if (phi.convexity() == Convexity::neutral)
    throw unsupported_operation(
        "slope_at_zero: needs a strictly convex or concave map");
  const int p = psi.symbol().degree();

  // The grid oracle cannot resolve Psi(y)/y at the probe scale; fall back
  // to the analytic method for the limit.
  const PsiFunction* eval = &psi;
  PsiFunction fallback = psi;
  if (psi.method() == PsiMethod::grid_2d_oracle) {
    fallback = PsiFunction(psi.symbol(), PsiFunction::default_method(p));
    eval = &fallback;
  }

  const double y_max = psi.y_max();
  const double r1 = (*eval)(1e-2 * y_max) / (1e-2 * y_max);
  const double r2 = (*eval)(5e-3 * y_max) / (5e-3 * y_max);
  const double r3 = (*eval)(2.5e-3 * y_max) / (2.5e-3 * y_max);
  // Richardson for an error expansion in even powers of y.
  const double a = (4.0 * r2 - r1) / 3.0;
  const double b = (4.0 * r3 - r2) / 3.0;
  const double slope = (16.0 * b - a) / 15.0;

  GammaSlope gs;
  gs.psi_prime_at_zero = slope;
  gs.gamma = M_PI / slope;
  if (p == 1) {
    gs.bound_lo = gs.bound_hi = 1.0;
  } else {
    gs.bound_lo = std::pow(2.0 / M_PI, 0.5 * (p + 1));
    gs.bound_hi = std::pow(M_PI / 2.0, 0.5 * (p - 1));
  }
  gs.within_bounds =
      slope >= gs.bound_lo * 0.95 && slope <= gs.bound_hi * 1.05;
  if (!gs.within_bounds)
    gs.warning = "Psi'(0) estimate " + std::to_string(slope) +
                 " violates the expected bounds [" +
                 std::to_string(gs.bound_lo) + ", " +
                 std::to_string(gs.bound_hi) + "] by more than 5%";
  return gs;
}

double xi_linear_check(const Rearrangement& re, const GammaSlope& gs,
                       double x_small) {
  if (!(x_small > 0.0 && x_small <= 0.05))
    throw std::invalid_argument("xi_linear_check: x_small outside (0, 0.05]");
  return re(x_small) / (gs.gamma * x_small);
}

}  // namespace iga
