#pragma once

#include <string>
#include <vector>

#include "iga/symbol.hpp"

namespace iga {

// How Psi(y) = mu_2{ sqrt(omega) <= y } is evaluated.
//  explicit_p1:    p = 1 only; x-integral of the arccos closed form,
//                  valid for any phi with phi' > 0.
//  integral_1d:    theta-integral over the level set, using (phi')^{-1};
//                  needs strict convexity or concavity.
//  grid_2d_oracle: midpoint indicator counting on a res x res tensor
//                  grid; slow reference, handles every map.
enum class PsiMethod { explicit_p1, integral_1d, grid_2d_oracle };

const char* to_string(PsiMethod m);
PsiMethod psi_method_from_string(const std::string& s);

class PsiFunction {
 public:
  PsiFunction(FullSymbol sym, PsiMethod method, int grid_resolution = 2048);

  double operator()(double y) const;
  const FullSymbol& symbol() const { return sym_; }
  PsiMethod method() const { return method_; }
  double y_max() const { return sym_.sqrt_max(); }

  static PsiMethod default_method(int p) {
    return p == 1 ? PsiMethod::explicit_p1 : PsiMethod::integral_1d;
  }

 private:
  double eval_explicit_p1(double y) const;
  double eval_integral_1d(double y) const;
  double eval_grid(double y) const;

  FullSymbol sym_;
  PsiMethod method_;
  int res_;
  std::vector<double> ep_grid_;  // e_p at theta column midpoints
};

// Monotone rearrangement sqrt(xi)(x) = Psi^{-1}(pi x) on [0,1].
class Rearrangement {
 public:
  explicit Rearrangement(PsiFunction psi) : psi_(std::move(psi)) {}

  double operator()(double x) const;
  const PsiFunction& psi() const { return psi_; }

 private:
  PsiFunction psi_;
};

// Psi'(0) with the slope gamma = pi / Psi'(0) of sqrt(xi) at 0.
// For p = 1 the exact value is 1; for p >= 2 the estimate is checked
// against [(2/pi)^{(p+1)/2}, (pi/2)^{(p-1)/2}] with 5% slack.
struct GammaSlope {
  double psi_prime_at_zero = 0.0;
  double gamma = 0.0;
  double bound_lo = 0.0;
  double bound_hi = 0.0;
  bool within_bounds = false;
  std::string warning;  // set when the estimate violates the bounds
};

GammaSlope slope_at_zero(const PsiFunction& psi);

// sqrt(xi)(x)/(gamma x) for small x; tends to 1 as x -> 0.
double xi_linear_check(const Rearrangement& re, const GammaSlope& gs,
                       double x_small);

}  // namespace iga
