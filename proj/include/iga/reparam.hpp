#pragma once

#include <functional>
#include <string>

namespace iga {

enum class Convexity { strictly_convex, strictly_concave, neutral };

const char* to_string(Convexity c);

// A C^2 increasing bijection of [0,1]. The admissible maps have a second
// derivative of one strict sign; `neutral` admits the identity (and other
// maps without a convexity certificate) for anchoring tests, and is
// rejected by the operations whose theorems need strict convexity.
//
// Values are immutable after construction; concurrent reads are safe as
// long as the supplied callables are reentrant.
class Reparametrization {
 public:
  using Fn = std::function<double(double)>;

  // Validates phi(0)=0, phi(1)=1 to 1e-12 and the derivative signs on a
  // 1001-point grid (tolerance 1e-9 on the phi'' sign for declared
  // convex/concave maps). Throws std::invalid_argument on violation.
  Reparametrization(Fn eval, Fn deriv1, Fn deriv2, Convexity convexity,
                    std::string name = "custom");

  double operator()(double x) const { return eval_(x); }
  double eval(double x) const { return eval_(x); }
  double deriv1(double x) const { return d1_(x); }
  double deriv2(double x) const { return d2_(x); }
  Convexity convexity() const { return convexity_; }
  const std::string& name() const { return name_; }

  // phi'' of one sign makes phi' monotone, so the extrema sit at the
  // endpoints. For neutral maps these are the endpoint min/max only.
  double deriv1_min() const;
  double deriv1_max() const;

  // The unique x with phi'(x) = v, by bisection; |phi'(x) - v| ends up
  // below 1e-12 * max(1, |v|). Requires non-neutral convexity; v outside
  // the range of phi' throws std::out_of_range.
  double inverse_deriv(double v) const;

  static Reparametrization identity();

 private:
  Fn eval_, d1_, d2_;
  Convexity convexity_;
  std::string name_;
};

// phi_{a,b}(x) = e^{ax+b} - e^b + (gamma - a e^b) x with
// b = -ln((e^a - (a+1)) / (1-gamma)). Strictly convex, phi'(0) = gamma.
Reparametrization make_exp_convex(double a, double gamma);

// phi_{a,b}(x) = ln(ax+b) - ln(b) + (gamma - a/(a+b)) x with b = a/x*,
// where x* solves gamma = 1 - (ln(x*+1) - x*/(x*+1)). Strictly concave,
// phi'(1) = gamma. Note that b = a/x* makes the map independent of a:
// the family is a single curve per gamma.
Reparametrization make_log_concave(double a, double gamma);

}  // namespace iga
