#pragma once

#include <functional>
#include <vector>

namespace iga {

// Root of f(x) = target for f strictly monotone on [lo, hi].
// Plain bisection: |returned - root| <= x_tol or max_iter halvings.
double bisect_monotone(const std::function<double(double)>& f, double lo,
                       double hi, double target, double x_tol = 1e-13,
                       int max_iter = 200);

// Adaptive Simpson on [a, b], absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-10, int max_depth = 48);

// Gauss-Legendre nodes and weights on [-1, 1], exact for degree 2m-1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int points);

}  // namespace iga
