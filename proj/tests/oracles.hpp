// Test-only oracles, kept independent of the library code paths they check.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

inline double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Truncated-power closed form of the cardinal B-spline:
//   N_p(x) = 1/p! sum_{k=0}^{p+1} (-1)^k C(p+1, k) (x-k)_+^p,
// differentiated termwise for d in {1, 2}. Valid pointwise away from the
// knots for the derivative orders where N_p is that smooth.
inline double cardinal_truncated_power(int p, double x, int d = 0) {
  if (d > p) return 0.0;
  double fact = 1.0;
  for (int i = 2; i <= p - d; ++i) fact *= i;
  double acc = 0.0;
  for (int k = 0; k <= p + 1; ++k) {
    const double t = x - k;
    if (t < 0.0) continue;  // (t)_+^0 taken as 1 at t = 0 (right continuity)
    acc += (k % 2 == 0 ? 1.0 : -1.0) * binom(p + 1, k) * std::pow(t, p - d);
  }
  return acc / fact;
}

// Fixed-depth recursive Simpson, deliberately not the library integrator.
inline double simpson_rec(const std::function<double(double)>& f, double a,
                          double b, int depth) {
  const double m = 0.5 * (a + b);
  const double coarse = (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
  if (depth <= 0) return coarse;
  return simpson_rec(f, a, m, depth - 1) + simpson_rec(f, m, b, depth - 1);
}

// Convolution route: N_p(x) = int_{x-1}^{x} N_{p-1}(s) ds, split at the
// integer knots so Simpson only ever sees a polynomial piece.
inline double cardinal_convolution(int p, double x) {
  if (p == 0) return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
  auto prev = [p](double s) { return cardinal_truncated_power(p - 1, s); };
  double acc = 0.0;
  double a = x - 1.0;
  while (a < x) {
    const double b = std::min(std::floor(a) + 1.0, x);
    acc += simpson_rec(prev, a, b, 4);
    a = b;
  }
  return acc;
}

// Consistent-mass FEM closed form for p = 1, phi = id:
// lambda_k = n^2 e_1(k pi / n) with e_1(t) = 6(1 - cos t)/(2 + cos t).
inline double e1_closed(double theta) {
  return 6.0 * (1.0 - std::cos(theta)) / (2.0 + std::cos(theta));
}

inline std::vector<double> fem_p1_spectrum(int n) {
  std::vector<double> lambda;
  for (int k = 1; k <= n - 1; ++k)
    lambda.push_back(static_cast<double>(n) * n * e1_closed(k * M_PI / n));
  return lambda;
}

}  // namespace oracle
