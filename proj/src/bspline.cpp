#include "iga/bspline.hpp"

#include <stdexcept>

namespace iga {

namespace {

// N_0 = indicator of [0,1); half-open so that the recursion and the
// partition of unity stay exact at the integers.
double cardinal_value(int p, double x) {
  if (x < 0.0 || x >= p + 1.0) return 0.0;
  if (p == 0) return 1.0;
  return x / p * cardinal_value(p - 1, x) +
         (p + 1.0 - x) / p * cardinal_value(p - 1, x - 1.0);
}

}  // namespace

double cardinal_bspline(int degree, double x, int deriv_order) {
  if (degree < 0)
    throw std::invalid_argument("cardinal_bspline: negative degree");
  switch (deriv_order) {
    case 0:
      return cardinal_value(degree, x);
    case 1:
      // d/dx N_p = N_{p-1}(x) - N_{p-1}(x-1); zero a.e. for p = 0.
      if (degree < 1) return 0.0;
      return cardinal_value(degree - 1, x) - cardinal_value(degree - 1, x - 1.0);
    case 2:
      if (degree < 2) return 0.0;
      return cardinal_value(degree - 2, x) -
             2.0 * cardinal_value(degree - 2, x - 1.0) +
             cardinal_value(degree - 2, x - 2.0);
    default:
      throw std::invalid_argument("cardinal_bspline: deriv_order not in {0,1,2}");
  }
}

KnotVector make_knot_vector(int degree, int intervals) {
  if (degree < 1) throw std::invalid_argument("make_knot_vector: degree < 1");
  if (intervals < 1)
    throw std::invalid_argument("make_knot_vector: intervals < 1");
  KnotVector kv;
  kv.degree = degree;
  kv.intervals = intervals;
  kv.knots.reserve(static_cast<std::size_t>(intervals + 2 * degree + 1));
  for (int i = 0; i <= degree; ++i) kv.knots.push_back(0.0);
  for (int j = 1; j < intervals; ++j)
    kv.knots.push_back(static_cast<double>(j) / intervals);
  for (int i = 0; i <= degree; ++i) kv.knots.push_back(1.0);
  return kv;
}

BSplineBasis::BSplineBasis(KnotVector kv) : kv_(std::move(kv)) {
  const auto expected =
      static_cast<std::size_t>(kv_.intervals + 2 * kv_.degree + 1);
  if (kv_.knots.size() != expected)
    throw std::invalid_argument("BSplineBasis: knot count mismatch");
}

double BSplineBasis::value(int j, int k, double t) const {
  if (k == 0) {
    const double tj = knot(j), tj1 = knot(j + 1);
    if (tj <= t && t < tj1) return 1.0;
    // Left-limit convention at the right end of the domain.
    if (t == 1.0 && tj1 == 1.0 && tj < 1.0) return 1.0;
    return 0.0;
  }
  double left = 0.0, right = 0.0;
  const double d1 = knot(j + k) - knot(j);
  if (d1 > 0.0) left = (t - knot(j)) / d1 * value(j, k - 1, t);
  const double d2 = knot(j + k + 1) - knot(j + 1);
  if (d2 > 0.0) right = (knot(j + k + 1) - t) / d2 * value(j + 1, k - 1, t);
  return left + right;
}

double BSplineBasis::eval(int j, double t, int deriv_order) const {
  if (j < 0 || j >= count())
    throw std::invalid_argument("BSplineBasis::eval: index out of range");
  if (t < 0.0 || t > 1.0)
    throw std::invalid_argument("BSplineBasis::eval: t outside [0,1]");
  const int p = kv_.degree;
  if (deriv_order == 0) return value(j, p, t);
  if (deriv_order != 1)
    throw std::invalid_argument("BSplineBasis::eval: deriv_order not in {0,1}");
  double left = 0.0, right = 0.0;
  const double d1 = knot(j + p) - knot(j);
  if (d1 > 0.0) left = p / d1 * value(j, p - 1, t);
  const double d2 = knot(j + p + 1) - knot(j + 1);
  if (d2 > 0.0) right = p / d2 * value(j + 1, p - 1, t);
  return left - right;
}

}  // namespace iga
