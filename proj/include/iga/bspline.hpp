#pragma once

#include <vector>

namespace iga {

// Cardinal B-spline N_p of degree p, supported on [0, p+1].
// deriv_order in {0, 1, 2}; orders beyond the classical smoothness of N_p
// (first derivative of N_0, second derivative of N_1) are zero almost
// everywhere and evaluate to 0.
double cardinal_bspline(int degree, double x, int deriv_order = 0);

// Open uniform knot vector on [0,1]: multiplicity p+1 at both ends,
// interior knots j/n. Holds n + 2p + 1 knots.
struct KnotVector {
  int degree = 0;
  int intervals = 0;
  std::vector<double> knots;
};

KnotVector make_knot_vector(int degree, int intervals);

// B-spline basis N_0^p, ..., N_{p+n-1}^p on an open uniform knot vector,
// evaluated by the Cox-de Boor recursion with the zero-denominator-is-zero
// convention. Level-0 functions are right-continuous indicators; at t = 1
// the last nonempty interval is treated as closed so that the basis still
// sums to one.
class BSplineBasis {
 public:
  explicit BSplineBasis(KnotVector kv);
  BSplineBasis(int degree, int intervals)
      : BSplineBasis(make_knot_vector(degree, intervals)) {}

  int degree() const { return kv_.degree; }
  int intervals() const { return kv_.intervals; }
  int count() const { return kv_.degree + kv_.intervals; }
  const KnotVector& knot_vector() const { return kv_; }

  // N_j^p(t) for deriv_order 0, (N_j^p)'(t) for deriv_order 1.
  double eval(int j, double t, int deriv_order = 0) const;

 private:
  double value(int j, int k, double t) const;
  double knot(int i) const { return kv_.knots[static_cast<std::size_t>(i)]; }

  KnotVector kv_;
};

}  // namespace iga
