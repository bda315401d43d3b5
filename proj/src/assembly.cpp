#include "iga/assembly.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "iga/bspline.hpp"
#include "iga/errors.hpp"
#include "iga/numerics.hpp"

namespace iga {

BandedSymmetricMatrix::BandedSymmetricMatrix(int size, int bandwidth)
    : n_(size), bw_(bandwidth) {
  if (size < 1) throw std::invalid_argument("BandedSymmetricMatrix: size < 1");
  if (bandwidth < 0)
    throw std::invalid_argument("BandedSymmetricMatrix: bandwidth < 0");
  a_.assign(static_cast<std::size_t>(n_) * (bw_ + 1), 0.0);
}

double BandedSymmetricMatrix::operator()(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::out_of_range("BandedSymmetricMatrix: index out of range");
  if (i < j) std::swap(i, j);
  if (i - j > bw_) return 0.0;
  return a_[static_cast<std::size_t>(i) * (bw_ + 1) + (i - j)];
}

double& BandedSymmetricMatrix::at_lower(int i, int j) {
  if (j > i || i - j > bw_ || i >= n_ || j < 0)
    throw std::out_of_range("BandedSymmetricMatrix: lower-band index invalid");
  return a_[static_cast<std::size_t>(i) * (bw_ + 1) + (i - j)];
}

double BandedSymmetricMatrix::one_norm() const {
  double best = 0.0;
  for (int j = 0; j < n_; ++j) {
    double col = 0.0;
    for (int i = std::max(0, j - bw_); i <= std::min(n_ - 1, j + bw_); ++i)
      col += std::abs((*this)(i, j));
    best = std::max(best, col);
  }
  return best;
}

std::vector<double> BandedSymmetricMatrix::to_dense() const {
  std::vector<double> d(static_cast<std::size_t>(n_) * n_, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = std::max(0, i - bw_); j <= std::min(n_ - 1, i + bw_); ++j)
      d[static_cast<std::size_t>(i) * n_ + j] = (*this)(i, j);
  return d;
}

namespace {

enum class Form { mass, stiffness };

BandedSymmetricMatrix assemble(int p, int n, const Reparametrization& phi,
                               Form form) {
  if (p < 1) throw std::invalid_argument("assemble: p < 1");
  if (n < 2) throw std::invalid_argument("assemble: n < 2");
  const int N = n + p - 2;
  BandedSymmetricMatrix out(N, p);

  const BSplineBasis basis(p, n);
  const GaussRule rule = gauss_legendre(p + 3);
  const int deriv = form == Form::stiffness ? 1 : 0;
  const double h = 1.0 / n;

  std::vector<double> vals(static_cast<std::size_t>(p) + 1);
  for (int el = 0; el < n; ++el) {
    const double a = el * h, b = (el + 1) * h;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double x = 0.5 * (a + b) + 0.5 * (b - a) * rule.nodes[q];
      const double w = 0.5 * (b - a) * rule.weights[q];
      const double d1 = phi.deriv1(x);
      if (!(d1 > 0.0))
        throw invalid_reparametrization(
            "assemble: phi' <= 0 at quadrature point x=" + std::to_string(x));
      const double weight =
          form == Form::mass ? w * std::abs(d1) : w / std::abs(d1);
      // Basis functions alive on this interval: full indices el..el+p.
      for (int local = 0; local <= p; ++local)
        vals[static_cast<std::size_t>(local)] =
            basis.eval(el + local, x, deriv);
      for (int li = 0; li <= p; ++li) {
        const int gi = el + li - 1;  // interior numbering N_1..N_{p+n-2}
        if (gi < 0 || gi >= N) continue;
        for (int lj = 0; lj <= li; ++lj) {
          const int gj = el + lj - 1;
          if (gj < 0 || gj >= N) continue;
          out.at_lower(gi, gj) += weight *
                                  vals[static_cast<std::size_t>(li)] *
                                  vals[static_cast<std::size_t>(lj)];
        }
      }
    }
  }
  return out;
}

}  // namespace

BandedSymmetricMatrix assemble_mass(int p, int n,
                                    const Reparametrization& phi) {
  return assemble(p, n, phi, Form::mass);
}

BandedSymmetricMatrix assemble_stiffness(int p, int n,
                                         const Reparametrization& phi) {
  return assemble(p, n, phi, Form::stiffness);
}

void dump_triplets(const BandedSymmetricMatrix& m, std::ostream& os) {
  char buf[40];
  for (int i = 0; i < m.size(); ++i)
    for (int j = std::max(0, i - m.bandwidth()); j <= i; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
      os << i << ' ' << j << ' ' << buf << '\n';
    }
}

}  // namespace iga
