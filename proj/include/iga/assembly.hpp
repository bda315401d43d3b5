#pragma once

#include <iosfwd>
#include <vector>

#include "iga/reparam.hpp"

namespace iga {

// Symmetric band matrix, lower triangle stored row-wise:
// entry (i, j) with j <= i, i - j <= bandwidth lives at
// data[i * (bandwidth + 1) + (i - j)].
class BandedSymmetricMatrix {
 public:
  BandedSymmetricMatrix(int size, int bandwidth);

  int size() const { return n_; }
  int bandwidth() const { return bw_; }

  // Symmetric read access; exact 0 outside the band.
  double operator()(int i, int j) const;
  double& at_lower(int i, int j);

  double one_norm() const;
  std::vector<double> to_dense() const;  // row-major n x n

 private:
  int n_, bw_;
  std::vector<double> a_;
};

// Mass matrix (M)_{ij} = int_0^1 |phi'| N_i^p N_j^p dx and stiffness
// (K)_{ij} = int_0^1 (N_i^p)'(N_j^p)'/|phi'| dx over the interior basis
// N_1^p..N_{p+n-2}^p, assembled per knot interval with Gauss-Legendre
// quadrature (p+3 points, exact for the spline polynomial part).
BandedSymmetricMatrix assemble_mass(int p, int n,
                                    const Reparametrization& phi);
BandedSymmetricMatrix assemble_stiffness(int p, int n,
                                         const Reparametrization& phi);

// Plain-text triplet dump "i j value", 17 significant digits.
void dump_triplets(const BandedSymmetricMatrix& m, std::ostream& os);

}  // namespace iga
