#pragma once

#include <vector>

#include "iga/assembly.hpp"

namespace iga {

// Sorted spectrum of the pencil K u = lambda M u together with the
// normalized eigenfrequencies sqrt(lambda)/n and the outlier partition.
// Inliers are the indices 1..N-outlier_count (1-based, ascending order);
// the outliers are the largest eigenvalues, those whose normalized value
// lambda/n^2 exceeds max_range * (1 + 1e-10).
struct DiscreteSpectrum {
  int p = 0;
  int n = 0;
  int N = 0;
  std::vector<double> eigenvalues;
  std::vector<double> normalized_frequencies;
  int outlier_count = 0;
  double max_range = 0.0;
  // Some theorem checks assume simple eigenvalues; runs with a relative
  // gap below 1e-12 are flagged so they can be excluded.
  bool near_degenerate = false;
  std::vector<double> eigenvectors;  // column-major N x N when requested

  int inlier_count() const { return N - outlier_count; }
};

// All eigenvalues of M^{-1} K via reduction of the generalized symmetric
// problem to a standard one (split Cholesky factorization of M inside the
// banded LAPACK driver). M must be SPD; a failed factorization reports the
// pivot index. Eigenvalues <= 0 abort with a numerical error.
DiscreteSpectrum solve_spectrum(const BandedSymmetricMatrix& M,
                                const BandedSymmetricMatrix& K, int p, int n,
                                double max_range,
                                bool want_eigenvectors = false);

}  // namespace iga
