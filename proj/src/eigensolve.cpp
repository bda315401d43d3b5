#include "iga/eigensolve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <lapacke.h>

#include "iga/errors.hpp"

namespace iga {

DiscreteSpectrum solve_spectrum(const BandedSymmetricMatrix& M,
                                const BandedSymmetricMatrix& K, int p, int n,
                                double max_range, bool want_eigenvectors) {
  if (M.size() != K.size())
    throw std::invalid_argument("solve_spectrum: M and K size mismatch");
  const int N = M.size();
  const int ka = K.bandwidth(), kb = M.bandwidth();

  // LAPACK upper band storage, column-major: AB(ka + i - j, j) = A(i, j).
  std::vector<double> ab(static_cast<std::size_t>(ka + 1) * N, 0.0);
  std::vector<double> bb(static_cast<std::size_t>(kb + 1) * N, 0.0);
  for (int j = 0; j < N; ++j) {
    for (int i = std::max(0, j - ka); i <= j; ++i)
      ab[static_cast<std::size_t>(j) * (ka + 1) + (ka + i - j)] = K(i, j);
    for (int i = std::max(0, j - kb); i <= j; ++i)
      bb[static_cast<std::size_t>(j) * (kb + 1) + (kb + i - j)] = M(i, j);
  }

  std::vector<double> w(static_cast<std::size_t>(N));
  std::vector<double> z;
  if (want_eigenvectors) z.assign(static_cast<std::size_t>(N) * N, 0.0);
  const lapack_int info = LAPACKE_dsbgv(
      LAPACK_COL_MAJOR, want_eigenvectors ? 'V' : 'N', 'U', N, ka, kb,
      ab.data(), ka + 1, bb.data(), kb + 1, w.data(),
      want_eigenvectors ? z.data() : nullptr, N);
  if (info > N)
    throw numerical_error("solve_spectrum: mass matrix not positive definite"
                          " (split Cholesky pivot " +
                          std::to_string(info - N) + ")");
  if (info != 0)
    throw numerical_error("solve_spectrum: eigensolver failed (info=" +
                          std::to_string(info) + ")");

  DiscreteSpectrum spec;
  spec.p = p;
  spec.n = n;
  spec.N = N;
  spec.max_range = max_range;
  spec.eigenvalues = std::move(w);
  spec.eigenvectors = std::move(z);

  const double n2 = static_cast<double>(n) * n;
  spec.normalized_frequencies.reserve(spec.eigenvalues.size());
  for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
    const double lambda = spec.eigenvalues[k];
    if (!(lambda > 0.0))
      throw numerical_error("solve_spectrum: nonpositive eigenvalue lambda_" +
                            std::to_string(k + 1) + " = " +
                            std::to_string(lambda));
    spec.normalized_frequencies.push_back(std::sqrt(lambda / n2));
    if (k > 0 &&
        spec.eigenvalues[k] - spec.eigenvalues[k - 1] <
            1e-12 * spec.eigenvalues[k])
      spec.near_degenerate = true;
  }

  const double threshold = max_range * (1.0 + 1e-10);
  int out = 0;
  for (auto it = spec.eigenvalues.rbegin(); it != spec.eigenvalues.rend();
       ++it) {
    if (*it / n2 > threshold)
      ++out;
    else
      break;
  }
  spec.outlier_count = out;
  return spec;
}

}  // namespace iga
