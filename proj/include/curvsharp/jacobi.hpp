#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace curvsharp {

using Matrix = std::vector<std::vector<double>>;

/**
 * \brief Smallest eigenvalue of a dense symmetric matrix via cyclic Jacobi rotations.
 *
 * Sweeps run until the off-diagonal Frobenius norm drops below 1e-13; the sizes handled
 * here (dimension <= 17) converge in a handful of sweeps.
 */
inline double smallest_eigenvalue(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("eigenvalue of an empty matrix");
  for (const auto& r : m)
    if (r.size() != n) throw std::invalid_argument("matrix is not square");
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += m[p][q] * m[p][q];
    if (std::sqrt(2 * off) < 1e-13) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m[p][q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (m[q][q] - m[p][p]) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        m[p][p] -= t * apq;
        m[q][q] += t * apq;
        m[p][q] = m[q][p] = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = m[k][p];
          const double akq = m[k][q];
          m[k][p] = m[p][k] = c * akp - s * akq;
          m[k][q] = m[q][k] = s * akp + c * akq;
        }
      }
  }
  double lambda = m[0][0];
  for (std::size_t i = 1; i < n; ++i) lambda = std::min(lambda, m[i][i]);
  return lambda;
}

}  // namespace curvsharp
