#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <curvsharp/jacobi.hpp>
#include <curvsharp/two_ball.hpp>

namespace curvsharp {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kSharpTolerance = 1e-7;

/** \brief Non-normalized graph Laplacian at x: the sum of f(y) - f(x) over neighbors y. */
inline double laplacian_apply(const Graph& g, const std::vector<double>& f, int x) {
  if (f.size() != static_cast<std::size_t>(g.vertex_count()))
    throw std::invalid_argument("function values must cover every vertex");
  double sum = 0;
  for (int y : g.neighbors(x)) sum += f[y] - f[x];
  return sum;
}

/**
 * \brief Laplacian inside a ball, with coordinates 0 = center, 1..d = S1, then S2.
 *
 * Only the center and S1 vertices carry their full neighborhoods; asking at a
 * second-sphere coordinate is a domain error.
 */
inline double laplacian_apply(const TwoBall& b, const std::vector<double>& f, int x) {
  const int d = b.s1_count;
  const int m = static_cast<int>(b.patterns.size());
  if (f.size() != static_cast<std::size_t>(1 + d + m))
    throw std::invalid_argument("function values must cover the whole ball");
  if (x < 0 || x > d) throw std::domain_error("Laplacian known only at the center and on S1");
  double sum = 0;
  if (x == 0) {
    for (int i = 0; i < d; ++i) sum += f[1 + i] - f[0];
    return sum;
  }
  const int i = x - 1;
  sum += f[0] - f[x];
  for (int j = 0; j < d; ++j)
    if ((b.s1_adj[i] >> j) & 1u) sum += f[1 + j] - f[x];
  for (int z = 0; z < m; ++z)
    if ((b.patterns[z] >> i) & 1u) sum += f[1 + d + z] - f[x];
  return sum;
}

/**
 * \brief 16 times the Gamma2 form of the center, an exact integer matrix.
 *
 * Coordinates are S1 then S2 (center-zero normalization). Shared by the floating
 * and the exact curvature paths.
 */
inline std::vector<std::vector<long long>> gamma2_times16(const TwoBall& b) {
  if (!is_valid_ball(b)) throw std::invalid_argument("malformed ball");
  const int d = b.s1_count;
  const int m = static_cast<int>(b.patterns.size());
  const int n = d + m;
  // coeff[a][b], a <= b: coefficient of f_a * f_b in 16 * Gamma2
  std::vector<std::vector<long long>> coeff(n, std::vector<long long>(n, 0));
  auto cross = [&](int a, int c, long long w) {
    if (a > c) std::swap(a, c);
    coeff[a][c] += w;
  };
  auto add_square = [&](int a, int c, long long w) {  // w * (f_a - f_c)^2, -1 is the center
    if (a >= 0) coeff[a][a] += w;
    if (c >= 0) coeff[c][c] += w;
    if (a >= 0 && c >= 0) cross(a, c, -2 * w);
  };
  for (int y = 0; y < d; ++y) {
    int deg = 1;
    add_square(y, -1, 4);
    for (int j = 0; j < d; ++j)
      if ((b.s1_adj[y] >> j) & 1u) {
        add_square(j, y, 4);
        cross(y, j, -8);
        ++deg;
      }
    for (int z = 0; z < m; ++z)
      if ((b.patterns[z] >> y) & 1u) {
        add_square(d + z, y, 4);
        cross(y, d + z, -8);
        ++deg;
      }
    cross(y, y, -4LL * d);
    cross(y, y, 8LL * deg);
    for (int j = 0; j < d; ++j) cross(y, j, 8);
  }
  std::vector<std::vector<long long>> m16(n, std::vector<long long>(n, 0));
  for (int a = 0; a < n; ++a) {
    m16[a][a] = coeff[a][a];
    for (int c = a + 1; c < n; ++c) {
      if (coeff[a][c] % 2 != 0) throw std::logic_error("Gamma2 coefficient parity violated");
      m16[a][c] = m16[c][a] = coeff[a][c] / 2;
    }
  }
  return m16;
}

/** \brief Gamma form of the center on S1-then-S2 coordinates: 1/2 on S1, zero elsewhere. */
inline Matrix gamma_form(const TwoBall& b) {
  if (!is_valid_ball(b)) throw std::invalid_argument("malformed ball");
  const int n = b.s1_count + static_cast<int>(b.patterns.size());
  Matrix g(n, std::vector<double>(n, 0));
  for (int i = 0; i < b.s1_count; ++i) g[i][i] = 0.5;
  return g;
}

/** \brief Gamma2 form of the center on S1-then-S2 coordinates. */
inline Matrix gamma2_form(const TwoBall& b) {
  const auto m16 = gamma2_times16(b);
  Matrix g(m16.size(), std::vector<double>(m16.size(), 0));
  for (std::size_t a = 0; a < m16.size(); ++a)
    for (std::size_t c = 0; c < m16.size(); ++c) g[a][c] = m16[a][c] / 16.0;
  return g;
}

/** \brief True when every S1 vertex has the same full degree as the center. */
inline bool is_regular_compatible(const TwoBall& b) {
  for (int i = 0; i < b.s1_count; ++i)
    if (1 + spherical_degree(b, i) + pattern_count_at(b, i) != b.s1_count) return false;
  return b.s1_count > 0;
}

/** \brief Curvature upper bound 2 + #triangles(center)/degree for regular-compatible balls. */
inline double curvature_upper_bound(const TwoBall& b) {
  return 2.0 + static_cast<double>(center_triangles(b)) / b.s1_count;
}

struct CurvatureReport {
  double k_infinity = 0;
  double upper_bound = 0;
  bool sharp = false;
  int triangles_vertex = 0;
  int degree = 0;
};

namespace detail {

inline bool curvature_matrix_psd(const std::vector<std::vector<long long>>& m16, int s1_count,
                                 double k) {
  const std::size_t n = m16.size();
  Matrix m(n, std::vector<double>(n, 0));
  double norm = 0;
  for (std::size_t a = 0; a < n; ++a) {
    double row = 0;
    for (std::size_t c = 0; c < n; ++c) {
      m[a][c] = m16[a][c] / 16.0;
      if (a == c && a < static_cast<std::size_t>(s1_count)) m[a][c] -= k * 0.5;
      row += std::abs(m[a][c]);
    }
    norm = std::max(norm, row);
  }
  return smallest_eigenvalue(std::move(m)) >= -1e-12 * (1 + norm);
}

}  // namespace detail

/**
 * \brief Bakry-Emery curvature of the ball's center: the largest K with Gamma2 >= K * Gamma,
 *        located by bisection over exact feasibility tests.
 */
inline CurvatureReport k_infinity(const TwoBall& b, double tol = kDefaultTolerance) {
  if (!is_valid_ball(b) || b.s1_count == 0) throw std::invalid_argument("malformed ball");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const auto m16 = gamma2_times16(b);
  auto feasible = [&](double k) { return detail::curvature_matrix_psd(m16, b.s1_count, k); };

  const bool regular = is_regular_compatible(b);
  double k;
  if (regular && feasible(curvature_upper_bound(b))) {
    // the bound is attained: K can be no larger, so it is exact
    k = curvature_upper_bound(b);
  } else {
    double lo = -2.0 * b.s1_count * b.s1_count;
    for (double step = lo; !feasible(lo); step *= 2) {
      lo += step;
      if (lo < -1e9) throw std::logic_error("no feasible curvature lower bound found");
    }
    double hi = regular ? curvature_upper_bound(b) : 1.0;
    for (double step = 1; feasible(hi); step *= 2) {
      lo = hi;
      hi += step;
      if (hi > 1e9) throw std::logic_error("no infeasible curvature upper bound found");
    }
    while (hi - lo > tol) {
      const double mid = lo + (hi - lo) / 2;
      (feasible(mid) ? lo : hi) = mid;
    }
    k = lo + (hi - lo) / 2;
  }

  CurvatureReport report;
  report.k_infinity = k;
  report.upper_bound = curvature_upper_bound(b);
  report.triangles_vertex = center_triangles(b);
  report.degree = b.s1_count;
  report.sharp = regular && std::abs(report.k_infinity - report.upper_bound) <= kSharpTolerance;
  return report;
}

/** \brief Curvature sharpness of a 4-regular ball: K reaches 2 + #triangles/4 within tol. */
inline bool is_curvature_sharp(const TwoBall& b, double tol = kSharpTolerance) {
  if (!is_quartic_ball(b)) throw std::domain_error("curvature sharpness requires a 4-regular ball");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const CurvatureReport report = k_infinity(b);
  return report.k_infinity >= report.upper_bound - tol;
}

/** \brief %.12g with a forced decimal point, so integral reals read as reals. */
inline std::string format_real(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", x);
  std::string out = buffer;
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

inline std::string report_to_json(const CurvatureReport& r) {
  std::string out = "{\"k_infinity\":";
  out += format_real(r.k_infinity);
  out += ",\"upper_bound\":";
  out += format_real(r.upper_bound);
  out += ",\"sharp\":";
  out += r.sharp ? "true" : "false";
  out += ",\"triangles_vertex\":";
  out += std::to_string(r.triangles_vertex);
  out += ",\"degree\":";
  out += std::to_string(r.degree);
  out += "}";
  return out;
}

}  // namespace curvsharp
