#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

#include <curvsharp/curvature.hpp>
#include <curvsharp/two_ball.hpp>

namespace curvsharp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/** \brief Certified enclosure of a curvature value: psd holds at lo and fails at hi. */
struct RationalInterval {
  Rational lo;
  Rational hi;
};

/**
 * \brief Exact positive-semidefiniteness of a symmetric integer matrix.
 *
 * Fraction-free symmetric elimination with diagonal pivoting: each Schur complement is a
 * positive multiple of the true one, so diagonal signs decide. A zero diagonal block is
 * positive semidefinite only when it vanishes entirely.
 */
inline bool is_psd_exact(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  Integer previous = 1;
  while (!active.empty()) {
    std::size_t pivot = n;
    for (std::size_t i : active) {
      if (m[i][i] < 0) return false;
      if (m[i][i] > 0 && pivot == n) pivot = i;
    }
    if (pivot == n) {
      for (std::size_t i : active)
        for (std::size_t j : active)
          if (m[i][j] != 0) return false;
      return true;
    }
    const Integer& p = m[pivot][pivot];
    for (std::size_t i : active) {
      if (i == pivot) continue;
      for (std::size_t j : active) {
        if (j == pivot) continue;
        m[i][j] = (p * m[i][j] - m[i][pivot] * m[pivot][j]) / previous;
      }
    }
    previous = p;
    std::erase(active, pivot);
  }
  return true;
}

/**
 * \brief Certified interval around the center's curvature, of width below 1/denom_bound.
 *
 * Bisection over rational K; each feasibility test clears denominators and runs the exact
 * integer psd decision on denom * 16*Gamma2 - numer * 16*Gamma.
 */
inline RationalInterval k_infinity_exact(const TwoBall& b, long long denom_bound) {
  if (!is_valid_ball(b) || b.s1_count == 0) throw std::invalid_argument("malformed ball");
  if (denom_bound <= 0) throw std::invalid_argument("denominator bound must be positive");
  const auto m16 = gamma2_times16(b);
  const std::size_t n = m16.size();
  auto feasible = [&](const Rational& k) {
    const Integer numer = boost::multiprecision::numerator(k);
    const Integer denom = boost::multiprecision::denominator(k);
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c) {
        m[a][c] = denom * m16[a][c];
        if (a == c && a < static_cast<std::size_t>(b.s1_count)) m[a][c] -= numer * 8;
      }
    return is_psd_exact(std::move(m));
  };

  Rational lo = -2 * b.s1_count * b.s1_count;
  for (Rational step = lo; !feasible(lo); step *= 2) {
    lo += step;
    if (lo < -1000000000) throw std::logic_error("no feasible curvature lower bound found");
  }
  Rational hi = is_regular_compatible(b)
                    ? Rational(2 * b.s1_count + center_triangles(b), b.s1_count)
                    : Rational(1);
  for (Rational step = 1; feasible(hi); step *= 2) {
    lo = hi;
    hi += step;
    if (hi > 1000000000) throw std::logic_error("no infeasible curvature upper bound found");
  }
  while ((hi - lo) * denom_bound >= 1) {
    const Rational mid = (lo + hi) / 2;
    (feasible(mid) ? lo : hi) = mid;
  }
  return {std::move(lo), std::move(hi)};
}

}  // namespace curvsharp
