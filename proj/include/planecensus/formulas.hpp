#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "planecensus/census.hpp"

namespace planecensus {

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Number of ways to choose M pairwise non-crossing diagonals of a convex
/// n-gon: C(n-3,M) * C(n+M-1,M) / (M+1), exact.
inline BigInt pak_count(int n, int m) {
  if (n < 3 || m < 0 || m > n - 3) throw OutOfRangeError("pak_count out of range");
  BigInt r = binomial(n - 3, m) * binomial(n + m - 1, m);
  r /= m + 1;
  return r;
}

/// Exact number of plane graphs with m edges on the n-point convex chain
/// configuration. The chain polygon has n-1 vertices, so Type-2 diagonal
/// choices follow pak_count(n-1, k); the 2n-2 Type-1/Type-3 edges are free.
inline BigInt chain_count_exact(int n, int m) {
  if (n < 4 || m < 0 || m > 3 * n - 6)
    throw OutOfRangeError("chain_count_exact out of range");
  BigInt total = 0;
  for (int k = 0; k <= std::min(m, n - 4); ++k)
    total += pak_count(n - 1, k) * binomial(2 * n - 2, m - k);
  return total;
}

/// The published closed form for the chain count with k Type-2 edges,
/// verbatim: C(n-3,k) C(n+k-1,k) C(2n-2,m-k) / (k+1). Off by an index shift
/// from chain_count_exact at finite n; asymptotically equivalent.
inline BigInt chain_f_paper(int n, int m, int k) {
  if (n < 4 || m < 0 || k < 0 || m - k < 0)
    throw OutOfRangeError("chain_f_paper out of range");
  if (k > n - 3) return 0;
  BigInt r = binomial(n - 3, k) * binomial(n + k - 1, k) * binomial(2 * n - 2, m - k);
  r /= k + 1;
  return r;
}

namespace detail {

// x^e with the 0^0 = 1 convention used throughout the exponent formulas.
inline double powe(double x, double e) {
  if (e == 0.0) return 1.0;
  return std::pow(x, e);
}

}  // namespace detail

/// Optimizing Type-2 density for the chain exponent: (-1 + sqrt(8c+1))/4.
inline double d_star(double c) {
  if (c < 0.0 || c > 3.0) throw DomainError("d_star requires 0 <= c <= 3");
  return (-1.0 + std::sqrt(8.0 * c + 1.0)) / 4.0;
}

/// Stirling exponent base for the chain count:
/// 4(1+d)^{1+d} / ((1-d)^{1-d} d^{2d} (c-d)^{c-d} (2-c+d)^{2-c+d}).
inline double tilde_f(double c, double d) {
  if (d < 0.0 || d >= 1.0 || d > c || c - d >= 2.0)
    throw DomainError("tilde_f arguments outside domain");
  using detail::powe;
  return 4.0 * powe(1.0 + d, 1.0 + d) /
         (powe(1.0 - d, 1.0 - d) * powe(d, 2.0 * d) * powe(c - d, c - d) *
          powe(2.0 - c + d, 2.0 - c + d));
}

struct GrowthEstimate {
  double base = 0.0;
  double argmax = 0.0;
  std::string meta;
};

/// Golden-section maximization on [lo, hi], bracket found by a coarse scan
/// with step 0.001, ties broken toward smaller argument.
inline GrowthEstimate maximize_unimodal(const std::function<double(double)>& f,
                                        double lo, double hi,
                                        double tol = 1e-10) {
  double best_x = lo, best_v = -std::numeric_limits<double>::infinity();
  for (double x = lo; x <= hi + 1e-12; x += 0.001) {
    double v = f(x);
    if (v > best_v) {
      best_v = v;
      best_x = x;
    }
  }
  double a = std::max(lo, best_x - 0.002);
  double b = std::min(hi, best_x + 0.002);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c1 = b - gr * (b - a);
  double c2 = a + gr * (b - a);
  double f1 = f(c1), f2 = f(c2);
  while (b - a > tol) {
    if (f1 >= f2) {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - gr * (b - a);
      f1 = f(c1);
    } else {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + gr * (b - a);
      f2 = f(c2);
    }
  }
  double x = (a + b) / 2.0;
  return GrowthEstimate{f(x), x, ""};
}

struct Thm2Result {
  double t = 0.0;
  double B = 0.0;
  double bound_base = 0.0;
};

/// Per-edge-count upper bound base: pg_{cN}(S) = O*(B(c)^N) tr(S), with the
/// triangulation bound entering as a configurable base (default 30).
inline Thm2Result thm2_bound(double c, double tr_base = 30.0) {
  if (c < 0.0 || c >= 3.0) throw DomainError("thm2_bound requires 0 <= c < 3");
  using detail::powe;
  double t = 0.5 * (std::sqrt(3.5 * 3.5 + 3.0 * c + c * c) - 2.5 - c);
  double B = std::pow(5.0, 2.5) /
             (8.0 * powe(c + t - 0.5, c + t - 0.5) * powe(3.0 - c - t, 3.0 - c - t) *
              powe(2.0 * t, t) * powe(0.5 - t, 0.5 - t));
  return Thm2Result{t, B, B * tr_base};
}

enum class RateMode { Thm1, Flippable };

inline constexpr long long kInfiniteN = -1;

/// Lower bound on the increase rate r_c.
///   thm1:      ((3-c)n - h - 3)/(cn + 1)
///   flippable: ((7/2 - 2c)n - h - 5)/(cn + 1), valid for c < 1/2
/// n = kInfiniteN gives the asymptotic form (3-c)/c or (3.5-2c)/c.
inline double rc_lower(double c, long long n, long long h, RateMode mode) {
  if (c < 0.0 || c >= 3.0) throw DomainError("rc_lower requires 0 <= c < 3");
  if (mode == RateMode::Flippable && c >= 0.5)
    throw DomainError("flippable bound requires c < 1/2");
  if (n == kInfiniteN) {
    if (c == 0.0) return std::numeric_limits<double>::infinity();
    return mode == RateMode::Thm1 ? (3.0 - c) / c : (3.5 - 2.0 * c) / c;
  }
  double nn = static_cast<double>(n), hh = static_cast<double>(h);
  if (mode == RateMode::Thm1) return ((3.0 - c) * nn - hh - 3.0) / (c * nn + 1.0);
  return ((3.5 - 2.0 * c) * nn - hh - 5.0) / (c * nn + 1.0);
}

struct ChainRate {
  double type2_rate = 0.0;
  double type13_rate = 0.0;
  double closed_form = 0.0;
};

/// Increase rate of the convex chain configuration at the optimizing Type-2
/// density. At n = kInfiniteN the two finite-n ratios coincide with the
/// closed form (-4c + sqrt(1+8c) + 7)/(4c - sqrt(1+8c) + 1).
inline ChainRate chain_rate(double c, long long n = kInfiniteN) {
  if (c <= 0.0 || c >= 3.0) throw DomainError("chain_rate requires 0 < c < 3");
  double d = d_star(c);
  double s = std::sqrt(1.0 + 8.0 * c);
  ChainRate out;
  out.closed_form = (-4.0 * c + s + 7.0) / (4.0 * c - s + 1.0);
  if (n == kInfiniteN) {
    out.type2_rate = (1.0 - d * d) / (d * d);
    out.type13_rate = (2.0 - c + d) / (c - d);
  } else {
    double nn = static_cast<double>(n);
    out.type2_rate =
        ((d * nn + nn) * (nn - d * nn - 3.0)) / ((d * nn + 1.0) * (d * nn + 2.0));
    out.type13_rate = ((2.0 - c + d) * nn - 2.0) / ((c - d) * nn + 1.0);
  }
  return out;
}

/// Recursive bound application: alpha * (min over [c-delta, c] of g)^{-delta},
/// with g the asymptotic rate bound of the chosen mode. The minimum is found
/// by dense sampling (g is decreasing in its argument on the valid range).
inline double apply_eq1(double alpha, double c, double delta, RateMode mode) {
  if (delta < 0.0 || delta > c) throw DomainError("apply_eq1 requires 0 <= delta <= c");
  double gmin = std::numeric_limits<double>::infinity();
  const int steps = 1000;
  for (int i = 0; i <= steps; ++i) {
    double lambda = (c - delta) + delta * i / steps;
    double g = rc_lower(lambda, kInfiniteN, 0, mode);
    if (g <= 0.0) throw DomainError("rate bound not positive on the interval");
    gmin = std::min(gmin, g);
  }
  return alpha * std::pow(gmin, -delta);
}

}  // namespace planecensus
