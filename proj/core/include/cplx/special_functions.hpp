#pragma once

/**
 * @file special_functions.hpp
 *
 * @brief Scalar gamma/beta kernels used by every other module.
 *
 * All functions are pure and thread-safe. Arguments outside the documented
 * domain throw cplx::Error with Errc::domain.
 */

namespace cplx::special {

/**
 * Natural log of the gamma function for finite x > 0.
 *
 * Stirling series with upward recurrence below x = 15. Absolute error is
 * below 1e-12 where |ln Γ(x)| < 1e3 and relative error below 1e-15 beyond.
 */
double log_gamma(double x);

/**
 * ln B(a, b) for a, b > 0.
 *
 * Large arguments go through the Stirling remainder so that ln Γ(a) + ln Γ(b)
 * and ln Γ(a + b) never cancel. The result is bitwise symmetric in (a, b).
 */
double log_beta(double a, double b);

/// Log density of Beta(a, b) at x in (0, 1). Returns -inf at a zero-density endpoint.
double log_beta_density(double x, double a, double b);

/**
 * Regularized incomplete beta I_x(a, b), i.e. the CDF of Beta(a, b) at x.
 *
 * Continued fraction (modified Lentz) evaluated on whichever side of
 * x = (a + 1) / (a + b + 2) converges fastest.
 */
double reg_inc_beta(double x, double a, double b);

/**
 * Inverse of reg_inc_beta in x: the q-quantile of Beta(a, b), 0 < q < 1.
 *
 * Bracketed Newton iteration with bisection fallback, at most 200 steps.
 * Iteration continues past |I_x - q| <= 1e-10 until x stops moving, so the
 * answer is as close to the true quantile as double precision permits. When
 * q lies beyond the largest CDF value representable below 1 (tiny b, upper
 * tail) the closest representable x is returned.
 */
double beta_quantile(double q, double a, double b);

}  // namespace cplx::special
