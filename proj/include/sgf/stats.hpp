#pragma once

#include "sgf/types.hpp"

#include <vector>

namespace sgf {

struct SampleStats {
  int n = 0;
  Real mean = 0;
  Real var = 0;       // unbiased
  Real std_error = 0; // sqrt(var/n)
};

SampleStats sample_stats(const std::vector<Real>& xs);

/// Ordinary least squares y = a + b x. se_slope uses the usual residual
/// estimate; ci95 half-width is 1.96 * se_slope.
struct LineFit {
  Real intercept = 0;
  Real slope = 0;
  Real se_slope = 0;
  Real r_squared = 0;
  int n = 0;
};

LineFit ols_fit(const std::vector<Real>& x, const std::vector<Real>& y);

/// Wilson 95% score interval for a binomial proportion.
struct Interval {
  Real lo = 0;
  Real hi = 0;
};
Interval wilson_interval(int successes, int trials);

/// Standard normal CDF and two-sided tail p-value for a z score.
Real normal_cdf(Real z);
Real two_sided_p(Real z);

/// Welch two-sample z test on summary statistics (normal approximation).
Real welch_p_value(const SampleStats& a, const SampleStats& b);

}  // namespace sgf
