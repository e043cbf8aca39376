#pragma once

// The continuous exact method: Beta(m+1, n-m+1) posterior density, mean,
// CDF, and equal-tailed credible interval.

#include <cmath>

#include "bernest/special_fn.hpp"
#include "bernest/types.hpp"

namespace bernest {

/// Posterior density e(x) = x^m (1-x)^(n-m) / B(m+1, n-m+1), with the log
/// normalizer cached at construction. Immutable, safe to share across threads.
class PosteriorDensity {
 public:
  explicit PosteriorDensity(SampleSummary s)
      : sample_(s), log_norm_(ln_beta(s.posterior_shapes())) {}
  const SampleSummary& sample() const { return sample_; }
  double log_norm() const { return log_norm_; }

 private:
  SampleSummary sample_;
  double log_norm_;
};

inline double density_at(const PosteriorDensity& d, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("density_at: x must lie in [0,1], got " + std::to_string(x));
  }
  const double lp = log_likelihood(d.sample(), x);
  return std::isinf(lp) ? 0.0 : std::exp(lp - d.log_norm());
}

/// Posterior mean (m+1)/(n+2) -- the rule of succession.
inline double posterior_mean(const SampleSummary& s) {
  return static_cast<double>(s.m + 1) / static_cast<double>(s.n + 2);
}

/// Posterior CDF I_x(m+1, n-m+1).
inline double posterior_cdf(const PosteriorDensity& d, double x) {
  return reg_inc_beta(x, d.sample().posterior_shapes());
}

/// Equal-tailed interval: x1, x2 with I_{x1} = (1-c)/2 and I_{x2} = (1+c)/2.
inline CredibleInterval credible_interval(const SampleSummary& s, ConfidenceLevel level) {
  const BetaParams shapes = s.posterior_shapes();
  const double x1 = inv_reg_inc_beta(level.lower_tail(), shapes);
  const double x2 = inv_reg_inc_beta(level.upper_tail(), shapes);
  return {x1, x2, level};
}

}  // namespace bernest
