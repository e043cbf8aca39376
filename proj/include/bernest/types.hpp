#pragma once

// Shared domain types for the estimators.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "bernest/special_fn.hpp"

namespace bernest {

/// Observed data: m successes in n Bernoulli trials. n = 0 is legal and means
/// "no data" (the posterior is then just the uniform prior).
struct SampleSummary {
  std::int64_t n;
  std::int64_t m;
  SampleSummary(std::int64_t trials, std::int64_t successes) : n(trials), m(successes) {
    if (n < 0 || m < 0 || m > n) {
      throw std::domain_error("SampleSummary: need 0 <= m <= n, got n=" +
                              std::to_string(trials) + " m=" + std::to_string(successes));
    }
  }
  /// Posterior beta shapes (m+1, n-m+1) under the uniform prior.
  BetaParams posterior_shapes() const {
    return {static_cast<double>(m) + 1.0, static_cast<double>(n - m) + 1.0};
  }
};

/// Target coverage c, strictly inside (0,1).
struct ConfidenceLevel {
  double c;
  explicit ConfidenceLevel(double level) : c(level) {
    if (!(c > 0.0 && c < 1.0)) {
      throw std::domain_error("ConfidenceLevel: c must lie strictly in (0,1), got " +
                              std::to_string(level));
    }
  }
  double lower_tail() const { return 0.5 * (1.0 - c); }
  double upper_tail() const { return 0.5 * (1.0 + c); }
};

/// Equal-tailed credible interval [lower, upper] at level `level`.
struct CredibleInterval {
  double lower;
  double upper;
  ConfidenceLevel level;
  double width() const { return upper - lower; }
  bool contains(double p) const { return lower <= p && p <= upper; }
};

/// ln[x^m (1-x)^(n-m)] with the 0^0 := 1 endpoint convention; -infinity where
/// the counts rule x out entirely (x = 0 with m > 0, x = 1 with m < n).
inline double log_likelihood(const SampleSummary& s, double x) {
  double lp = 0.0;
  if (s.m > 0) {
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    lp += static_cast<double>(s.m) * std::log(x);
  }
  if (s.m < s.n) {
    if (x == 1.0) return -std::numeric_limits<double>::infinity();
    lp += static_cast<double>(s.n - s.m) * std::log1p(-x);
  }
  return lp;
}

}  // namespace bernest
