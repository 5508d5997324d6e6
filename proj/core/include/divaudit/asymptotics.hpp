#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divaudit/generator.hpp"

namespace divaudit {

/// An extrapolated t -> 0+ limit of a ratio, with the raw samples kept for
/// reporting. estimate comes from a least-squares line through the three
/// smallest-t samples; error_bar bounds both the fit residuals and the
/// extrapolation bias.
struct LimitEstimate {
  std::string target_name;
  std::vector<std::pair<double, double>> samples;  // (t, ratio), t decreasing
  double estimate;
  double error_bar;
  std::optional<double> expected;

  bool pass() const {
    return !expected || std::abs(estimate - *expected) <= error_bar;
  }
};

/// Default sweep grid {1e-1, 3e-2, 1e-2, 3e-3, 1e-3}.
std::vector<double> default_sweep_grid();

/// Builds a LimitEstimate from (t, ratio) samples. Sorts by decreasing t.
LimitEstimate extrapolate_limit(std::string name,
                                std::vector<std::pair<double, double>> samples,
                                std::optional<double> expected);

/// Sweeps g(t)/f(t) and 2 g'(t)/f'(t) for the symmetric binary JSD family,
/// using the closed derivative forms. Expected limits 1/4 and 1/2.
std::pair<LimitEstimate, LimitEstimate> jsd_fg_sweep(
    const std::vector<double>& ts);

/// Closed form of 2 g'(t)/f'(t) = 1 - ln((1+t)/(1-t)) / ln((1+2t)/(1-2t)).
double jsd_two_gp_over_fp(double t);

/// (g/f)^(1-alpha) - 2 g'/f'. Positive for all small t iff alpha > 1/2;
/// limiting value 4^(alpha-1) - 1/2.
double eq1_margin(double alpha, double t);

/// Sweeps h(2t)/h(t), 2h'(2t)/h'(t), 4h''(2t)/h''(t) for a smooth generator.
/// All three tend to 4. Returns the estimates in that order.
std::vector<LimitEstimate> cauchy_h_ratio_sweep(const Generator& gen,
                                                const std::vector<double>& ts);

/// TV contrast: h(2t)/h(t) -> 2 and h'(t) -> 1/pi for the TV generator.
std::vector<LimitEstimate> cauchy_tv_ratio_sweep(const std::vector<double>& ts);

/// h''(t) on a decreasing grid, extrapolated; limit f''(1)/2.
LimitEstimate cauchy_h2_limit(const Generator& gen);

}  // namespace divaudit
