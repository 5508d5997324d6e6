#include "divaudit/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "divaudit/audit.hpp"
#include "divaudit/cauchy.hpp"

namespace divaudit {

std::vector<double> default_sweep_grid() {
  return {1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
}

LimitEstimate extrapolate_limit(std::string name,
                                std::vector<std::pair<double, double>> samples,
                                std::optional<double> expected) {
  if (samples.empty()) {
    throw std::domain_error("extrapolate_limit requires at least one sample");
  }
  std::sort(samples.begin(), samples.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  LimitEstimate est;
  est.target_name = std::move(name);
  est.samples = samples;
  est.expected = expected;

  const std::size_t k = std::min<std::size_t>(3, samples.size());
  if (k == 1) {
    est.estimate = samples.back().second;
    est.error_bar = 0.0;
    return est;
  }
  // Least-squares line y = a + b t through the k smallest-t samples,
  // extrapolated to t = 0. The sweep quantities are analytic in t near 0, so
  // the residual scale also bounds the curvature bias; 3x covers it.
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t i = samples.size() - k; i < samples.size(); ++i) {
    const auto [t, y] = samples[i];
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  const double kk = static_cast<double>(k);
  const double denom = kk * stt - st * st;
  const double slope = (kk * sty - st * sy) / denom;
  const double intercept = (sy - slope * st) / kk;
  double max_resid = 0.0;
  for (std::size_t i = samples.size() - k; i < samples.size(); ++i) {
    const auto [t, y] = samples[i];
    max_resid = std::max(max_resid, std::abs(intercept + slope * t - y));
  }
  est.estimate = intercept;
  est.error_bar = 3.0 * max_resid;
  return est;
}

double jsd_two_gp_over_fp(double t) {
  if (!(t > 0.0 && t < 0.5)) {
    throw std::domain_error("derivative ratio requires t in (0, 1/2)");
  }
  return 1.0 - std::log1p(2.0 * t / (1.0 - t)) /
                   std::log1p(4.0 * t / (1.0 - 2.0 * t));
}

std::pair<LimitEstimate, LimitEstimate> jsd_fg_sweep(
    const std::vector<double>& ts) {
  if (ts.empty()) throw std::domain_error("jsd_fg_sweep requires a nonempty grid");
  std::vector<std::pair<double, double>> gf, gpfp;
  for (double t : ts) {
    if (!(t > 0.0 && t < 0.5)) {
      throw std::domain_error("jsd_fg_sweep grid values must lie in (0, 1/2)");
    }
    gf.emplace_back(t, jsd_family_g(t) / jsd_family_f(t));
    gpfp.emplace_back(t, jsd_two_gp_over_fp(t));
  }
  return {extrapolate_limit("g/f", std::move(gf), 0.25),
          extrapolate_limit("2g'/f'", std::move(gpfp), 0.5)};
}

double eq1_margin(double alpha, double t) {
  if (!(t > 0.0 && t < 0.5)) {
    throw std::domain_error("eq1_margin requires t in (0, 1/2)");
  }
  const double ratio = jsd_family_g(t) / jsd_family_f(t);
  return std::pow(ratio, 1.0 - alpha) - jsd_two_gp_over_fp(t);
}

std::vector<LimitEstimate> cauchy_h_ratio_sweep(const Generator& gen,
                                                const std::vector<double>& ts) {
  if (!gen.smooth_at_1 || !(gen.deriv2(1.0) > 0.0)) {
    throw std::domain_error(
        "cauchy_h_ratio_sweep requires a smooth generator with f''(1) > 0");
  }
  std::vector<std::pair<double, double>> r0, r1, r2;
  for (double t : ts) {
    r0.emplace_back(t, h(gen, 2.0 * t, 1e-13) / h(gen, t, 1e-13));
    r1.emplace_back(t, 2.0 * h_prime(gen, 2.0 * t, 1e-13) / h_prime(gen, t, 1e-13));
    r2.emplace_back(t, 4.0 * h_double_prime(gen, 2.0 * t, 1e-12) /
                           h_double_prime(gen, t, 1e-12));
  }
  return {extrapolate_limit("h(2t)/h(t)", std::move(r0), 4.0),
          extrapolate_limit("2h'(2t)/h'(t)", std::move(r1), 4.0),
          extrapolate_limit("4h''(2t)/h''(t)", std::move(r2), 4.0)};
}

std::vector<LimitEstimate> cauchy_tv_ratio_sweep(const std::vector<double>& ts) {
  const Generator tv = generator_tv();
  std::vector<std::pair<double, double>> ratio, hp;
  for (double t : ts) {
    ratio.emplace_back(t, h(tv, 2.0 * t, 1e-12) / h(tv, t, 1e-12));
    hp.emplace_back(t, h_prime(tv, t, 1e-12));
  }
  return {extrapolate_limit("h(2t)/h(t)", std::move(ratio), 2.0),
          extrapolate_limit("h'(t)", std::move(hp), 1.0 / std::numbers::pi)};
}

LimitEstimate cauchy_h2_limit(const Generator& gen) {
  if (!gen.smooth_at_1) {
    throw std::domain_error("cauchy_h2_limit requires a smooth generator");
  }
  std::vector<std::pair<double, double>> samples;
  for (double t : default_sweep_grid()) {
    samples.emplace_back(t, h_double_prime(gen, t, 1e-12));
  }
  return extrapolate_limit("h''(t)", std::move(samples), gen.deriv2(1.0) / 2.0);
}

}  // namespace divaudit
