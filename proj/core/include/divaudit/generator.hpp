#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace divaudit {

/// Thrown when a one-sided-only derivative is requested at its kink.
struct NotDifferentiableError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A convex generator f on (0, inf) with f(1) = 0, together with its first
/// and second derivatives and the boundary data needed to close the
/// f-divergence sum on the simplex boundary.
///
/// All generators in this module use the natural logarithm.
struct Generator {
  std::string name;
  std::function<double(double)> eval;
  std::function<double(double)> deriv1;
  std::function<double(double)> deriv2;
  bool smooth_at_1 = true;   // C^2 on a neighborhood of 1
  bool defined_at_0 = true;  // f extends continuously to 0+
  std::optional<double> value_at_zero;  // lim_{u->0+} f(u), if finite
  std::optional<double> linear_growth;  // lim_{u->inf} f(u)/u, if finite
  bool convexity_ok = true;  // midpoint spot-check on a probe grid
};

/// Validates a generator: f(1) = 0 within 1e-14, derivative/finite-difference
/// agreement at u in {0.5, 1, 2} (skipping 1 for non-smooth generators), and
/// a convexity spot-check which only lowers convexity_ok on failure.
/// Throws std::invalid_argument if f(1) != 0 or a derivative disagrees with
/// finite differences.
Generator make_generator(Generator g);

/// f_JS(u) = (u ln(2u/(1+u)) - ln((1+u)/2)) / 2. f''(1) = 1/4.
Generator generator_js();

/// f_KL(u) = -ln u, so that sum p f(q/p) = sum p ln(p/q). f''(1) = 1.
Generator generator_kl();

/// f_TV(u) = |u - 1| / 2. Not differentiable at 1; deriv1/deriv2 throw
/// NotDifferentiableError exactly at u = 1.
Generator generator_tv();

/// Lookup by id: "js", "kl", "tv". Throws std::invalid_argument otherwise.
Generator generator_by_id(std::string_view id);

}  // namespace divaudit
