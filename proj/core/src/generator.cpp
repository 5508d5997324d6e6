#include "divaudit/generator.hpp"

#include <cmath>
#include <string>

namespace divaudit {

namespace {

double central_diff(const std::function<double(double)>& f, double u, double h) {
  return (f(u + h) - f(u - h)) / (2.0 * h);
}

}  // namespace

Generator make_generator(Generator g) {
  const double at_one = g.eval(1.0);
  if (std::abs(at_one) > 1e-14) {
    throw std::invalid_argument("generator '" + g.name +
                                "': f(1) = " + std::to_string(at_one) +
                                ", expected 0");
  }

  // Midpoint convexity spot-check on a fixed probe grid; failure only flags.
  static const double probes[] = {0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0};
  for (double a : probes) {
    for (double b : probes) {
      if (a >= b) continue;
      const double mid = g.eval((a + b) / 2.0);
      const double avg = (g.eval(a) + g.eval(b)) / 2.0;
      if (mid > avg + 1e-12) g.convexity_ok = false;
    }
  }

  // Derivatives must agree with centered finite differences of eval.
  static const double checks[] = {0.5, 1.0, 2.0};
  const double h = 1e-6;
  for (double u : checks) {
    if (u == 1.0 && !g.smooth_at_1) continue;
    const double fd1 = central_diff(g.eval, u, h);
    const double d1 = g.deriv1(u);
    if (std::abs(d1 - fd1) > 1e-6 * std::max(1.0, std::abs(fd1))) {
      throw std::invalid_argument("generator '" + g.name +
                                  "': deriv1 disagrees with finite differences");
    }
    const double fd2 = central_diff(g.deriv1, u, h);
    const double d2 = g.deriv2(u);
    if (std::abs(d2 - fd2) > 1e-6 * std::max(1.0, std::abs(fd2))) {
      throw std::invalid_argument("generator '" + g.name +
                                  "': deriv2 disagrees with finite differences");
    }
  }
  return g;
}

Generator generator_js() {
  Generator g;
  g.name = "js";
  g.eval = [](double u) {
    return (u * std::log(2.0 * u / (1.0 + u)) - std::log((1.0 + u) / 2.0)) / 2.0;
  };
  g.deriv1 = [](double u) { return std::log(2.0 * u / (1.0 + u)) / 2.0; };
  g.deriv2 = [](double u) { return 1.0 / (2.0 * u * (1.0 + u)); };
  g.smooth_at_1 = true;
  g.defined_at_0 = true;
  g.value_at_zero = std::log(2.0) / 2.0;  // -ln(1/2)/2
  g.linear_growth = std::log(2.0) / 2.0;  // u ln 2 / 2 dominates
  return make_generator(std::move(g));
}

Generator generator_kl() {
  Generator g;
  g.name = "kl";
  g.eval = [](double u) { return -std::log(u); };
  g.deriv1 = [](double u) { return -1.0 / u; };
  g.deriv2 = [](double u) { return 1.0 / (u * u); };
  g.smooth_at_1 = true;
  g.defined_at_0 = false;
  g.linear_growth = 0.0;  // -ln(u)/u -> 0
  return make_generator(std::move(g));
}

Generator generator_tv() {
  Generator g;
  g.name = "tv";
  g.eval = [](double u) { return std::abs(u - 1.0) / 2.0; };
  g.deriv1 = [](double u) -> double {
    if (u == 1.0) throw NotDifferentiableError("f_TV has a kink at u = 1");
    return u > 1.0 ? 0.5 : -0.5;
  };
  g.deriv2 = [](double u) -> double {
    if (u == 1.0) throw NotDifferentiableError("f_TV has a kink at u = 1");
    return 0.0;
  };
  g.smooth_at_1 = false;
  g.defined_at_0 = true;
  g.value_at_zero = 0.5;
  g.linear_growth = 0.5;
  return make_generator(std::move(g));
}

Generator generator_by_id(std::string_view id) {
  if (id == "js") return generator_js();
  if (id == "kl") return generator_kl();
  if (id == "tv") return generator_tv();
  throw std::invalid_argument("unknown generator id: " + std::string(id));
}

}  // namespace divaudit
