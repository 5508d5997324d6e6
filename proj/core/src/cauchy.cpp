#include "divaudit/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "divaudit/quadrature.hpp"

namespace divaudit {

namespace {

constexpr double kPi = std::numbers::pi;

// Integral over [0, pi] of gen applied along the zeta circle:
//   u(theta) = 1/(z + s cos theta), with s = sqrt(z^2 - 1).
// (z - s)(z + s) = 1, so u stays in [z - s, z + s], compactly inside
// (0, inf); checked with a small floating-point slack.
double zeta_integral(const std::function<double(double)>& f_of_u, double z,
                     double abs_tol, bool smooth_at_1 = true) {
  const double s = std::sqrt(std::max(z * z - 1.0, 0.0));
  // For generators with a kink at 1 (TV), u(theta) crosses 1 exactly once;
  // seed the quadrature with that break point.
  std::vector<double> splits;
  if (!smooth_at_1 && s > 0.0) {
    splits.push_back(std::acos(std::clamp((1.0 - z) / s, -1.0, 1.0)));
  }
  // (z - s)(z + s) = 1, so the lower endpoint is 1/(z + s); computing it as
  // z - s directly cancels badly for large z. The denominator is rewritten
  // the same way: z + s cos(theta) = (z - s) + s (1 + cos(theta))
  //             = 1/(z + s) + 2 s cos^2(theta/2), a sum of positive terms.
  const double inv_zs = 1.0 / (z + s);
  const double lo = inv_zs * (1.0 - 1e-9);
  const double hi = (z + s) * (1.0 + 1e-9);
  auto integrand = [&](double theta) {
    const double ch = std::cos(theta / 2.0);
    const double u = 1.0 / (inv_zs + 2.0 * s * ch * ch);
    if (u < lo || u > hi) {
      throw std::logic_error("zeta integrand left [zeta-s, zeta+s]");
    }
    return f_of_u(u);
  };
  return integrate_adaptive(integrand, 0.0, kPi, splits, abs_tol * kPi) / kPi;
}

}  // namespace

CauchyParams make_cauchy(double mu, double sigma) {
  if (!std::isfinite(mu) || !std::isfinite(sigma) || sigma <= 0.0) {
    throw std::domain_error("Cauchy parameters require finite mu and sigma > 0");
  }
  return {mu, sigma};
}

double zeta(const CauchyParams& a, const CauchyParams& b) {
  const double dmu = b.mu - a.mu;
  const double dsig = b.sigma - a.sigma;
  return 1.0 + (dmu * dmu + dsig * dsig) / (2.0 * a.sigma * b.sigma);
}

double f_div_cauchy(const Generator& gen, const CauchyParams& a,
                    const CauchyParams& b, double abs_tol) {
  const double z = std::max(zeta(a, b), 1.0);
  const double v = zeta_integral(gen.eval, z, abs_tol, gen.smooth_at_1);
  return std::max(v, 0.0);
}

double f_div_cauchy_oracle(const Generator& gen, const CauchyParams& a,
                           const CauchyParams& b, double abs_tol) {
  // x = mu1 + sigma1 tan(u) turns p_a(x) dx into du / pi, so the whole
  // integral is the average of f(p_b/p_a) over u in (-pi/2, pi/2).
  auto ratio = [&](double x) {
    const double da = (x - a.mu) * (x - a.mu) + a.sigma * a.sigma;
    const double db = (x - b.mu) * (x - b.mu) + b.sigma * b.sigma;
    return (b.sigma / a.sigma) * (da / db);
  };
  auto integrand = [&](double u) {
    return gen.eval(ratio(a.mu + a.sigma * std::tan(u)));
  };
  // Kink seeds for generators non-smooth at 1: solve p_b(x) = p_a(x), a
  // quadratic in x, and map the roots into u-space.
  std::vector<double> splits;
  if (!gen.smooth_at_1) {
    const double qa = b.sigma - a.sigma;
    const double qb = -2.0 * (b.sigma * a.mu - a.sigma * b.mu);
    const double qc = b.sigma * (a.mu * a.mu + a.sigma * a.sigma) -
                      a.sigma * (b.mu * b.mu + b.sigma * b.sigma);
    std::vector<double> roots;
    if (qa == 0.0) {
      if (qb != 0.0) roots.push_back(-qc / qb);
    } else {
      const double disc = qb * qb - 4.0 * qa * qc;
      if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        roots.push_back((-qb - sq) / (2.0 * qa));
        roots.push_back((-qb + sq) / (2.0 * qa));
      }
    }
    for (double x : roots) splits.push_back(std::atan((x - a.mu) / a.sigma));
  }
  const double v = integrate_adaptive(integrand, -kPi / 2.0, kPi / 2.0, splits,
                                      abs_tol * kPi) /
                   kPi;
  return std::max(v, 0.0);
}

double h(const Generator& gen, double t, double abs_tol) {
  if (!(t >= 0.0)) throw std::domain_error("h requires t >= 0");
  return std::max(
      zeta_integral(gen.eval, std::cosh(t), abs_tol, gen.smooth_at_1), 0.0);
}

double h_prime(const Generator& gen, double t, double abs_tol) {
  if (!(t > 0.0)) throw std::domain_error("h_prime requires t > 0");
  if (!gen.deriv1) throw std::domain_error("generator lacks deriv1");
  const double ch = std::cosh(t);
  const double sh = std::sinh(t);
  auto integrand = [&](double theta) {
    const double c = std::cos(theta);
    const double denom = ch + sh * c;
    const double num = sh + ch * c;
    double d1;
    try {
      d1 = gen.deriv1(1.0 / denom);
    } catch (const NotDifferentiableError&) {
      // A node landed exactly on a kink; use the midpoint of the one-sided
      // slopes, which is what the principal value of the integral sees.
      const double u = 1.0 / denom;
      d1 = (gen.deriv1(u * (1.0 - 1e-9)) + gen.deriv1(u * (1.0 + 1e-9))) / 2.0;
    }
    return -num / (denom * denom) * d1;
  };
  std::vector<double> splits;
  if (!gen.smooth_at_1 && sh > 0.0) {
    splits.push_back(std::acos(std::clamp((1.0 - ch) / sh, -1.0, 1.0)));
  }
  return integrate_adaptive(integrand, 0.0, kPi, splits, abs_tol * kPi) / kPi;
}

double h_double_prime(const Generator& gen, double t, double abs_tol) {
  if (!(t > 0.0)) throw std::domain_error("h_double_prime requires t > 0");
  if (!gen.smooth_at_1) {
    throw std::domain_error("h_double_prime requires a generator that is C^2 at 1");
  }
  const double ch = std::cosh(t);
  const double sh = std::sinh(t);
  auto integrand = [&](double theta) {
    const double c = std::cos(theta);
    const double d = ch + sh * c;   // 1/u
    const double n = sh + ch * c;
    const double u = 1.0 / d;
    const double d2 = d * d;
    const double n2 = n * n;
    return n2 / (d2 * d2) * gen.deriv2(u) +
           (2.0 * n2 - d2) / (d2 * d) * gen.deriv1(u);
  };
  return integrate_adaptive(integrand, 0.0, kPi, abs_tol * kPi) / kPi;
}

double kl_cauchy_closed(double zeta_value) {
  return std::log((1.0 + zeta_value) / 2.0);
}

}  // namespace divaudit
