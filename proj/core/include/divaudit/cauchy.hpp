#pragma once

#include "divaudit/generator.hpp"

namespace divaudit {

/// Location-scale parameters of a univariate Cauchy distribution.
/// Density: (sigma/pi) / ((x - mu)^2 + sigma^2).
struct CauchyParams {
  double mu;
  double sigma;  // > 0, enforced by make_cauchy

  bool operator==(const CauchyParams&) const = default;
};

/// Validates sigma > 0 and finiteness. Throws std::domain_error otherwise.
CauchyParams make_cauchy(double mu, double sigma);

/// McCullagh's maximal invariant
///   zeta = 1 + ((mu2-mu1)^2 + (sigma2-sigma1)^2) / (2 sigma1 sigma2).
/// Always >= 1, symmetric, invariant under common translation and common
/// positive scaling. Every Cauchy f-divergence is a function of zeta alone.
double zeta(const CauchyParams& a, const CauchyParams& b);

/// f-divergence between Cauchy distributions via the compact single-integral
/// form: integral over [0, pi] of f(1/(zeta + sqrt(zeta^2-1) cos theta)) / pi.
/// Quadrature to absolute tolerance 1e-10 by default.
double f_div_cauchy(const Generator& gen, const CauchyParams& a,
                    const CauchyParams& b, double abs_tol = 1e-10);

/// Same divergence by direct integration of f(p_b/p_a) p_a over the real
/// line, mapped compact by x = mu1 + sigma1 tan(u). Independent oracle for
/// f_div_cauchy. Absolute tolerance 1e-9 by default.
double f_div_cauchy_oracle(const Generator& gen, const CauchyParams& a,
                           const CauchyParams& b, double abs_tol = 1e-9);

/// h(t) = integral over [0, pi] of f(1/(cosh t + sinh t cos theta)) / pi,
/// the divergence along the scale family: h(t) = D_f((0, e^-t) : (0, 1))
/// and h(2t) = D_f((0, e^-t) : (0, e^t)).
double h(const Generator& gen, double t, double abs_tol = 1e-10);

/// dh/dt by quadrature of the analytic integrand (uses gen.deriv1).
/// For the TV generator the integrand has a jump where the argument crosses
/// 1; the adaptive rule resolves it for any t > 0.
double h_prime(const Generator& gen, double t, double abs_tol = 1e-10);

/// d^2h/dt^2 by quadrature of the two-term analytic integrand (uses
/// gen.deriv2 and gen.deriv1). Requires a smooth generator; as t -> 0+ the
/// value tends to f''(1)/2. Throws std::domain_error for non-smooth gen.
double h_double_prime(const Generator& gen, double t, double abs_tol = 1e-10);

/// Closed form of the Cauchy KL divergence as a function of zeta:
/// ln((1 + zeta)/2). Along the scale family, 2 ln cosh(t/2). Test oracle.
double kl_cauchy_closed(double zeta_value);

}  // namespace divaudit
