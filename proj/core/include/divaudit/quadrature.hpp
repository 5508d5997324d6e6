#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace divaudit {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b] to the
/// requested absolute tolerance. Bisects intervals whose Kronrod error
/// estimate exceeds their share of the budget. Throws QuadratureError with
/// diagnostics if the subdivision limit is reached.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_depth = 48);

/// Same, but seeds the subdivision with known interior break points (kink
/// locations), so the error estimator never has to straddle one.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, const std::vector<double>& splits,
                          double abs_tol, int max_depth = 48);

}  // namespace divaudit
