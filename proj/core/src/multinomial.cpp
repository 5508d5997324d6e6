#include "divaudit/multinomial.hpp"

#include <cmath>
#include <stdexcept>

namespace divaudit {

Multinomial Multinomial::from_weights(std::vector<double> weights) {
  if (weights.size() < 2) {
    throw std::domain_error("multinomial needs at least 2 entries");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) {  // also rejects NaN
      throw std::domain_error("multinomial weight must be nonnegative");
    }
    sum += w;
  }
  if (sum <= 0.0 || !std::isfinite(sum)) {
    throw std::domain_error("multinomial weights must have positive finite sum");
  }
  bool interior = true;
  for (double& w : weights) {
    w /= sum;
    if (w == 0.0) interior = false;
  }
  return Multinomial(std::move(weights), interior);
}

Multinomial binary_point(double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::domain_error("binary_point requires s in [0, 1]");
  }
  return Multinomial::from_weights({s, 1.0 - s});
}

Multinomial embed(const Multinomial& p, std::size_t n, double eps) {
  if (p.size() != 2) {
    throw std::domain_error("embed expects a binary distribution");
  }
  if (n < 3) {
    throw std::domain_error("embed requires n >= 3");
  }
  const double lo = std::min(p[0], p[1]);
  if (eps < 0.0 || (eps > 0.0 && eps >= lo / 2.0)) {
    throw std::domain_error("embed requires 0 <= eps < min(p1, p2)/2");
  }
  std::vector<double> w(n, eps);
  w[0] = p[0];
  w[1] = p[1];
  return Multinomial::from_weights(std::move(w));
}

double entropy(const Multinomial& p) {
  double h = 0.0;
  for (double w : p.weights()) {
    if (w > 0.0) h -= w * std::log2(w);
  }
  return h;
}

}  // namespace divaudit
