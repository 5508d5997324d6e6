#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace divaudit {

/// A point of the probability simplex (or its closure).
///
/// Weights are normalized at construction, so downstream code may assume
/// sum(weights) == 1 to within 1e-12. The interior flag records whether all
/// weights are strictly positive.
class Multinomial {
 public:
  /// Validates and normalizes. Throws std::domain_error on negative weights,
  /// fewer than 2 entries, or an all-zero vector.
  static Multinomial from_weights(std::vector<double> weights);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }
  bool interior() const { return interior_; }

  bool operator==(const Multinomial&) const = default;

 private:
  Multinomial(std::vector<double> w, bool interior)
      : weights_(std::move(w)), interior_(interior) {}

  std::vector<double> weights_;
  bool interior_;
};

/// The binary point (s, 1-s). Requires s in [0, 1].
Multinomial binary_point(double s);

/// Embeds a binary point into the n-simplex as (p1, p2, eps, ..., eps),
/// renormalized. eps == 0 gives the zero-padded boundary embedding; otherwise
/// requires 0 < eps < min(p1, p2)/2 and the result is interior.
Multinomial embed(const Multinomial& p, std::size_t n, double eps);

/// Shannon entropy in bits, with the 0*log(0) = 0 convention.
double entropy(const Multinomial& p);

}  // namespace divaudit
