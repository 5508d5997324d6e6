#include "divaudit/divergences.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace divaudit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLn2 = std::log(2.0);

void require_same_dim(const Multinomial& p, const Multinomial& q) {
  if (p.size() != q.size()) {
    throw std::domain_error("distributions have different dimensions");
  }
}

}  // namespace

DivergenceValue kl(const Multinomial& p, const Multinomial& q) {
  require_same_dim(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return {kInf, LogBase::base2};
    sum += p[i] * std::log2(p[i] / q[i]);
  }
  return {std::max(sum, 0.0), LogBase::base2};
}

DivergenceValue jsd(const Multinomial& p, const Multinomial& q) {
  require_same_dim(p, q);
  // Expanded mixture-KL sum. log1p keeps each term accurate when p ~= q,
  // where the entropy identity cancels catastrophically.
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double a = p[i], b = q[i];
    const double ta = a > 0.0 ? -a * std::log1p((b - a) / (2.0 * a)) : 0.0;
    const double tb = b > 0.0 ? -b * std::log1p((a - b) / (2.0 * b)) : 0.0;
    sum += ta + tb;  // single commutative add keeps jsd(p,q) == jsd(q,p) exact
  }
  sum /= 2.0 * kLn2;
  return {std::min(std::max(sum, 0.0), 1.0), LogBase::base2};
}

DivergenceValue jsd_entropy_form(const Multinomial& p, const Multinomial& q) {
  require_same_dim(p, q);
  std::vector<double> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m[i] = (p[i] + q[i]) / 2.0;
  const auto mid = Multinomial::from_weights(std::move(m));
  const double v = entropy(mid) - (entropy(p) + entropy(q)) / 2.0;
  return {std::min(std::max(v, 0.0), 1.0), LogBase::base2};
}

DivergenceValue jsd_kl_form(const Multinomial& p, const Multinomial& q) {
  require_same_dim(p, q);
  std::vector<double> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m[i] = (p[i] + q[i]) / 2.0;
  const auto mid = Multinomial::from_weights(std::move(m));
  const double v = (kl(p, mid).value + kl(q, mid).value) / 2.0;
  return {v, LogBase::base2};
}

DivergenceValue tvd(const Multinomial& p, const Multinomial& q) {
  require_same_dim(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return {sum, LogBase::natural};  // base-free
}

DivergenceValue f_divergence_discrete(const Generator& gen, const Multinomial& p,
                                      const Multinomial& q) {
  require_same_dim(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double a = p[i], b = q[i];
    if (a > 0.0 && b > 0.0) {
      sum += a * gen.eval(b / a);
    } else if (a == 0.0 && b > 0.0) {
      if (!gen.linear_growth) return {kInf, LogBase::natural};
      sum += b * *gen.linear_growth;
    } else if (a > 0.0 && b == 0.0) {
      if (!gen.defined_at_0 || !gen.value_at_zero) {
        return {kInf, LogBase::natural};
      }
      sum += a * *gen.value_at_zero;
    }
  }
  return {std::max(sum, 0.0), LogBase::natural};
}

}  // namespace divaudit
