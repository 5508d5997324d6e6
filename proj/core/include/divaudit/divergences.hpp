#pragma once

#include "divaudit/generator.hpp"
#include "divaudit/multinomial.hpp"

namespace divaudit {

enum class LogBase { base2, natural };

/// A nonnegative, possibly infinite divergence value tagged with the log base
/// it was computed in. +inf is permitted only for KL-type absolute-continuity
/// failures.
struct DivergenceValue {
  double value;
  LogBase base;
};

/// Kullback-Leibler divergence in bits. Returns +inf iff some p_i > 0 has
/// q_i = 0. Throws std::domain_error on dimension mismatch.
DivergenceValue kl(const Multinomial& p, const Multinomial& q);

/// Jensen-Shannon divergence in bits, in [0, 1], symmetric, defined for
/// boundary points. Computed by the expanded mixture-KL sum with log1p to
/// keep nearby pairs accurate; see jsd_entropy_form for the H-based route.
DivergenceValue jsd(const Multinomial& p, const Multinomial& q);

/// JSD via H((P+Q)/2) - (H(P)+H(Q))/2. Cross-check route; agrees with jsd()
/// within 1e-12 but loses precision when P is very close to Q.
DivergenceValue jsd_entropy_form(const Multinomial& p, const Multinomial& q);

/// JSD via (KL(P:M) + KL(Q:M)) / 2 with M = (P+Q)/2.
DivergenceValue jsd_kl_form(const Multinomial& p, const Multinomial& q);

/// Total variation distance sum |p_i - q_i|, in [0, 2].
DivergenceValue tvd(const Multinomial& p, const Multinomial& q);

/// Generic f-divergence sum_i p_i f(q_i/p_i) in the generator's natural-log
/// scale. Boundary terms: p_i = 0 contributes q_i * lim f(u)/u (else +inf);
/// q_i = 0, p_i > 0 contributes p_i * f(0+) (else +inf). Never NaN.
DivergenceValue f_divergence_discrete(const Generator& gen, const Multinomial& p,
                                      const Multinomial& q);

}  // namespace divaudit
