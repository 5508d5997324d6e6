#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "divaudit/cauchy.hpp"
#include "divaudit/generator.hpp"
#include "divaudit/multinomial.hpp"

namespace divaudit {

/// Thrown when the grid/refinement search finds no triangle violation.
/// Carries the maximum objective observed so callers can distinguish "no
/// violation exists in this regime" from a too-coarse configuration.
struct SearchFailure : std::runtime_error {
  explicit SearchFailure(const std::string& msg, double max_objective)
      : std::runtime_error(msg), max_objective(max_objective) {}
  double max_objective;
};

/// A certified triangle-inequality violation: three distributions with
/// d13^ = d(x,z)^alpha exceeding d12 + d23. margin > 0 certifies the
/// violation; all three d-values are recomputable from the stored points.
struct TriangleCertificate {
  std::string family;  // "multinomial" or "cauchy"
  std::vector<Multinomial> simplex_points;  // size 3 when family==multinomial
  std::vector<CauchyParams> cauchy_points;  // size 3 when family==cauchy
  double alpha;
  double d12;
  double d23;
  double d13;
  double margin;  // d13 - d12 - d23
  std::string generator;  // generator id for cauchy, "jsd" for multinomial
  double witness_t;       // family parameter at which the triple was built
};

struct SearchConfig {
  double t_min;
  double t_max;
  int grid_size = 256;
  double refine_tol = 1e-10;
  double margin_floor = 1e-10;
};

/// Defaults: t in [1e-6, 0.49] for the multinomial family, [1e-6, 5] for
/// Cauchy scale triples.
SearchConfig default_multinomial_search();
SearchConfig default_cauchy_search();

/// F(t) = f(t)^alpha - 2 g(t)^alpha for the symmetric binary family, with
/// f(t) = JSD(P_{1/2-t} : P_{1/2+t}) and g(t) = JSD(P_{1/2-t} : P_{1/2}).
/// F(t) > 0 witnesses a triangle violation. Requires 0 < t < 1/2.
double F_multinomial(double alpha, double t);

/// f(t) and g(t) above, exposed for sweeps.
double jsd_family_f(double t);
double jsd_family_g(double t);

/// Searches the t-grid for F(t) > margin_floor, refines by golden section,
/// and certifies the triple (P_{1/2-t}, P_{1/2}, P_{1/2+t}). For n >= 3 the
/// points are embedded interior with a shrinking eps until the re-verified
/// margin clears the floor. Requires alpha > 1/2 in practice; throws
/// SearchFailure when no violating t is found.
TriangleCertificate find_jsd_violation(double alpha, const SearchConfig& cfg,
                                       std::size_t n = 2);

/// Searches t for h(2t)^alpha - 2 h(t)^alpha > margin_floor on the scale
/// triple ((0,e^-t), (0,1), (0,e^t)). The generator must be C^2 at 1 with
/// f''(1) > 0; throws std::domain_error otherwise.
TriangleCertificate find_cauchy_violation(const Generator& gen, double alpha,
                                          const SearchConfig& cfg);

/// Raises a positive-margin certificate to exponent alpha*beta, beta >= 1.
/// The power-mean inequality x^b + y^b <= (x+y)^b guarantees the amplified
/// margin stays positive.
TriangleCertificate amplify_certificate(const TriangleCertificate& cert,
                                        double beta);

struct AuditReport {
  std::uint64_t num_triples;
  std::uint64_t violations;
  double worst_margin;  // most positive d13 - d12 - d23 observed
  double alpha;
  std::uint64_t seed;
};

using PairMeasure =
    std::function<double(const Multinomial&, const Multinomial&)>;

/// Samples num_triples triples of interior points uniform on the simplex
/// (dimension n) from a seeded portable stream and counts triangle
/// violations of divergence^alpha beyond 1e-12. Deterministic given seed.
AuditReport random_audit(const PairMeasure& divergence, double alpha,
                         std::uint64_t num_triples, std::uint64_t seed,
                         std::size_t n = 3);

}  // namespace divaudit
