#include "divaudit/audit.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "divaudit/divergences.hpp"

namespace divaudit {

namespace {

// Golden-section maximization of fn on [a, b].
template <typename Fn>
double golden_max(Fn&& fn, double a, double b, double tol) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = fn(x1), f2 = fn(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = fn(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = fn(x1);
    }
  }
  return (a + b) / 2.0;
}

// Grid scan then golden-section refinement; returns (t*, fn(t*)).
template <typename Fn>
std::pair<double, double> maximize(Fn&& fn, const SearchConfig& cfg) {
  double best_t = cfg.t_min, best_v = fn(cfg.t_min);
  const int n = std::max(cfg.grid_size, 8);
  for (int i = 1; i < n; ++i) {
    const double t =
        cfg.t_min + (cfg.t_max - cfg.t_min) * static_cast<double>(i) / (n - 1);
    const double v = fn(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }
  const double step = (cfg.t_max - cfg.t_min) / (n - 1);
  const double lo = std::max(cfg.t_min, best_t - step);
  const double hi = std::min(cfg.t_max, best_t + step);
  const double t = golden_max(fn, lo, hi, cfg.refine_tol);
  const double v = fn(t);
  return v > best_v ? std::pair{t, v} : std::pair{best_t, best_v};
}

double powered_jsd(const Multinomial& a, const Multinomial& b, double alpha) {
  return std::pow(jsd(a, b).value, alpha);
}

TriangleCertificate certify_multinomial(const std::vector<Multinomial>& pts,
                                        double alpha, double t) {
  TriangleCertificate cert;
  cert.family = "multinomial";
  cert.simplex_points = pts;
  cert.alpha = alpha;
  cert.d12 = powered_jsd(pts[0], pts[1], alpha);
  cert.d23 = powered_jsd(pts[1], pts[2], alpha);
  cert.d13 = powered_jsd(pts[0], pts[2], alpha);
  cert.margin = cert.d13 - cert.d12 - cert.d23;
  cert.generator = "jsd";
  cert.witness_t = t;
  return cert;
}

}  // namespace

SearchConfig default_multinomial_search() {
  return {.t_min = 1e-6, .t_max = 0.49, .grid_size = 256,
          .refine_tol = 1e-10, .margin_floor = 1e-10};
}

SearchConfig default_cauchy_search() {
  return {.t_min = 1e-6, .t_max = 5.0, .grid_size = 256,
          .refine_tol = 1e-10, .margin_floor = 1e-10};
}

double jsd_family_f(double t) {
  return jsd(binary_point(0.5 - t), binary_point(0.5 + t)).value;
}

double jsd_family_g(double t) {
  return jsd(binary_point(0.5 - t), binary_point(0.5)).value;
}

double F_multinomial(double alpha, double t) {
  if (!(t > 0.0 && t < 0.5)) {
    throw std::domain_error("F_multinomial requires t in (0, 1/2)");
  }
  if (!(alpha > 0.0)) {
    throw std::domain_error("F_multinomial requires alpha > 0");
  }
  return std::pow(jsd_family_f(t), alpha) -
         2.0 * std::pow(jsd_family_g(t), alpha);
}

TriangleCertificate find_jsd_violation(double alpha, const SearchConfig& cfg,
                                       std::size_t n) {
  if (n < 2) throw std::domain_error("find_jsd_violation requires n >= 2");
  auto objective = [alpha](double t) { return F_multinomial(alpha, t); };
  const auto [t, best] = maximize(objective, cfg);
  if (best <= cfg.margin_floor) {
    throw SearchFailure("no triangle violation found in [" +
                            std::to_string(cfg.t_min) + ", " +
                            std::to_string(cfg.t_max) + "]; max F = " +
                            std::to_string(best),
                        best);
  }
  std::vector<Multinomial> pts = {binary_point(0.5 - t), binary_point(0.5),
                                  binary_point(0.5 + t)};
  if (n == 2) {
    return certify_multinomial(pts, alpha, t);
  }
  // Interior embedding: shrink eps until the re-verified margin clears the
  // floor. The continuity argument guarantees this terminates.
  double eps = 1e-9;
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<Multinomial> epts;
    epts.reserve(3);
    for (const auto& p : pts) epts.push_back(embed(p, n, eps));
    auto cert = certify_multinomial(epts, alpha, t);
    if (cert.margin > cfg.margin_floor) return cert;
    eps /= 2.0;
  }
  throw SearchFailure("embedded margin never cleared the floor", best);
}

TriangleCertificate find_cauchy_violation(const Generator& gen, double alpha,
                                          const SearchConfig& cfg) {
  if (!gen.smooth_at_1) {
    throw std::domain_error("generator '" + gen.name +
                            "' is not C^2 at 1; scale-triple violations "
                            "require a smooth generator");
  }
  if (!(gen.deriv2(1.0) > 0.0)) {
    throw std::domain_error("generator '" + gen.name +
                            "' needs f''(1) > 0 for the scale-triple search");
  }
  auto objective = [&](double t) {
    return std::pow(h(gen, 2.0 * t), alpha) - 2.0 * std::pow(h(gen, t), alpha);
  };
  const auto [t, best] = maximize(objective, cfg);
  if (best <= cfg.margin_floor) {
    throw SearchFailure("no scale-triple violation found; max objective = " +
                            std::to_string(best),
                        best);
  }
  TriangleCertificate cert;
  cert.family = "cauchy";
  cert.cauchy_points = {make_cauchy(0.0, std::exp(-t)), make_cauchy(0.0, 1.0),
                        make_cauchy(0.0, std::exp(t))};
  cert.alpha = alpha;
  cert.d12 = std::pow(f_div_cauchy(gen, cert.cauchy_points[0], cert.cauchy_points[1]), alpha);
  cert.d23 = std::pow(f_div_cauchy(gen, cert.cauchy_points[1], cert.cauchy_points[2]), alpha);
  cert.d13 = std::pow(f_div_cauchy(gen, cert.cauchy_points[0], cert.cauchy_points[2]), alpha);
  cert.margin = cert.d13 - cert.d12 - cert.d23;
  cert.generator = gen.name;
  cert.witness_t = t;
  if (cert.margin <= cfg.margin_floor) {
    throw SearchFailure("refined point lost its margin on recomputation",
                        cert.margin);
  }
  return cert;
}

TriangleCertificate amplify_certificate(const TriangleCertificate& cert,
                                        double beta) {
  if (!(beta >= 1.0)) {
    throw std::domain_error("amplify_certificate requires beta >= 1");
  }
  if (!(cert.margin > 0.0)) {
    throw std::domain_error("amplify_certificate requires a positive margin");
  }
  if (beta == 1.0) return cert;
  TriangleCertificate out = cert;
  out.alpha = cert.alpha * beta;
  out.d12 = std::pow(cert.d12, beta);
  out.d23 = std::pow(cert.d23, beta);
  out.d13 = std::pow(cert.d13, beta);
  out.margin = out.d13 - out.d12 - out.d23;
  return out;
}

namespace {

// Portable uniform (0, 1) doubles from mt19937_64; avoids the
// implementation-defined distribution adaptors so seeded runs reproduce
// across standard libraries.
double next_uniform(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

Multinomial sample_simplex(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> w(n);
  for (auto& x : w) x = -std::log(next_uniform(rng));
  return Multinomial::from_weights(std::move(w));
}

}  // namespace

AuditReport random_audit(const PairMeasure& divergence, double alpha,
                         std::uint64_t num_triples, std::uint64_t seed,
                         std::size_t n) {
  if (num_triples < 1) {
    throw std::domain_error("random_audit requires at least one triple");
  }
  std::mt19937_64 rng(seed);
  AuditReport report{num_triples, 0, -std::numeric_limits<double>::infinity(),
                     alpha, seed};
  for (std::uint64_t i = 0; i < num_triples; ++i) {
    const auto p1 = sample_simplex(rng, n);
    const auto p2 = sample_simplex(rng, n);
    const auto p3 = sample_simplex(rng, n);
    const double margin = std::pow(divergence(p1, p3), alpha) -
                          std::pow(divergence(p1, p2), alpha) -
                          std::pow(divergence(p2, p3), alpha);
    if (margin > 1e-12) ++report.violations;
    if (margin > report.worst_margin) report.worst_margin = margin;
  }
  return report;
}

}  // namespace divaudit
