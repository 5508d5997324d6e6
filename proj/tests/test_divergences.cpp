#include <doctest.h>

#include <cmath>
#include <random>

#include "divaudit/divergences.hpp"

using namespace divaudit;

namespace {

Multinomial random_interior(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> unif(1e-6, 1.0);
  std::vector<double> w(n);
  for (auto& x : w) x = unif(rng);
  return Multinomial::from_weights(w);
}

}  // namespace

TEST_CASE("kl values") {
  const auto u = binary_point(0.5);
  const auto q = Multinomial::from_weights({0.25, 0.75});
  CHECK(kl(u, u).value == 0.0);
  // 0.5 log2(2) + 0.5 log2(2/3) = 1 - 0.5 log2 3
  CHECK(kl(u, q).value ==
        doctest::Approx(1.0 - 0.5 * std::log2(3.0)).epsilon(1e-14));
  CHECK(std::isinf(kl(binary_point(1.0), binary_point(0.0)).value));
  CHECK(kl(u, q).base == LogBase::base2);
}

TEST_CASE("kl is asymmetric") {
  const auto p = binary_point(0.5);
  const auto q = Multinomial::from_weights({0.25, 0.75});
  CHECK(kl(p, q).value != kl(q, p).value);
}

TEST_CASE("dimension mismatch rejected") {
  const auto p = binary_point(0.5);
  const auto q = Multinomial::from_weights({1.0, 1.0, 1.0});
  CHECK_THROWS_AS(kl(p, q), std::domain_error);
  CHECK_THROWS_AS(jsd(p, q), std::domain_error);
  CHECK_THROWS_AS(tvd(p, q), std::domain_error);
}

TEST_CASE("jsd values and bounds") {
  const auto p = binary_point(0.5);
  CHECK(jsd(p, p).value == 0.0);
  CHECK(jsd(binary_point(1.0), binary_point(0.0)).value ==
        doctest::Approx(1.0).epsilon(1e-14));

  const auto q = Multinomial::from_weights({0.9, 0.1});
  const double v = jsd(p, q).value;
  CHECK(v > 0.0);
  CHECK(v < 1.0);
  CHECK(std::abs(v - jsd_kl_form(p, q).value) < 1e-12);
}

TEST_CASE("jsd formula equivalences on random pairs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const auto p = random_interior(rng, n);
    const auto q = random_interior(rng, n);
    const double direct = jsd(p, q).value;
    CHECK(std::abs(direct - jsd_entropy_form(p, q).value) < 1e-12);
    CHECK(std::abs(direct - jsd_kl_form(p, q).value) < 1e-12);
  }
}

TEST_CASE("tvd values") {
  const auto p = binary_point(0.5);
  CHECK(tvd(p, p).value == 0.0);
  CHECK(tvd(binary_point(1.0), binary_point(0.0)).value == 2.0);
  CHECK(tvd(p, Multinomial::from_weights({0.25, 0.75})).value ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("nonnegativity, symmetry, and the 2 JSD <= TVD bound") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const auto p = random_interior(rng, n);
    const auto q = random_interior(rng, n);
    const double j1 = jsd(p, q).value;
    CHECK(j1 >= 0.0);
    CHECK(kl(p, q).value >= 0.0);
    const double tv = tvd(p, q).value;
    CHECK(tv >= 0.0);
    CHECK(jsd(q, p).value == j1);  // exact symmetry
    CHECK(2.0 * j1 <= tv + 1e-12);
  }
}

TEST_CASE("sqrt JSD satisfies the triangle inequality") {
  std::mt19937_64 rng(37);
  int checked = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    const auto a = random_interior(rng, 3);
    const auto b = random_interior(rng, 3);
    const auto c = random_interior(rng, 3);
    const double dab = std::sqrt(jsd(a, b).value);
    const double dbc = std::sqrt(jsd(b, c).value);
    const double dac = std::sqrt(jsd(a, c).value);
    if (dac > dab + dbc + 1e-12) ++checked;
  }
  CHECK(checked == 0);
}

TEST_CASE("f-divergence agrees with jsd after base conversion") {
  const auto js = generator_js();
  const auto p = binary_point(0.5);
  const auto q = Multinomial::from_weights({0.25, 0.75});
  const double nat = f_divergence_discrete(js, p, q).value;
  CHECK(std::abs(nat / std::log(2.0) - jsd(p, q).value) < 1e-10);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_interior(rng, 3);
    const auto b = random_interior(rng, 3);
    CHECK(std::abs(f_divergence_discrete(js, a, b).value / std::log(2.0) -
                   jsd(a, b).value) < 1e-10);
  }
}

TEST_CASE("f-divergence with the TV generator halves the TVD") {
  const auto tv = generator_tv();
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_interior(rng, 4);
    const auto b = random_interior(rng, 4);
    CHECK(std::abs(f_divergence_discrete(tv, a, b).value -
                   tvd(a, b).value / 2.0) < 1e-12);
  }
}

TEST_CASE("f-divergence is zero at identical arguments") {
  const auto p = Multinomial::from_weights({0.2, 0.3, 0.5});
  for (const char* id : {"js", "kl", "tv"}) {
    CHECK(f_divergence_discrete(generator_by_id(id), p, p).value == 0.0);
  }
}

TEST_CASE("f-divergence boundary handling is explicit, never NaN") {
  const auto vertex = binary_point(1.0);   // (1, 0)
  const auto other = binary_point(0.0);    // (0, 1)
  const auto inner = binary_point(0.5);

  // KL generator: q = 0 where p > 0 gives +inf.
  const double kl_sing = f_divergence_discrete(generator_kl(), vertex, other).value;
  CHECK(std::isinf(kl_sing));
  CHECK_FALSE(std::isnan(kl_sing));

  // JS generator is finite everywhere on the closed simplex.
  const double js_sing = f_divergence_discrete(generator_js(), vertex, other).value;
  CHECK(js_sing == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  // TV generator: singular pair gives 1 (= TVD/2).
  CHECK(f_divergence_discrete(generator_tv(), vertex, other).value ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_FALSE(std::isnan(f_divergence_discrete(generator_kl(), inner, vertex).value));
}
