#include <doctest.h>

#include <cmath>
#include <random>

#include "divaudit/divergences.hpp"
#include "divaudit/multinomial.hpp"

using namespace divaudit;

TEST_CASE("make_multinomial normalizes and flags interiority") {
  const auto u = Multinomial::from_weights({0.5, 0.5});
  CHECK(u[0] == doctest::Approx(0.5));
  CHECK(u.interior());

  const auto scaled = Multinomial::from_weights({2.0, 2.0});
  CHECK(scaled[0] == doctest::Approx(0.5));
  CHECK(scaled[1] == doctest::Approx(0.5));

  const auto vertex = Multinomial::from_weights({1.0, 0.0});
  CHECK(vertex[0] == 1.0);
  CHECK_FALSE(vertex.interior());
}

TEST_CASE("make_multinomial rejects bad input") {
  CHECK_THROWS_AS(Multinomial::from_weights({-0.1, 1.1}), std::domain_error);
  CHECK_THROWS_AS(Multinomial::from_weights({1.0}), std::domain_error);
  CHECK_THROWS_AS(Multinomial::from_weights({0.0, 0.0}), std::domain_error);
}

TEST_CASE("normalization holds for random inputs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(0.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> w(2 + rng() % 8);
    for (auto& x : w) x = unif(rng);
    const auto p = Multinomial::from_weights(w);
    double sum = 0.0;
    for (double x : p.weights()) sum += x;
    CHECK(std::abs(sum - 1.0) < 1e-12);
  }
}

TEST_CASE("binary_point") {
  const auto mid = binary_point(0.5);
  CHECK(mid[0] == 0.5);
  const auto p = binary_point(0.3);
  CHECK(p[0] == doctest::Approx(0.3));
  CHECK(p[1] == doctest::Approx(0.7));
  const auto vertex = binary_point(1.0);
  CHECK(vertex[0] == 1.0);
  CHECK_FALSE(vertex.interior());
  CHECK_THROWS_AS(binary_point(1.5), std::domain_error);
  CHECK_THROWS_AS(binary_point(-0.1), std::domain_error);
}

TEST_CASE("embed zero-pads or perturbs") {
  const auto padded = embed(binary_point(0.5), 3, 0.0);
  CHECK(padded.size() == 3);
  CHECK(padded[2] == 0.0);
  CHECK_FALSE(padded.interior());

  const auto inner = embed(binary_point(0.4), 4, 1e-9);
  CHECK(inner.size() == 4);
  CHECK(inner.interior());
  CHECK(inner[0] == doctest::Approx(0.4).epsilon(1e-8));
  CHECK(inner[3] == doctest::Approx(1e-9).epsilon(1e-6));

  CHECK_THROWS_AS(embed(binary_point(0.4), 4, 0.3), std::domain_error);
  CHECK_THROWS_AS(embed(binary_point(0.4), 2, 1e-9), std::domain_error);
}

TEST_CASE("embedded JSD matches the 2-dim JSD") {
  const auto p = binary_point(0.3);
  const auto q = binary_point(0.8);
  const double base = jsd(p, q).value;
  const double embedded = jsd(embed(p, 5, 1e-9), embed(q, 5, 1e-9)).value;
  CHECK(std::abs(embedded - base) < 1e-6);
}

TEST_CASE("entropy values and bounds") {
  CHECK(entropy(binary_point(0.5)) == doctest::Approx(1.0));
  CHECK(entropy(binary_point(1.0)) == 0.0);
  // -0.25 log2 0.25 - 0.75 log2 0.75
  CHECK(entropy(binary_point(0.25)) ==
        doctest::Approx(0.8112781244591328).epsilon(1e-12));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    std::vector<double> w(n);
    for (auto& x : w) x = unif(rng) + 1e-6;
    const auto p = Multinomial::from_weights(w);
    const double h = entropy(p);
    CHECK(h >= 0.0);
    CHECK(h <= std::log2(static_cast<double>(n)) + 1e-12);
  }
}

TEST_CASE("entropy is continuous at the boundary embedding") {
  const auto p = binary_point(0.3);
  const double target = entropy(embed(p, 4, 0.0));
  double prev_gap = 1.0;
  for (double eps : {1e-3, 1e-5, 1e-7, 1e-9}) {
    const double gap = std::abs(entropy(embed(p, 4, eps)) - target);
    CHECK(gap < prev_gap + 1e-15);
    prev_gap = gap;
  }
  CHECK(prev_gap < 1e-7);
}

TEST_CASE("binary entropy is symmetric in s") {
  for (double s : {0.1, 0.25, 0.4, 0.47}) {
    CHECK(entropy(binary_point(s)) ==
          doctest::Approx(entropy(binary_point(1.0 - s))).epsilon(1e-14));
  }
}
