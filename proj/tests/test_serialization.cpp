#include <doctest.h>

#include <cmath>

#include "divaudit/serialization.hpp"

using namespace divaudit;
using nlohmann::json;

TEST_CASE("multinomial JSON round trip with validation") {
  const auto p = Multinomial::from_weights({0.2, 0.3, 0.5});
  const auto back = multinomial_from_json(to_json(p));
  CHECK(back == p);

  CHECK_THROWS_AS(multinomial_from_json(json::parse("[0.5, -0.5]")),
                  std::domain_error);
  CHECK_THROWS_AS(multinomial_from_json(json::parse("{\"p\": 1}")),
                  std::domain_error);
  // Deserialization normalizes like the constructor.
  const auto scaled = multinomial_from_json(json::parse("[2, 2]"));
  CHECK(scaled[0] == 0.5);
}

TEST_CASE("cauchy params JSON round trip") {
  const auto p = make_cauchy(-1.5, 0.25);
  CHECK(cauchy_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(cauchy_from_json(json{{"mu", 0.0}, {"sigma", -1.0}}),
                  std::domain_error);
}

TEST_CASE("certificate JSON round trip preserves soundness data") {
  const auto cert = find_jsd_violation(0.6, default_multinomial_search(), 3);
  const json j = to_json(cert);
  CHECK(j.at("schema") == 1);
  const auto back = certificate_from_json(j);
  CHECK(back.family == cert.family);
  CHECK(back.alpha == cert.alpha);
  CHECK(back.d12 == cert.d12);
  CHECK(back.d23 == cert.d23);
  CHECK(back.d13 == cert.d13);
  CHECK(back.margin == cert.margin);
  CHECK(back.simplex_points.size() == 3);
  // Deserialization re-normalizes, so points match to normalization noise.
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < back.simplex_points[k].size(); ++i) {
      CHECK(std::abs(back.simplex_points[k][i] - cert.simplex_points[k][i]) <
            1e-15);
    }
  }
  // Serializing the same value twice is byte-identical.
  CHECK(to_json(cert).dump() == j.dump());
}

TEST_CASE("a found certificate amplifies after a round trip") {
  const auto cert = find_jsd_violation(0.6, default_multinomial_search(), 2);
  const auto back = certificate_from_json(to_json(cert));
  const auto amp = amplify_certificate(back, 2.0);
  CHECK(amp.alpha == doctest::Approx(1.2));
  CHECK(amp.margin > 0.0);
}

TEST_CASE("limit estimate JSON carries pass verdict") {
  const auto est =
      extrapolate_limit("demo", {{1e-2, 3.9}, {3e-3, 3.99}, {1e-3, 3.999}}, 4.0);
  const json j = to_json(est);
  CHECK(j.contains("estimate"));
  CHECK(j.contains("error_bar"));
  CHECK(j.at("expected") == 4.0);
  CHECK(j.contains("pass"));
}
