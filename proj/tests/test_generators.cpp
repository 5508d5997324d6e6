#include <doctest.h>

#include <cmath>

#include "divaudit/generator.hpp"

using namespace divaudit;

namespace {

double second_difference(const Generator& g, double u, double step) {
  return (g.eval(u + step) - 2.0 * g.eval(u) + g.eval(u - step)) / (step * step);
}

}  // namespace

TEST_CASE("all named generators vanish at 1") {
  for (const char* id : {"js", "kl", "tv"}) {
    CHECK(std::abs(generator_by_id(id).eval(1.0)) <= 1e-14);
  }
}

TEST_CASE("js generator values and derivatives") {
  const auto js = generator_js();
  CHECK(js.smooth_at_1);
  CHECK(js.deriv2(1.0) == doctest::Approx(0.25).epsilon(1e-14));
  // (2 ln(4/3) - ln(3/2)) / 2
  CHECK(js.eval(2.0) ==
        doctest::Approx(0.08494951839769871).epsilon(1e-14));
  CHECK(std::abs(js.deriv2(1.0) - second_difference(js, 1.0, 1e-4)) <
        1e-5 * 0.25);
}

TEST_CASE("kl generator") {
  const auto kl = generator_kl();
  CHECK(kl.eval(1.0) == 0.0);
  CHECK(kl.deriv2(1.0) == doctest::Approx(1.0));
  CHECK(kl.eval(std::exp(1.0)) == doctest::Approx(-1.0));
  CHECK_FALSE(kl.defined_at_0);
  CHECK(std::isfinite(kl.eval(1e-12)));
  CHECK(std::isfinite(kl.eval(1e12)));
}

TEST_CASE("tv generator has a guarded kink") {
  const auto tv = generator_tv();
  CHECK_FALSE(tv.smooth_at_1);
  CHECK(tv.eval(1.0) == 0.0);
  CHECK(tv.eval(3.0) == doctest::Approx(1.0));
  CHECK(tv.eval(0.5) == doctest::Approx(0.25));
  CHECK_THROWS_AS(tv.deriv1(1.0), NotDifferentiableError);
  CHECK_THROWS_AS(tv.deriv2(1.0), NotDifferentiableError);
  CHECK(tv.deriv1(1.5) == 0.5);
  CHECK(tv.deriv1(0.5) == -0.5);
}

TEST_CASE("smooth generators match second differences at 1") {
  for (const char* id : {"js", "kl"}) {
    const auto g = generator_by_id(id);
    const double fd = second_difference(g, 1.0, 1e-4);
    CHECK(std::abs(g.deriv2(1.0) - fd) < 1e-5 * std::abs(fd));
  }
}

TEST_CASE("registration rejects broken generators") {
  Generator bad;
  bad.name = "bad-at-one";
  bad.eval = [](double u) { return u; };  // f(1) = 1 != 0
  bad.deriv1 = [](double) { return 1.0; };
  bad.deriv2 = [](double) { return 0.0; };
  CHECK_THROWS_AS(make_generator(bad), std::invalid_argument);

  Generator wrong_deriv;
  wrong_deriv.name = "bad-deriv";
  wrong_deriv.eval = [](double u) { return (u - 1.0) * (u - 1.0); };
  wrong_deriv.deriv1 = [](double u) { return u; };  // should be 2(u-1)
  wrong_deriv.deriv2 = [](double) { return 2.0; };
  CHECK_THROWS_AS(make_generator(wrong_deriv), std::invalid_argument);
}

TEST_CASE("non-convex generators register with a warning flag") {
  Generator wavy;
  wavy.name = "concave";
  wavy.eval = [](double u) { return -(u - 1.0) * (u - 1.0); };
  wavy.deriv1 = [](double u) { return -2.0 * (u - 1.0); };
  wavy.deriv2 = [](double) { return -2.0; };
  const auto g = make_generator(wavy);
  CHECK_FALSE(g.convexity_ok);
}

TEST_CASE("unknown generator id throws") {
  CHECK_THROWS_AS(generator_by_id("hellinger"), std::invalid_argument);
}
