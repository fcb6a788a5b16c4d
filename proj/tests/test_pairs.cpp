#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "singiter/pairs.hpp"

using namespace singiter;

namespace {
const double kThird = 1.0 / 3.0;
const double kTwoThirds = 2.0 / 3.0;
}  // namespace

TEST_CASE("affine family endpoints and slope bound", "[pairs]") {
  const auto cantor = make_affine_pair(kThird, kTwoThirds);
  CHECK(std::abs(cantor.f0(kThird) - 1.0) <= 1e-15);
  CHECK(std::abs(cantor.f1(kTwoThirds)) <= 1e-15);
  CHECK(cantor.slope_bound() == 3.0);
  CHECK(cantor.symmetric());

  const auto lebesgue = make_affine_pair(0.5, 0.5);
  CHECK(lebesgue.f0(0.3) == 0.6);
  CHECK(std::abs(lebesgue.f1(0.3) - (-0.4)) <= 1e-15);
  CHECK(lebesgue.slope_bound() == 2.0);

  const auto skew = make_affine_pair(0.4, 0.8);
  CHECK(std::abs(skew.f1(1.0) - 1.0) <= 1e-15);
  CHECK(std::abs(skew.slope_bound() - 2.5) <= 1e-15);
  CHECK_FALSE(skew.symmetric());
}

TEST_CASE("affine family rejects bad parameters", "[pairs]") {
  CHECK_THROWS_AS(make_affine_pair(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(make_affine_pair(0.7, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(make_affine_pair(0.3, 1.0), std::invalid_argument);
}

TEST_CASE("minkowski pair", "[pairs]") {
  const auto mk = make_minkowski_pair();
  CHECK(mk.f0(0.5) == 1.0);  // both branch formulas agree at the breakpoint
  CHECK(mk.f1(0.5) == 0.0);
  CHECK(mk.f1(1.0) == 1.0);
  CHECK(mk.a() == 0.5);
  CHECK(mk.slope_bound() == 2.0);
  CHECK(mk.symmetric());
  CHECK(std::abs(mk.apply_inverse(0, 0.5) - 1.0 / 3.0) <= 1e-15);
  CHECK(mk.apply_inverse(1, 0.0) == 0.5);
}

TEST_CASE("apply selects the branch", "[pairs]") {
  const auto cantor = make_affine_pair(kThird, kTwoThirds);
  CHECK(std::abs(cantor.apply(0, 0.25) - 0.75) <= 1e-12);
  CHECK(std::abs(cantor.apply(1, 0.0) - (-2.0)) <= 1e-12);
  CHECK(cantor.apply(0, 0.0) == 0.0);
}

TEST_CASE("apply_inverse hits the endpoint values and guards its domain", "[pairs]") {
  const auto cantor = make_affine_pair(kThird, kTwoThirds);
  CHECK(cantor.apply_inverse(0, 1.0) == cantor.a());
  CHECK(cantor.apply_inverse(1, 0.0) == cantor.b());
  CHECK_THROWS_AS(cantor.apply_inverse(0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(cantor.apply_inverse(1, 1.5), std::invalid_argument);
}

TEST_CASE("inverse round-trip on the unit interval", "[pairs]") {
  const FunctionPair pairs[] = {make_affine_pair(kThird, kTwoThirds), make_affine_pair(0.4, 0.8),
                                make_affine_pair(0.5, 0.5), make_minkowski_pair()};
  for (const auto& pair : pairs) {
    for (int i = 0; i <= 1000; ++i) {
      const double y = static_cast<double>(i) / 1000.0;
      REQUIRE(std::abs(pair.apply(0, pair.apply_inverse(0, y)) - y) <= 1e-12);
      REQUIRE(std::abs(pair.apply(1, pair.apply_inverse(1, y)) - y) <= 1e-12);
    }
  }
}

TEST_CASE("symmetric pairs satisfy the reflection identity", "[pairs]") {
  const FunctionPair pairs[] = {make_affine_pair(kThird, kTwoThirds), make_affine_pair(0.5, 0.5),
                                make_minkowski_pair()};
  for (const auto& pair : pairs) {
    REQUIRE(pair.symmetric());
    REQUIRE(std::abs(pair.a() - (1.0 - pair.b())) <= 1e-12);
    for (int i = 0; i <= 1000; ++i) {
      const double x = -2.0 + 5.0 * i / 1000.0;
      REQUIRE(std::abs(pair.f0(1.0 - x) + pair.f1(x) - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("validation passes for the built-in families", "[pairs]") {
  CHECK(validate_assumptions(make_affine_pair(kThird, kTwoThirds), 1001).passed);
  CHECK(validate_assumptions(make_affine_pair(0.4, 0.8), 1001).passed);
  CHECK(validate_assumptions(make_affine_pair(0.5, 0.5), 1001).passed);
  CHECK(validate_assumptions(make_minkowski_pair(), 1001).passed);
}

TEST_CASE("validation flags a planted endpoint defect", "[pairs]") {
  // f0 rescaled so that f0(a) = 0.9: an (A2) violation
  const double a = kThird, b = kTwoThirds;
  FunctionPair broken(
      "broken", [a](double x) { return 0.9 * x / a; },
      [b](double x) { return (x - b) / (1.0 - b); }, [a](double y) { return a * y / 0.9; },
      [b](double y) { return (1.0 - b) * y + b; }, a, b, 2.5, false);
  const auto report = validate_assumptions(broken, 201);
  REQUIRE_FALSE(report.passed);
  bool found_a2 = false;
  for (const auto& v : report.violations) found_a2 = found_a2 || v.assumption == "A2";
  CHECK(found_a2);
}

TEST_CASE("piecewise-linear pair reproduces the affine family", "[pairs]") {
  const auto pw = make_piecewise_pair(
      {{{-2.0, -6.0}, {0.0, 0.0}, {kThird, 1.0}, {3.0, 9.0}}},
      {{{-2.0, -8.0}, {kTwoThirds, 0.0}, {1.0, 1.0}, {3.0, 7.0}}});
  const auto affine = make_affine_pair(kThird, kTwoThirds);
  CHECK(validate_assumptions(pw, 1001).passed);
  CHECK(std::abs(pw.a() - affine.a()) <= 1e-12);
  CHECK(std::abs(pw.b() - affine.b()) <= 1e-12);
  for (int i = 0; i <= 100; ++i) {
    const double x = -1.0 + 3.0 * i / 100.0;
    REQUIRE(std::abs(pw.f0(x) - affine.f0(x)) <= 1e-12);
    REQUIRE(std::abs(pw.f1(x) - affine.f1(x)) <= 1e-12);
  }
  for (int i = 0; i <= 100; ++i) {
    const double y = static_cast<double>(i) / 100.0;
    REQUIRE(std::abs(pw.apply(0, pw.apply_inverse(0, y)) - y) <= 1e-12);
    REQUIRE(std::abs(pw.apply(1, pw.apply_inverse(1, y)) - y) <= 1e-12);
  }
}

TEST_CASE("piecewise-linear pair rejects malformed breakpoints", "[pairs]") {
  CHECK_THROWS_AS(make_piecewise_pair({{{0.0, 0.0}}}, {{{0.0, -2.0}, {1.0, 1.0}}}),
                  std::invalid_argument);
  // not strictly increasing
  CHECK_THROWS_AS(make_piecewise_pair({{{0.0, 0.0}, {0.5, 0.4}, {0.4, 1.0}}},
                                      {{{0.5, 0.0}, {1.0, 1.0}}}),
                  std::invalid_argument);
  // f0(0) != 0
  CHECK_THROWS_AS(make_piecewise_pair({{{0.0, 0.1}, {0.5, 1.0}}}, {{{0.5, 0.0}, {1.0, 1.0}}}),
                  std::invalid_argument);
}
