#include <cmath>
#include <numbers>

#include <doctest.h>

#include "weylkit/core.hpp"

using namespace weylkit;

namespace {
bool close(Complex x, Complex y, double tol) { return std::abs(x - y) <= tol; }
}  // namespace

TEST_CASE("lambda_to_z picks the root inside the disk") {
  CHECK(close(lambda_to_z({2.5, 0.0}).z, {0.5, 0.0}, 1e-15));
  CHECK(close(lambda_to_z({0.0, 2.0}).z, {0.0, 1.0 - std::sqrt(2.0)}, 1e-15));
  CHECK(close(lambda_to_z({0.0, 5.0}).z, {0.0, (5.0 - std::sqrt(29.0)) / 2.0}, 1e-15));
  CHECK(lambda_to_z({0.0, 5.0}).z.imag() == doctest::Approx(-0.192582403567252).epsilon(1e-13));
}

TEST_CASE("lambda_to_z is accurate for large lambda") {
  // naive (λ - √(λ²-4))/2 loses every digit here
  const Complex z = lambda_to_z({0.0, 1e9}).z;
  CHECK(z.imag() == doctest::Approx(-1e-9).epsilon(1e-14));
}

TEST_CASE("lambda_to_z on the cut") {
  CHECK_THROWS_AS(lambda_to_z({1.0, 0.0}), DomainError);
  const SpectralPoint p = lambda_to_z({1.0, 0.0}, BranchMode::relaxed);
  CHECK(p.on_cut);
  CHECK(std::abs(p.z) == doctest::Approx(1.0));
  CHECK(p.z.imag() <= 0.0);
}

TEST_CASE("z_to_lambda") {
  CHECK(close(z_to_lambda({0.5, 0.0}), {2.5, 0.0}, 1e-15));
  CHECK(close(z_to_lambda({0.0, -1.0}), {0.0, 0.0}, 1e-15));
  CHECK(close(z_to_lambda({0.0, 1.0 - std::sqrt(2.0)}), {0.0, 2.0}, 1e-14));
  CHECK_THROWS_AS(z_to_lambda({0.0, 0.0}), DomainError);
}

TEST_CASE("entry_bound") {
  CHECK(entry_bound(JacobiCoefficients::free()).B == 1.0);
  CHECK(entry_bound(JacobiCoefficients::free()).R == 4.0);
  const RegionSpec small = entry_bound(JacobiCoefficients({0.5, 1.5}, {-1.5}));
  CHECK(small.B == 1.5);
  CHECK(small.R == 5.5);
  CHECK(entry_bound(JacobiCoefficients({1.0}, {2.0})).R == 7.0);
  // tails count towards B
  CHECK(entry_bound(JacobiCoefficients({}, {}, 1.0, -3.0)).B == 3.0);
}

TEST_CASE("in_convergence_region") {
  const RegionSpec free = RegionSpec::from_bound(1.0);
  CHECK(in_convergence_region({0.0, 5.0}, free));
  CHECK_FALSE(in_convergence_region({0.0, 3.0}, free));
  CHECK_FALSE(in_convergence_region({2.5, 0.0}, free));
  CHECK_FALSE(in_convergence_region({0.0, -5.0}, free));
}

TEST_CASE("region_boundary_curve") {
  const RegionSpec free = RegionSpec::from_bound(1.0);
  // odd sample count puts the middle node at φ = 3π/2
  const auto phis = region_boundary_angles(3);
  REQUIRE(phis.size() == 3);
  CHECK(phis[1] == doctest::Approx(1.5 * std::numbers::pi));
  const auto curve = region_boundary_curve(free, 3);
  CHECK(close(curve[1], {0.0, 3.75}, 1e-14));
  // approaches -4.25 as φ → π⁺
  const auto dense = region_boundary_curve(free, 20001);
  CHECK(close(dense.front(), {-4.25, 0.0}, 1e-3));
  for (const Complex lambda : curve) {
    CHECK(std::abs(lambda_to_z(lambda).z) == doctest::Approx(0.25));
  }
}

TEST_CASE("JacobiCoefficients validation and tails") {
  CHECK_THROWS_AS(JacobiCoefficients({0.0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(JacobiCoefficients({-1.0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(JacobiCoefficients({}, {}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(JacobiCoefficients({}, {std::nan("")}), std::invalid_argument);
  const JacobiCoefficients c({0.5, 1.5}, {-1.5}, 2.0, 0.25);
  CHECK(c.a(0) == 1.0);
  CHECK(c.a(2) == 1.5);
  CHECK(c.a(3) == 2.0);
  CHECK(c.b(1) == -1.5);
  CHECK(c.b(2) == 0.25);
}
