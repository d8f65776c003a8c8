#include <cmath>
#include <random>

#include <doctest.h>

#include "weylkit/series.hpp"
#include "weylkit/spectral.hpp"

using namespace weylkit;

namespace {

bool close(Complex x, Complex y, double tol) { return std::abs(x - y) <= tol; }

const JacobiCoefficients random10(
    {1.125095, 1.397214, 1.275686, 0.725207, 0.800166, 1.373553, 0.505265, 1.321228, 1.297069},
    {-0.096195, -0.590903, -0.664723, -0.735391, -0.164771, 0.013645, 0.160492, 1.486501,
     0.877986, 0.366538});

}  // namespace

TEST_CASE("free series is -z") {
  const ResponseVector r = response_vector(JacobiCoefficients::free(), 40);
  const SpectralPoint p = lambda_to_z({0.0, 5.0});
  const SeriesEvaluation s = weyl_series(r, p, RegionSpec::from_bound(1.0));
  CHECK(close(s.value, -p.z, 1e-16));

  const SeriesEvaluation semi = weyl_semi_infinite(JacobiCoefficients::free(), {0.0, 5.0}, 1e-10);
  CHECK(close(semi.value, {0.0, 0.19258240356725201}, 1e-10));
  CHECK(semi.tail_bound <= 1e-10);
}

TEST_CASE("N = 1 series matches the 1x1 resolvent") {
  const JacobiCoefficients c({}, {0.5});
  const RegionSpec region = entry_bound(c);
  const ResponseVector r = response_vector_finite(c, 1, 120);
  const SpectralPoint p = lambda_to_z({0.0, 5.0});
  const SeriesEvaluation s = weyl_series(r, p, region);
  CHECK(std::abs(s.value - 1.0 / (0.5 - p.lambda)) <= s.tail_bound + 1e-12);
}

TEST_CASE("convention guard") {
  // the unshifted sum is off by exactly one factor of z
  const ResponseVector r = response_vector(JacobiCoefficients::free(), 30);
  const SpectralPoint p = lambda_to_z({0.3, 6.0});
  const RegionSpec region = RegionSpec::from_bound(1.0);
  const Complex shifted = weyl_series(r, p, region, SeriesConvention::shifted).value;
  const Complex literal = weyl_series(r, p, region, SeriesConvention::literal).value;
  CHECK(close(shifted, -p.z, 1e-16));
  CHECK(close(literal, -1.0, 1e-16));
  CHECK(close(literal * p.z, shifted, 1e-16));
  CHECK(std::abs(literal - shifted) > 0.5);
}

TEST_CASE("series outside the region is refused") {
  const ResponseVector r = response_vector(JacobiCoefficients::free(), 30);
  CHECK_THROWS_AS(weyl_series(r, lambda_to_z({0.0, 3.0}), RegionSpec::from_bound(1.0)),
                  DomainError);
  CHECK_THROWS_AS(weyl_semi_infinite(JacobiCoefficients::free(), {0.0, 3.0}, 1e-8), DomainError);
}

TEST_CASE("term budget") {
  CHECK_THROWS_AS(terms_for_tolerance(0.5, 0.0), BudgetError);
  CHECK_THROWS_AS(weyl_semi_infinite(JacobiCoefficients::free(), {0.0, 5.0}, 0.0), BudgetError);
  CHECK_THROWS_AS(terms_for_tolerance(0.999999, 1e-300), BudgetError);
  const int T = terms_for_tolerance(0.5, 1e-6);
  CHECK(series_tail_bound(0.5, T) <= 1e-6);
  CHECK(series_tail_bound(0.5, T - 1) > 1e-6);
}

TEST_CASE("series agrees with the resolvent on a finite matrix") {
  const RegionSpec region = entry_bound(random10);
  const ResponseVector r = response_vector_finite(random10, 10, 120);
  for (double phi : region_boundary_angles(9)) {
    const Complex lambda = z_to_lambda(std::polar(0.3 / region.R, phi));
    const SeriesEvaluation s = weyl_series(r, lambda_to_z(lambda), region);
    CHECK(std::abs(s.value - weyl_finite_resolvent(random10, 10, lambda).value) <=
          s.tail_bound + 1e-10);
    const SeriesEvaluation auto_t = weyl_finite_series(random10, 10, lambda, 1e-12);
    CHECK(std::abs(auto_t.value - s.value) <= 1e-12 + s.tail_bound);
  }
}

TEST_CASE("semi-infinite and finite response agree for t < 2N") {
  const JacobiCoefficients c({0.7, 1.3, 1.1, 0.6}, {0.2, -1.0, 0.4, 0.9, -0.3});
  const int N = 6;
  const ResponseVector semi = response_vector(c, 2 * N);
  const ResponseVector fin = response_vector_finite(c, N, 2 * N + 1);
  for (std::size_t t = 0; t < static_cast<std::size_t>(2 * N); ++t) CHECK(semi[t] == fin[t]);
  CHECK(semi.size() == static_cast<std::size_t>(2 * N));
  CHECK(std::abs(response_vector(c, 2 * N + 1)[2 * N] - fin[2 * N]) > 1e-6);
}

TEST_CASE("tail bound is honest") {
  const RegionSpec region = entry_bound(random10);
  const SpectralPoint p = lambda_to_z(z_to_lambda(std::polar(0.6 / region.R, -1.2)));
  const ResponseVector shorter = response_vector_finite(random10, 10, 40);
  const ResponseVector longer = response_vector_finite(random10, 10, 80);
  const SeriesEvaluation a = weyl_series(shorter, p, region);
  const SeriesEvaluation b = weyl_series(longer, p, region);
  CHECK(std::abs(a.value - b.value) < a.tail_bound);
}

TEST_CASE("hat transform") {
  const WaveField u = simulate_semi_infinite(JacobiCoefficients::free(), ControlSequence::delta(), 60);
  const SpectralPoint p = lambda_to_z({0.0, 8.0});
  CHECK(close(hat_transform(u, 0, p, 60), -1.0, 0.0));
  CHECK(close(hat_transform(u, 1, p, 60), -p.z, 1e-17));

  const WaveField v = simulate_finite(random10, 10, ControlSequence::delta(), 60);
  CHECK(close(hat_transform(v, 11, p, 60), 0.0, 0.0));

  // û₁ is the Weyl function
  const RegionSpec region = entry_bound(random10);
  const SpectralPoint q = lambda_to_z(z_to_lambda(std::polar(0.3 / region.R, -2.0)));
  const WaveField w = simulate_finite(random10, 10, ControlSequence::delta(), 121);
  const SeriesEvaluation s = weyl_series(response_vector_finite(random10, 10, 120), q, region);
  CHECK(std::abs(hat_transform(w, 1, q, 121) - s.value) <= 2.0 * s.tail_bound + 1e-12);
}

TEST_CASE("hat equations") {
  const SpectralPoint free_p = lambda_to_z({0.0, 8.0});
  CHECK(verify_hat_equation(JacobiCoefficients::free(), free_p, 80) <= 1e-10);

  const RegionSpec region = entry_bound(random10);
  for (double phi : {-0.4, -1.5, -2.7}) {
    const SpectralPoint p = lambda_to_z(z_to_lambda(std::polar(0.5 / region.R, phi)));
    const double bound = hat_residual_bound(0.5, 80);
    CHECK(verify_hat_equation(random10, p, 80) <= bound);
    CHECK(verify_hat_equation(random10, p, 80, 10) <= bound);
    CHECK(verify_hat_equation(random10, p, 80, 5) <= bound);
  }
  CHECK_THROWS_AS(verify_hat_equation(random10, lambda_to_z({0.0, 5.0}), 80), DomainError);
}

TEST_CASE("convergence table") {
  const Complex lambda(0.0, 10.0);
  const auto free_rows = convergence_table(JacobiCoefficients::free(), lambda, {1, 2, 4, 8});
  for (const auto& row : free_rows) CHECK(row.deviation <= row.bound + 1e-16);

  const JacobiCoefficients c({0.8, 1.2, 0.9, 1.4, 0.6}, {0.3, -0.4, 1.1, -0.2}, 1.0, 0.0);
  const auto rows = convergence_table(c, {0.0, 30.0}, {1, 2, 3});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].deviation > rows[1].deviation);
  CHECK(rows[1].deviation > rows[2].deviation);
  for (const auto& row : rows) CHECK(row.deviation <= row.bound);

  // semi-infinite extension of random10 (tails a = 1, b = 0)
  const JacobiCoefficients semi(random10.a_table(), random10.b_table());
  const auto deep = convergence_table(semi, lambda, {5, 10, 20});
  CHECK(deep[0].deviation > deep[1].deviation);
  CHECK(deep[1].deviation > deep[2].deviation);
  for (const auto& row : deep) CHECK(row.deviation <= row.bound);
}
