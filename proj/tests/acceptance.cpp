// Acceptance suite: one PASS/FAIL line per criterion, runtime included in
// the verdict. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "weylkit/core.hpp"
#include "weylkit/dynamics.hpp"
#include "weylkit/inverse.hpp"
#include "weylkit/series.hpp"
#include "weylkit/spectral.hpp"

using namespace weylkit;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Outcome at_most(double value, double limit, const std::string& what) {
  return {value <= limit, what + " " + sci(value) + " <= " + sci(limit)};
}

// Random family shared by every criterion: a in [0.5, 1.5], |b| <= 1.5.
class Family {
 public:
  explicit Family(std::uint64_t seed) : rng_(seed) {}

  JacobiCoefficients matrix(int N) {
    std::uniform_real_distribution<double> ua(0.5, 1.5), ub(-1.5, 1.5);
    std::vector<double> a(static_cast<std::size_t>(N - 1)), b(static_cast<std::size_t>(N));
    for (auto& x : a) x = ua(rng_);
    for (auto& x : b) x = ub(rng_);
    return {a, b, 1.0, 0.0, N};
  }

  int size(int max_N) { return std::uniform_int_distribution<int>(1, max_N)(rng_); }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // λ with Im λ > 0 and R|z| = ratio, z drawn uniformly on the lower half circle
  Complex lambda_at_ratio(const RegionSpec& region, double ratio) {
    const double phi = uniform(-std::numbers::pi, 0.0);
    return z_to_lambda(std::polar(ratio / region.R, phi));
  }

 private:
  std::mt19937_64 rng_;
};

double max_abs_diff(const ResponseVector& x, const ResponseVector& y, std::size_t count) {
  double worst = 0.0;
  for (std::size_t t = 0; t < count; ++t) worst = std::max(worst, std::abs(x[t] - y[t]));
  return worst;
}

Outcome free_case() {
  const ResponseVector r = response_vector(JacobiCoefficients::free(), 50);
  bool exact = r.size() == 50 && r[0] == 1.0;
  for (std::size_t t = 1; t < r.size(); ++t) exact = exact && r[t] == 0.0;
  const Complex lambda(0.0, 5.0);
  const SeriesEvaluation s = weyl_semi_infinite(JacobiCoefficients::free(), lambda, 1e-10);
  const double err = std::abs(s.value + lambda_to_z(lambda).z);
  return {exact && err <= 1e-10,
          std::string(exact ? "r exact" : "r NOT exact") + ", |m + z| " + sci(err) + " <= 1.000e-10"};
}

Outcome n1_closed_form() {
  bool exact = true;
  double excess = -1.0, worst = 0.0;
  for (double b1 : {-0.9, 0.3, 1.0}) {
    const JacobiCoefficients c({}, {b1}, 1.0, 0.0, 1);
    const ResponseVector r = response_vector_finite(c, 1, 120);
    // hand recursion r_{t+1} = b1 r_t - r_{t-1}, r_{-1} = 0
    double prev = 0.0, cur = 1.0;
    for (std::size_t t = 0; t < 120; ++t) {
      exact = exact && r[t] == cur;
      const double next = b1 * cur - prev;
      prev = cur;
      cur = next;
    }
    const RegionSpec region = entry_bound(c);
    for (double phi : region_boundary_angles(12)) {
      const SpectralPoint p = lambda_to_z(z_to_lambda(std::polar(0.15, phi)));
      const SeriesEvaluation s = weyl_series(r, p, region);
      const double diff = std::abs(s.value - 1.0 / (b1 - p.lambda));
      worst = std::max(worst, diff);
      excess = std::max(excess, diff - (s.tail_bound + 1e-12));
    }
  }
  return {exact && excess <= 0.0, std::string(exact ? "recursion exact" : "recursion MISMATCH") +
                                      ", max |series - 1/(b1-λ)| " + sci(worst) +
                                      ", max(diff - tail - 1e-12) " + sci(excess)};
}

Outcome identity_suite() {
  Family family(101);
  double excess = -1.0, worst_R = 0.0, worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int N = family.size(15);
    const JacobiCoefficients c = family.matrix(N);
    const RegionSpec region = entry_bound(c);
    worst_R = std::max(worst_R, region.R);
    const ResponseVector r = response_vector_finite(c, N, 120);
    for (int k = 0; k < 10; ++k) {
      const Complex lambda = family.lambda_at_ratio(region, family.uniform(0.01, 0.3));
      const SeriesEvaluation s = weyl_series(r, lambda_to_z(lambda), region);
      const Complex exact = weyl_finite_resolvent(c, N, lambda).value;
      worst = std::max(worst, std::abs(s.value - exact));
      excess = std::max(excess, std::abs(s.value - exact) - (s.tail_bound + 1e-10));
    }
  }
  return {excess <= 0.0 && worst_R <= 5.5,
          "500 samples, max R " + sci(worst_R) + ", max |series - resolvent| " + sci(worst) +
              ", max(diff - tail - 1e-10) " + sci(excess)};
}

Outcome cross_method() {
  Family family(202);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int N = family.size(30);
    const JacobiCoefficients c = family.matrix(N);
    const Complex lambda(family.uniform(-4.0, 4.0), family.uniform(1.0, 5.0));
    const Complex m[] = {weyl_finite_poly(c, N, lambda).value,
                         weyl_finite_resolvent(c, N, lambda).value,
                         weyl_finite_backward(c, N, lambda).value};
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        worst = std::max(worst, std::abs(m[i] - m[j]) / std::max(std::abs(m[i]), std::abs(m[j])));
      }
    }
  }
  return at_most(worst, 1e-9, "max pairwise relative difference");
}

Outcome propagation_speed() {
  Family family(303);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int N = family.size(20);
    const JacobiCoefficients c = family.matrix(N);
    const ResponseVector semi = response_vector(c, 2 * N);
    const ResponseVector fin = response_vector_finite(c, N, 2 * N);
    worst = std::max(worst, max_abs_diff(semi, fin, static_cast<std::size_t>(2 * N)));
  }
  return at_most(worst, 1e-13, "max |r_t - r^N_t| over t <= 2N-1");
}

Outcome goursat() {
  Family family(404);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const JacobiCoefficients c = family.matrix(40);
    const auto u = simulate_semi_infinite<Quad>(c, ControlSequence::delta(), 40);
    worst = std::max(worst, to_double(verify_goursat(goursat_kernel(u), c)));
  }
  return at_most(worst, 1e-12, "max Goursat residual");
}

Outcome growth_bound() {
  Family family(505);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const JacobiCoefficients c = family.matrix(101);
    const WaveField u = simulate_semi_infinite(c, ControlSequence::delta(), 101);
    worst = std::max(worst, amplitude_bound_report(u, entry_bound(c)));
  }
  return at_most(worst, 1.0, "max M_t / (3B+1)^t");
}

Outcome inverse_roundtrip() {
  Family family(606);
  double err = 0.0, k_change = 0.0, rho_change = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const JacobiCoefficients c = family.matrix(10);
    const WeylOracle oracle = resolvent_oracle(c, 10);
    const double rho = 1.0 / (2.0 * oracle.region.R);
    const ResponseVector r = response_from_weyl(oracle, 20, rho, 1024).r;
    err = std::max(err, max_abs_diff(r, response_vector_finite(c, 10, 20), 20));
    k_change = std::max(k_change, max_abs_diff(r, response_from_weyl(oracle, 20, rho, 512).r, 20));
    const double rho3 = 1.0 / (3.0 * oracle.region.R);
    rho_change = std::max(rho_change, max_abs_diff(r, response_from_weyl(oracle, 20, rho3, 1024).r, 20));
  }
  return {err <= 1e-8 && k_change <= 1e-9 && rho_change <= 1e-9,
          "max error " + sci(err) + " <= 1.000e-08, K 512/1024 " + sci(k_change) +
              ", rho 1/2R vs 1/3R " + sci(rho_change) + " <= 1.000e-09"};
}

Outcome herglotz() {
  Family family(707);
  double asym = 0.0;
  double min_im = 1.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int N = family.size(15);
    const JacobiCoefficients c = family.matrix(N);
    const Complex lambda(family.uniform(-6.0, 6.0), family.uniform(1e-3, 6.0));
    const Complex m = weyl_finite_resolvent(c, N, lambda).value;
    const Complex mc = weyl_finite_resolvent(c, N, std::conj(lambda)).value;
    min_im = std::min(min_im, m.imag());
    asym = std::max(asym, std::abs(mc - std::conj(m)));
  }
  return {min_im > 0.0 && asym <= 1e-12,
          "min Im m " + sci(min_im) + " > 0, max |m(conj λ) - conj m(λ)| " + sci(asym) +
              " <= 1.000e-12"};
}

Outcome hat_equations() {
  Family family(808);
  double excess = -1.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int N = family.size(15);
    const JacobiCoefficients c = family.matrix(N);
    const RegionSpec region = entry_bound(c);
    for (int k = 0; k < 3; ++k) {
      // below R|z| ~ 0.2 the bound sinks under float128 round-off
      const double ratio = k == 0 ? 0.5 : family.uniform(0.25, 0.5);
      const SpectralPoint p = lambda_to_z(family.lambda_at_ratio(region, ratio));
      const double bound = hat_residual_bound(region.R * std::abs(p.z), 80);
      excess = std::max(excess, verify_hat_equation(c, p, 80) - bound);
      excess = std::max(excess, verify_hat_equation(c, p, 80, N) - bound);
    }
  }
  return {excess <= 0.0, "both kinds, R|z| in [0.25, 0.5], max(residual - bound) " + sci(excess)};
}

Outcome convention_guard() {
  const ResponseVector r = response_vector(JacobiCoefficients::free(), 60);
  const RegionSpec region = RegionSpec::from_bound(1.0);
  double shifted_err = 0.0, literal_factor_err = 0.0, literal_gap = 1e300;
  for (const Complex lambda : {Complex(0.0, 5.0), Complex(1.5, 6.0), Complex(-3.0, 7.0)}) {
    const SpectralPoint p = lambda_to_z(lambda);
    const Complex oracle = weyl_finite_resolvent(JacobiCoefficients::free(), 200, lambda).value;
    const Complex shifted = weyl_series(r, p, region, SeriesConvention::shifted).value;
    const Complex literal = weyl_series(r, p, region, SeriesConvention::literal).value;
    shifted_err = std::max(shifted_err, std::abs(shifted - oracle));
    literal_factor_err = std::max(literal_factor_err, std::abs(literal * p.z - oracle));
    literal_gap = std::min(literal_gap, std::abs(literal - oracle));
  }
  return {shifted_err <= 1e-12 && literal_factor_err <= 1e-12 && literal_gap > 0.1,
          "shifted vs resolvent " + sci(shifted_err) + ", literal*z vs resolvent " +
              sci(literal_factor_err) + ", literal vs resolvent >= " + sci(literal_gap)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "free-case exactness", 1.0, free_case},
      {2, "N = 1 closed form", 1.0, n1_closed_form},
      {3, "series identity suite", 10.0, identity_suite},
      {4, "cross-method Weyl agreement", 5.0, cross_method},
      {5, "propagation-speed identity", 2.0, propagation_speed},
      {6, "Goursat verification", 2.0, goursat},
      {7, "growth bound", 2.0, growth_bound},
      {8, "inverse round trip", 5.0, inverse_roundtrip},
      {9, "Herglotz and symmetry", 2.0, herglotz},
      {10, "hat-transform equations", 2.0, hat_equations},
      {11, "convention guard", 1.0, convention_guard},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool passed = outcome.passed && in_time;
    if (!passed) ++failed;
    std::printf("%s [%d] %s: %s; %.3fs (< %.0fs%s)\n", passed ? "PASS" : "FAIL", c.id, c.title,
                outcome.detail.c_str(), seconds, c.budget_seconds, in_time ? "" : " EXCEEDED");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
