#include "weylkit/self_check.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "weylkit/dynamics.hpp"
#include "weylkit/inverse.hpp"
#include "weylkit/series.hpp"
#include "weylkit/spectral.hpp"

namespace weylkit {

namespace {

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

CheckResult bound_check(std::string name, double value, double limit) {
  return {std::move(name), value <= limit, "value " + sci(value) + " <= " + sci(limit)};
}

// λ = z + 1/z for z on the circle |z| = radius at angle φ in (π, 2π).
Complex lambda_at_z(double radius, double phi) { return z_to_lambda(std::polar(radius, phi)); }

void generic_checks(std::vector<CheckResult>& out, std::mt19937_64& rng) {
  {
    std::uniform_real_distribution<double> coord(-100.0, 100.0);
    double worst = 0.0;
    bool branch_ok = true;
    int accepted = 0;
    while (accepted < 10000) {
      const Complex lambda(coord(rng), coord(rng));
      if (std::abs(lambda) > 100.0) continue;
      const double dx = std::max(0.0, std::abs(lambda.real()) - 2.0);
      if (std::hypot(dx, lambda.imag()) < 0.1) continue;
      ++accepted;
      const SpectralPoint p = lambda_to_z(lambda);
      worst = std::max(worst, std::abs(z_to_lambda(p.z) - lambda) / std::abs(lambda));
      if (lambda.imag() > 0.0 && !(std::abs(p.z) < 1.0 && p.z.imag() < 0.0)) branch_ok = false;
    }
    out.push_back({"core.lambda_z_roundtrip", worst <= 1e-13 && branch_ok,
                   "max rel error " + sci(worst) + (branch_ok ? "" : ", branch violated")});
  }
  {
    const ResponseVector r = response_vector(JacobiCoefficients::free(), 50);
    bool exact = r[0] == 1.0;
    for (std::size_t t = 1; t < r.size(); ++t) exact = exact && r[t] == 0.0;
    out.push_back({"dynamics.free_response_exact", exact, "r = (1, 0, ..., 0), T = 50"});
  }
  {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      Complex x(unit(rng), unit(rng));
      if (std::abs(x) > 1.0) x /= std::abs(x);
      for (int n = 0; n <= 30; ++n) {
        const Complex rec = chebyshev_U(n, x);
        const Complex closed = chebyshev_U_binomial(n, x);
        worst = std::max(worst, std::abs(rec - closed) / std::max(1.0, std::abs(closed)));
      }
    }
    out.push_back(bound_check("spectral.chebyshev_closed_form", worst, 1e-10));
  }
  {
    // λ = 2cos θ turns the density integral into a periodic one.
    const int nodes = 64;
    double mass = 0.0;
    for (int k = 0; k < nodes; ++k) {
      const double theta = std::numbers::pi * (k + 0.5) / nodes;
      mass += free_spectral_density(2.0 * std::cos(theta)) * 2.0 * std::sin(theta);
    }
    mass *= std::numbers::pi / nodes;
    out.push_back(bound_check("spectral.free_density_mass", std::abs(mass - 1.0), 1e-10));
  }
  {
    const Complex lambda(0.0, 5.0);
    const Complex z = lambda_to_z(lambda).z;
    const double err = std::abs(free_weyl_finite(40, lambda) + z);
    out.push_back(bound_check("spectral.free_limit_minus_z", err, 1e-10));
  }
  {
    const FreePolynomials fp = free_polynomials(31, Complex(0.7, 0.4));
    bool shift = true;
    double cheb = 0.0;
    for (int n = 0; n + 1 <= 31; ++n) {
      shift = shift && fp.Q[static_cast<std::size_t>(n) + 1] == fp.P[static_cast<std::size_t>(n)];
      const Complex u = chebyshev_U(n, Complex(0.35, 0.2));
      cheb = std::max(cheb, std::abs(fp.P[static_cast<std::size_t>(n) + 1] - u) /
                                std::max(1.0, std::abs(u)));
    }
    out.push_back({"spectral.free_polynomials", shift && cheb <= 1e-12,
                   std::string(shift ? "Q_{n+1} == P_n" : "shift identity broken") +
                       ", |P_{n+1}(2x) - U_n(x)| " + sci(cheb)});
  }
  {
    const SpectralPoint p = lambda_to_z(Complex(0.0, 4.0));
    double worst = 0.0;
    for (int t = 1; t <= 20; ++t) {
      const Complex lhs = s_kernel(t - 1, p) + s_kernel(t + 1, p);
      const Complex rhs = p.lambda * s_kernel(t, p);
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    out.push_back(bound_check("spectral.s_kernel_recurrence", worst, 1e-13));
  }

  std::uniform_real_distribution<double> a_dist(0.5, 1.5), b_dist(-1.5, 1.5), f_dist(-1.0, 1.0);
  std::vector<double> a(8), b(8);
  for (auto& v : a) v = a_dist(rng);
  for (auto& v : b) v = b_dist(rng);
  const JacobiCoefficients sample(a, b);
  {
    Quad worst(0);
    for (int trial = 0; trial < 5; ++trial) {
      ControlSequence f;
      f.values.resize(12);
      for (auto& v : f.values) v = f_dist(rng);
      worst = std::max(worst, duhamel_mismatch<Quad>(sample, f, 40));
    }
    out.push_back(bound_check("dynamics.duhamel_equivalence", to_double(worst), 1e-12));
  }
  {
    const ResponseVector r = response_vector(sample, 30);
    const ControlSequence out_delta = apply_response(r, ControlSequence::delta());
    bool ok = out_delta[0] == 0.0;
    for (std::size_t t = 1; t <= r.size(); ++t) ok = ok && out_delta[static_cast<long>(t)] == r[t - 1];
    const ControlSequence f{{1.0, -2.0, 0.5}}, g{{0.25, 3.0}};
    ok = ok && convolve(f, g).values == convolve(g, f).values;
    // Response of f must match the simulated trace at site 1.
    const WaveField u = simulate_semi_infinite(sample, f, 30);
    const ControlSequence rf = apply_response(r, f);
    double worst = 0.0;
    for (int t = 1; t <= 30; ++t) worst = std::max(worst, std::abs(rf[t] - u.at(1, t)));
    ok = ok && worst <= 1e-9 * std::max(1.0, std::abs(u.at(1, 30)));
    out.push_back({"dynamics.response_operator", ok, "trace mismatch " + sci(worst)});
  }
  {
    const Complex lambda(0.3, 1.7);
    const PolynomialPair pair = polynomial_pair(sample, 8, lambda);
    // Relative to the products being cancelled, which grow with n.
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
      const double scale = std::max(1.0, sample.a(n) * std::abs(pair.p(n + 1) * pair.q(n)));
      worst = std::max(worst, std::abs(wronskian(pair, sample, n) + 1.0) / scale);
    }
    out.push_back(bound_check("spectral.wronskian_constant", worst, 1e-13));
  }
  {
    const auto rows = convergence_table(JacobiCoefficients::free(), Complex(0.0, 10.0), {2, 4, 8});
    bool ok = true;
    for (const auto& row : rows) ok = ok && row.deviation <= row.bound + 1e-15;
    out.push_back({"series.convergence_table_free", ok, "|m_0^N + z| within (R|z|)^{2N+1}/(1-R|z|)"});
  }
}

void fixture_checks(std::vector<CheckResult>& out, std::mt19937_64& rng,
                    const JacobiCoefficients& coeffs, const std::string& tag) {
  const int N = coeffs.size().value_or(default_matrix_size(coeffs));
  const RegionSpec region = entry_bound(coeffs);
  std::uniform_real_distribution<double> angle(std::numbers::pi + 0.05,
                                               2.0 * std::numbers::pi - 0.05);

  {
    const int T = 2 * N;
    const ResponseVector semi = response_vector(coeffs, T);
    const ResponseVector fin = response_vector_finite(coeffs, N, T);
    double worst = 0.0;
    for (int t = 0; t <= 2 * N - 1; ++t) {
      worst = std::max(worst, std::abs(semi[static_cast<std::size_t>(t)] -
                                       fin[static_cast<std::size_t>(t)]));
    }
    out.push_back(bound_check(tag + ".propagation_window", worst, 1e-13));
  }
  {
    const int T = 40;
    const WaveField u = simulate_semi_infinite(coeffs, ControlSequence::delta(), T);
    double front = 1.0, worst = 0.0;
    bool cone = true;
    for (int n = 1; n <= T; ++n) {
      front *= coeffs.a(n - 1);
      worst = std::max(worst, std::abs(u.at(n, n) - front) / front);
      for (int t = 0; t < n; ++t) cone = cone && u.at(n, t) == 0.0;
    }
    out.push_back({tag + ".wavefront", worst <= 1e-13 && cone,
                   "max rel error " + sci(worst) + (cone ? "" : ", nonzero ahead of front")});
  }
  {
    const auto u = simulate_semi_infinite<Quad>(coeffs, ControlSequence::delta(), 40);
    const double residual = to_double(verify_goursat(goursat_kernel(u), coeffs));
    out.push_back(bound_check(tag + ".goursat_residual", residual, 1e-12));
  }
  {
    const WaveField u = simulate_semi_infinite(coeffs, ControlSequence::delta(), 100);
    out.push_back(bound_check(tag + ".growth_bound", amplitude_bound_report(u, region), 1.0));
  }
  {
    std::uniform_real_distribution<double> re(-5.0, 5.0), im(1.0, 5.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const Complex lambda(re(rng), im(rng));
      const Complex r = weyl_finite_resolvent(coeffs, N, lambda).value;
      const Complex p = weyl_finite_poly(coeffs, N, lambda).value;
      const Complex b = weyl_finite_backward(coeffs, N, lambda).value;
      const double scale = std::abs(r);
      worst = std::max({worst, std::abs(r - p) / scale, std::abs(r - b) / scale,
                        std::abs(p - b) / scale});
    }
    out.push_back(bound_check(tag + ".weyl_cross_method", worst, 1e-9));
  }
  {
    std::uniform_real_distribution<double> re(-5.0, 5.0), im(0.01, 5.0);
    bool herglotz = true;
    double sym = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const Complex lambda(re(rng), im(rng));
      const Complex m = weyl_finite_resolvent(coeffs, N, lambda).value;
      const Complex mc = weyl_finite_resolvent(coeffs, N, std::conj(lambda)).value;
      herglotz = herglotz && m.imag() > 0.0;
      sym = std::max(sym, std::abs(mc - std::conj(m)) / std::abs(m));
    }
    out.push_back({tag + ".herglotz_symmetry", herglotz && sym <= 1e-12,
                   std::string(herglotz ? "Im m > 0" : "Im m <= 0 found") + ", symmetry " +
                       sci(sym)});
  }
  {
    const ResponseVector r = response_vector_finite(coeffs, N, 120);
    double excess = -1.0;
    for (int trial = 0; trial < 10; ++trial) {
      const Complex lambda = lambda_at_z(0.3 / region.R, angle(rng));
      const SeriesEvaluation s = weyl_series(r, lambda_to_z(lambda), region);
      const Complex exact = weyl_finite_resolvent(coeffs, N, lambda).value;
      excess = std::max(excess, std::abs(s.value - exact) - (s.tail_bound + 1e-10));
    }
    out.push_back({tag + ".series_identity", excess <= 0.0,
                   "max(|series - resolvent| - tail - 1e-10) = " + sci(excess)});
  }
  {
    const int T = 80;
    double excess = -1.0;
    for (int trial = 0; trial < 4; ++trial) {
      const SpectralPoint p = lambda_to_z(lambda_at_z(0.5 / region.R, angle(rng)));
      const double bound = hat_residual_bound(region.R * std::abs(p.z), T);
      excess = std::max(excess, verify_hat_equation(coeffs, p, T) - bound);
      excess = std::max(excess, verify_hat_equation(coeffs, p, T, N) - bound);
    }
    out.push_back({tag + ".hat_equation", excess <= 0.0, "max(residual - bound) = " + sci(excess)});
  }
  {
    const int T = std::min(20, 4 * N);
    out.push_back(bound_check(tag + ".inverse_roundtrip", roundtrip_report(coeffs, N, T), 1e-8));
  }
}

JacobiCoefficients random_coefficients(std::mt19937_64& rng, int N) {
  std::uniform_real_distribution<double> a_dist(0.5, 1.5), b_dist(-1.5, 1.5);
  std::vector<double> a(static_cast<std::size_t>(N)), b(static_cast<std::size_t>(N));
  for (auto& v : a) v = a_dist(rng);
  for (auto& v : b) v = b_dist(rng);
  return {a, b, 1.0, 0.0, N};
}

}  // namespace

int default_matrix_size(const JacobiCoefficients& coeffs) {
  const auto stored = std::max(coeffs.a_table().size() + 1, coeffs.b_table().size());
  return std::max(static_cast<int>(stored), 10);
}

std::vector<CheckResult> run_self_check(const std::vector<JacobiCoefficients>& fixtures,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  generic_checks(out, rng);

  std::vector<JacobiCoefficients> sets = fixtures;
  if (sets.empty()) {
    sets.push_back(JacobiCoefficients::free());
    for (int i = 0; i < 3; ++i) sets.push_back(random_coefficients(rng, 5 + 5 * i));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    fixture_checks(out, rng, sets[i], "set" + std::to_string(i));
  }
  return out;
}

}  // namespace weylkit
