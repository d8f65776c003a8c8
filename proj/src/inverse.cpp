#include "weylkit/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "weylkit/spectral.hpp"

namespace weylkit {

namespace {

void check_contour(int T, double rho, int K) {
  if (T < 1) throw DomainError("T must be >= 1");
  if (!(rho > 0.0)) throw DomainError("contour radius must be positive");
  if (K < 4 * T) throw DomainError("need K >= 4T quadrature nodes");
}

// r_t = -(1/K) Σ_k m_k z_k^{-t-1}, accumulated in node order.
template <class C>
ExtractedResponse trapezoid_coefficients(const std::vector<C>& z, const std::vector<C>& m,
                                         int T) {
  const auto terms = static_cast<std::size_t>(T);
  std::vector<C> acc(terms, C(0));
  for (std::size_t k = 0; k < z.size(); ++k) {
    const C inv = C(1) / z[k];
    C weight = m[k] * inv;
    for (std::size_t t = 0; t < terms; ++t) {
      acc[t] += weight;
      weight *= inv;
    }
  }
  ExtractedResponse out;
  out.r.entries.resize(terms);
  out.imag_residue.resize(terms);
  const C scale = C(-1) / C(static_cast<double>(z.size()));
  for (std::size_t t = 0; t < terms; ++t) {
    const Complex value = to_double(acc[t] * scale);
    out.r.entries[t] = value.real();
    out.imag_residue[t] = value.imag();
  }
  return out;
}

}  // namespace

WeylOracle resolvent_oracle(const JacobiCoefficients& coeffs, int N) {
  if (N < 1) throw DomainError("N must be >= 1");
  WeylOracle oracle;
  oracle.evaluate = [coeffs, N](Complex lambda) {
    return resolvent_first_entry(coeffs, N, lambda);
  };
  oracle.evaluate_extended = [coeffs, N](const ComplexQuad& lambda) {
    return resolvent_first_entry(coeffs, N, lambda);
  };
  oracle.region = entry_bound(coeffs);
  return oracle;
}

std::function<Complex(Complex)> conjugate_extended(std::function<Complex(Complex)> upper) {
  return [upper = std::move(upper)](Complex lambda) {
    if (lambda.imag() < 0.0) return std::conj(upper(std::conj(lambda)));
    return upper(lambda);
  };
}

std::vector<Complex> contour_nodes(double rho, int K) {
  std::vector<Complex> nodes(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) {
    nodes[static_cast<std::size_t>(k)] = std::polar(rho, 2.0 * std::numbers::pi * k / K);
  }
  return nodes;
}

ExtractedResponse response_from_weyl(const WeylOracle& oracle, int T, double rho, int K) {
  check_contour(T, rho, K);
  if (!(rho < oracle.region.z_radius())) {
    throw DomainError("contour radius must be below 1/R = " +
                      std::to_string(oracle.region.z_radius()));
  }
  const auto nodes = static_cast<std::size_t>(K);

  if (oracle.evaluate_extended) {
    const Quad two_pi = 2 * boost::math::constants::pi<Quad>();
    const Quad radius(rho);
    std::vector<ComplexQuad> z(nodes), m(nodes);
    for (std::size_t k = 0; k < nodes; ++k) {
      const Quad theta = two_pi * Quad(static_cast<double>(k)) / Quad(K);
      z[k] = ComplexQuad(radius * cos(theta), radius * sin(theta));
      m[k] = oracle.evaluate_extended(z[k] + ComplexQuad(1) / z[k]);
    }
    return trapezoid_coefficients(z, m, T);
  }

  if (!oracle.evaluate) throw DomainError("Weyl oracle has no evaluator");
  std::vector<Complex> z = contour_nodes(rho, K), m(nodes);
  for (std::size_t k = 0; k < nodes; ++k) m[k] = oracle.evaluate(z_to_lambda(z[k]));
  return trapezoid_coefficients(z, m, T);
}

ExtractedResponse response_from_samples(const std::vector<ContourSample>& samples, int T,
                                        double rho, int K, std::optional<RegionSpec> region) {
  check_contour(T, rho, K);
  if (region && !(rho < region->z_radius())) {
    throw DomainError("contour radius must be below 1/R");
  }
  if (!(rho < 1.0)) throw DomainError("contour radius must be inside the unit disk");

  const auto nodes = static_cast<std::size_t>(K);
  const std::vector<Complex> z = contour_nodes(rho, K);
  std::vector<std::optional<Complex>> m(nodes);
  for (const auto& s : samples) {
    double angle = std::arg(s.z);
    if (angle < 0.0) angle += 2.0 * std::numbers::pi;
    const auto k = static_cast<std::size_t>(
        std::llround(angle / (2.0 * std::numbers::pi) * K) % K);
    if (std::abs(s.z - z[k]) > 1e-12 * rho) {
      throw DomainError("sample at z = (" + std::to_string(s.z.real()) + ", " +
                        std::to_string(s.z.imag()) + ") is not on the canonical contour");
    }
    if (m[k]) throw DomainError("duplicate sample for contour node " + std::to_string(k));
    m[k] = s.m;
  }
  std::vector<Complex> values(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    if (m[k]) {
      values[k] = *m[k];
      continue;
    }
    const std::size_t partner = (nodes - k) % nodes;
    if (!m[partner]) {
      throw DomainError("contour node " + std::to_string(k) + " and its conjugate are missing");
    }
    values[k] = std::conj(*m[partner]);
  }
  return trapezoid_coefficients(z, values, T);
}

double roundtrip_report(const JacobiCoefficients& coeffs, int N, int T) {
  if (T > 4 * N) throw DomainError("roundtrip needs T <= 4N");
  const WeylOracle oracle = resolvent_oracle(coeffs, N);
  const ExtractedResponse extracted = response_from_weyl(
      oracle, T, default_contour_radius(oracle.region), default_contour_nodes(T));
  const ResponseVector simulated = response_vector_finite(coeffs, N, T);
  double worst = 0.0;
  for (std::size_t t = 0; t < simulated.size(); ++t) {
    worst = std::max(worst, std::abs(extracted.r[t] - simulated[t]));
  }
  return worst;
}

LeadingCoefficients leading_coefficients(const ResponseVector& r) {
  if (r.size() < 3) throw DomainError("need r_0, r_1, r_2");
  const double b1 = r[1];
  const double a1_sq = r[2] - b1 * b1 + 1.0;
  if (!(a1_sq > 0.0)) throw DomainError("r_2 - r_1^2 + 1 must be positive");
  return {std::sqrt(a1_sq), b1};
}

}  // namespace weylkit
