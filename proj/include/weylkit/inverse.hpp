#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "weylkit/core.hpp"
#include "weylkit/dynamics.hpp"

namespace weylkit {

/// A callable Weyl function m(λ) together with the region its Taylor
/// expansion in z is guaranteed on.
///
/// Taylor coefficient t recovered from a circle of radius rho carries the
/// sample error amplified by rho^{-t-1}. When `evaluate_extended` is set,
/// the extraction runs in float128 and uses it instead of `evaluate`.
struct WeylOracle {
  std::function<Complex(Complex)> evaluate;
  std::function<ComplexQuad(const ComplexQuad&)> evaluate_extended;
  RegionSpec region;
};

struct ExtractedResponse {
  ResponseVector r;
  std::vector<double> imag_residue;  // imaginary parts discarded from r
};

/// m^N of the finite matrix, evaluated on both half-planes by the resolvent.
WeylOracle resolvent_oracle(const JacobiCoefficients& coeffs, int N);

/// Extends a function known on Im λ >= 0 by m(conj λ) = conj m(λ).
std::function<Complex(Complex)> conjugate_extended(std::function<Complex(Complex)> upper);

inline double default_contour_radius(const RegionSpec& region) { return 0.5 / region.R; }
inline int default_contour_nodes(int T) { return T * 8 > 256 ? T * 8 : 256; }

/// z_k = rho e^{2πik/K}, k = 0 .. K-1.
std::vector<Complex> contour_nodes(double rho, int K);

/// r_t = -(1/2πi) ∮_{|z|=rho} m(λ(z)) z^{-t-2} dz, t = 0 .. T-1, by the
/// K-point trapezoid rule. Requires 0 < rho < 1/R and K >= 4T.
ExtractedResponse response_from_weyl(const WeylOracle& oracle, int T, double rho, int K);

struct ContourSample {
  Complex z;
  Complex m;
};

/// Same extraction from externally supplied samples. Every sample must sit
/// on a canonical node z_k (relative tolerance 1e-12); nodes missing from
/// the input are filled from their conjugate partner.
ExtractedResponse response_from_samples(const std::vector<ContourSample>& samples, int T,
                                        double rho, int K,
                                        std::optional<RegionSpec> region = std::nullopt);

/// Max |r_t(extracted from the resolvent of H^N) - r^N_t(simulated)|,
/// t < T. Requires T <= 4N.
double roundtrip_report(const JacobiCoefficients& coeffs, int N, int T);

/// b_1 = r_1 and a_1 = sqrt(r_2 - r_1² + 1), from r_2 = a_1² + b_1² - 1.
struct LeadingCoefficients {
  double a1 = 0.0;
  double b1 = 0.0;
};
LeadingCoefficients leading_coefficients(const ResponseVector& r);

}  // namespace weylkit
