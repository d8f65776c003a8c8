#pragma once

#include <string_view>
#include <vector>

#include "weylkit/core.hpp"

namespace weylkit {

/// Values of the polynomials of the first and second kind at one λ.
///
/// Both solve a_{n-1}ψ_{n-1} + b_nψ_n + a_nψ_{n+1} = λψ_n with
/// P_1 = 1, P_2 = (λ - b_1)/a_1 and Q_1 = 0, Q_2 = 1/a_1.
struct PolynomialPair {
  Complex lambda;
  std::vector<Complex> P;  // P[0] is P_1
  std::vector<Complex> Q;  // Q[0] is Q_1

  Complex p(int n) const { return P[static_cast<std::size_t>(n - 1)]; }
  Complex q(int n) const { return Q[static_cast<std::size_t>(n - 1)]; }
  int last_index() const { return static_cast<int>(P.size()); }
};

enum class WeylMethod { resolvent, poly_ratio, backward, series };

std::string_view to_string(WeylMethod method);
/// Throws std::invalid_argument on an unknown name.
WeylMethod parse_weyl_method(std::string_view name);

struct WeylValue {
  Complex value;
  WeylMethod method = WeylMethod::resolvent;
  double tail_bound = 0.0;  // zero for the exact finite evaluators
};

/// Forward recurrence up to index N+1.
PolynomialPair polynomial_pair(const JacobiCoefficients& coeffs, int N, Complex lambda);

/// a_n (P_{n+1} Q_n - P_n Q_{n+1}); equals -1 for every 1 <= n <= N.
Complex wronskian(const PolynomialPair& pair, const JacobiCoefficients& coeffs, int n);

/// m^N = -Q_{N+1}/P_{N+1}.
WeylValue weyl_finite_poly(const JacobiCoefficients& coeffs, int N, Complex lambda);

/// m^N = ((H^N - λ)^{-1} e_1, e_1) by tridiagonal elimination.
WeylValue weyl_finite_resolvent(const JacobiCoefficients& coeffs, int N, Complex lambda);

/// m^N = -Φ_1/Φ_0 with Φ_{N+1} = 0, Φ_N = 1 run down to n = 0.
WeylValue weyl_finite_backward(const JacobiCoefficients& coeffs, int N, Complex lambda);

/// Dispatch over the three finite evaluators (not `series`).
WeylValue weyl_finite(const JacobiCoefficients& coeffs, int N, Complex lambda,
                      WeylMethod method);

/// First component of (H^N - λ)^{-1} e_1 in the precision of `C`.
///
/// Thomas elimination followed by a residual check; when the check fails
/// the system is re-solved with partial pivoting. Throws PoleError on a
/// singular system.
template <class C>
C resolvent_first_entry(const JacobiCoefficients& coeffs, int N, const C& lambda);

/// U_n(x) by U_{n+1} = 2x U_n - U_{n-1}.
Complex chebyshev_U(int n, Complex x);

/// U_n(x) = Σ_k C(n+1, 2k+1) (x² - 1)^k x^{n-2k}.
Complex chebyshev_U_binomial(int n, Complex x);

/// Free-operator polynomials P_0..P_{n_max}, Q_0..Q_{n_max} with
/// P_0 = 0, P_1 = 1, Q_0 = -1, Q_1 = 0.
struct FreePolynomials {
  std::vector<Complex> P;
  std::vector<Complex> Q;
};
FreePolynomials free_polynomials(int n_max, Complex lambda);

/// m_0^N = -Q_{N+1}/P_{N+1} = -P_N/P_{N+1}.
///
/// Note the sign: written as P_N/P_{N+1} the expression would tend to +z,
/// contradicting m_0 = -z.
Complex free_weyl_finite(int N, Complex lambda);

/// S_t(λ) = -z^t.
Complex s_kernel(int t, const SpectralPoint& point);

/// √(4 - λ²)/(2π) on (-2, 2), zero elsewhere.
double free_spectral_density(double lambda);

}  // namespace weylkit
