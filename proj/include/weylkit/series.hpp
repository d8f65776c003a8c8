#pragma once

#include <optional>
#include <vector>

#include "weylkit/core.hpp"
#include "weylkit/dynamics.hpp"

namespace weylkit {

/// How response-vector entries are paired with powers of z.
///
/// `shifted` is the identity that holds for the stored convention
/// r_t = u^δ_{1,t+1}: m(λ) = -Σ_t z^{t+1} r_t, i.e. m = Σ_t S_t u^δ_{1,t}.
/// `literal` pairs r_t with z^t, which is only correct if r_t is read as
/// u^δ_{1,t}; it is kept for comparison against that reading.
enum class SeriesConvention { shifted, literal };

struct SeriesEvaluation {
  Complex value;
  int terms_used = 0;
  double tail_bound = 0.0;
  SpectralPoint point;
  RegionSpec region;
};

/// (R|z|)^{T+1} / (1 - R|z|), the bound on the neglected terms when
/// |r_t| <= R^{t+1}. Requires R|z| < 1.
double series_tail_bound(double ratio, int terms);

/// Smallest T >= 1 with series_tail_bound(ratio, T) <= tol. Throws
/// BudgetError when tol <= 0 or when T would exceed `max_terms`.
int terms_for_tolerance(double ratio, double tol, int max_terms = 100000);

inline constexpr int kMaxSeriesTerms = 100000;

/// Truncated Weyl series over all entries of r.
SeriesEvaluation weyl_series(const ResponseVector& r, const SpectralPoint& point,
                             const RegionSpec& region,
                             SeriesConvention convention = SeriesConvention::shifted);

/// m(λ) of the semi-infinite matrix to within `tol`.
SeriesEvaluation weyl_semi_infinite(const JacobiCoefficients& coeffs, Complex lambda,
                                    double tol);

/// m^N(λ) from the finite-system response vector to within `tol`.
SeriesEvaluation weyl_finite_series(const JacobiCoefficients& coeffs, int N, Complex lambda,
                                    double tol);

/// Σ_{t=0}^{T} S_t(λ) field(n, t), S_t = -z^t.
Complex hat_transform(const WaveField& field, int n, const SpectralPoint& point, int T);

/// 10 (R|z|)^{T/2} / (1 - R|z|).
double hat_residual_bound(double ratio, int T);

/// Largest |a_{n-1}û_{n-1} + a_n û_{n+1} + b_n û_n - λ û_n| over
/// 1 <= n <= min(T/2, N), for the δ-field of the chosen system. Pass N for
/// the finite system, std::nullopt for the semi-infinite one. Requires
/// R|z| <= 0.5.
double verify_hat_equation(const JacobiCoefficients& coeffs, const SpectralPoint& point,
                           int T, std::optional<int> finite_size = std::nullopt);

struct ConvergenceRow {
  int N = 0;
  Complex m_finite;
  double deviation = 0.0;  // |m^N - m|
  double bound = 0.0;      // (R|z|)^{2N+1} / (1 - R|z|)
};

/// m^N by the resolvent against the semi-infinite series, for each N.
/// Both sides are evaluated in float128 so deviations below double
/// round-off stay visible.
std::vector<ConvergenceRow> convergence_table(const JacobiCoefficients& coeffs,
                                              Complex lambda, const std::vector<int>& Ns);

}  // namespace weylkit
