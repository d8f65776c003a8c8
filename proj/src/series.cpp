#include "weylkit/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "weylkit/spectral.hpp"

namespace weylkit {

namespace {

// Neumaier compensation, applied to each component separately.
class CompensatedSum {
 public:
  void add(Complex term) {
    add_component(re_, re_c_, term.real());
    add_component(im_, im_c_, term.imag());
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_component(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

double growth_ratio(const SpectralPoint& point, const RegionSpec& region) {
  return region.R * std::abs(point.z);
}

}  // namespace

double series_tail_bound(double ratio, int terms) {
  if (!(ratio < 1.0)) throw DomainError("series tail bound needs R|z| < 1");
  return std::pow(ratio, terms + 1) / (1.0 - ratio);
}

int terms_for_tolerance(double ratio, double tol, int max_terms) {
  if (!(ratio < 1.0)) throw DomainError("series needs R|z| < 1");
  if (!(tol > 0.0)) throw BudgetError("tolerance must be positive: the geometric tail never vanishes");
  if (ratio == 0.0) return 1;
  const double estimate = std::log(tol * (1.0 - ratio)) / std::log(ratio) - 1.0;
  int T = std::max(1, static_cast<int>(std::floor(std::min(estimate, 2.0 * max_terms))));
  while (T > 1 && series_tail_bound(ratio, T - 1) <= tol) --T;
  while (series_tail_bound(ratio, T) > tol) {
    ++T;
    if (T > max_terms) break;
  }
  if (T > max_terms) {
    throw BudgetError("tolerance " + std::to_string(tol) + " needs more than " +
                      std::to_string(max_terms) + " series terms");
  }
  return T;
}

SeriesEvaluation weyl_series(const ResponseVector& r, const SpectralPoint& point,
                             const RegionSpec& region, SeriesConvention convention) {
  if (r.size() == 0) throw DomainError("response vector is empty");
  if (!in_convergence_region(point.lambda, region)) {
    throw DomainError("lambda is outside the convergence region |z| < 1/R, Im lambda > 0");
  }
  const double ratio = growth_ratio(point, region);
  if (!(ratio < 1.0)) throw DomainError("series needs R|z| < 1");

  const Complex z = point.z;
  CompensatedSum sum;
  Complex power = convention == SeriesConvention::shifted ? z : Complex(1.0, 0.0);
  for (std::size_t t = 0; t < r.size(); ++t) {
    sum.add(-power * r[t]);
    power *= z;
  }

  const int T = static_cast<int>(r.size());
  double tail = series_tail_bound(ratio, T);
  if (convention == SeriesConvention::literal) tail /= std::abs(z);
  return {sum.value(), T, tail, point, region};
}

SeriesEvaluation weyl_semi_infinite(const JacobiCoefficients& coeffs, Complex lambda,
                                    double tol) {
  const RegionSpec region = entry_bound(coeffs);
  if (!in_convergence_region(lambda, region)) {
    throw DomainError("lambda is outside the convergence region of the series");
  }
  const SpectralPoint point = lambda_to_z(lambda);
  const int T = terms_for_tolerance(region.R * std::abs(point.z), tol, kMaxSeriesTerms);
  return weyl_series(response_vector(coeffs, T), point, region);
}

SeriesEvaluation weyl_finite_series(const JacobiCoefficients& coeffs, int N, Complex lambda,
                                    double tol) {
  const RegionSpec region = entry_bound(coeffs);
  if (!in_convergence_region(lambda, region)) {
    throw DomainError("lambda is outside the convergence region of the series");
  }
  const SpectralPoint point = lambda_to_z(lambda);
  const int T = terms_for_tolerance(region.R * std::abs(point.z), tol, kMaxSeriesTerms);
  return weyl_series(response_vector_finite(coeffs, N, T), point, region);
}

Complex hat_transform(const WaveField& field, int n, const SpectralPoint& point, int T) {
  if (T < 0 || T > field.horizon()) {
    throw DomainError("hat transform horizon exceeds the simulated field");
  }
  CompensatedSum sum;
  Complex power(1.0, 0.0);
  for (int t = 0; t <= T; ++t) {
    sum.add(-power * field.at(n, t));
    power *= point.z;
  }
  return sum.value();
}

double hat_residual_bound(double ratio, int T) {
  return 10.0 * std::pow(ratio, T / 2) / (1.0 - ratio);
}

double verify_hat_equation(const JacobiCoefficients& coeffs, const SpectralPoint& point,
                           int T, std::optional<int> finite_size) {
  const RegionSpec region = entry_bound(coeffs);
  if (!(growth_ratio(point, region) <= 0.5 * (1.0 + 1e-12))) {
    throw DomainError("hat-equation check needs R|z| <= 0.5");
  }
  if (T < 2) throw DomainError("hat-equation check needs T >= 2");

  // The contract bound drops far below double round-off as R|z| shrinks, so
  // the fields and transforms are carried in float128. λ is rebuilt from z
  // in the same precision so the relation is tested at one exact point.
  const QuadWaveField field =
      finite_size ? simulate_finite<Quad>(coeffs, *finite_size, ControlSequence::delta(), T)
                  : simulate_semi_infinite<Quad>(coeffs, ControlSequence::delta(), T);
  int rows = T / 2;
  if (finite_size) rows = std::min(rows, *finite_size);

  const ComplexQuad z = to_quad(point.z);
  const ComplexQuad lambda = z + ComplexQuad(1) / z;
  std::vector<ComplexQuad> hat(static_cast<std::size_t>(rows) + 2);
  for (int n = 0; n <= rows + 1; ++n) {
    ComplexQuad sum(0), power(1);
    for (int t = 0; t <= T; ++t) {
      sum -= power * field.at(n, t);
      power *= z;
    }
    hat[static_cast<std::size_t>(n)] = sum;
  }

  Quad worst = 0;
  for (int n = 1; n <= rows; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const ComplexQuad residual = Quad(coeffs.a(n - 1)) * hat[i - 1] +
                                 Quad(coeffs.a(n)) * hat[i + 1] +
                                 Quad(coeffs.b(n)) * hat[i] - lambda * hat[i];
    const Quad r = abs(residual);
    if (r > worst) worst = r;
  }
  return to_double(worst);
}

std::vector<ConvergenceRow> convergence_table(const JacobiCoefficients& coeffs,
                                              Complex lambda, const std::vector<int>& Ns) {
  const RegionSpec region = entry_bound(coeffs);
  if (!in_convergence_region(lambda, region)) {
    throw DomainError("lambda is outside the convergence region of the series");
  }
  const SpectralPoint point = lambda_to_z(lambda);
  const double ratio = growth_ratio(point, region);

  // Deviations shrink like (R|z|)^{2N+1} and reach double round-off by
  // N ~ 10 at moderate λ, so the reference and every m^N are formed in
  // float128 at the same point z.
  const int T = std::min(terms_for_tolerance(ratio, 1e-32, kMaxSeriesTerms), 4000);
  const QuadWaveField u = simulate_semi_infinite<Quad>(coeffs, ControlSequence::delta(), T + 1);
  const ComplexQuad z = to_quad(point.z);
  const ComplexQuad lambda_q = z + ComplexQuad(1) / z;
  ComplexQuad reference(0), power = z;
  for (int t = 0; t < T; ++t) {
    reference -= power * u.at(1, t + 1);
    power *= z;
  }

  std::vector<ConvergenceRow> rows;
  rows.reserve(Ns.size());
  for (int N : Ns) {
    const ComplexQuad mN = resolvent_first_entry(coeffs, N, lambda_q);
    rows.push_back({N, to_double(mN), to_double(Quad(abs(mN - reference))),
                    std::pow(ratio, 2 * N + 1) / (1.0 - ratio)});
  }
  return rows;
}

}  // namespace weylkit
