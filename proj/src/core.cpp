#include "weylkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace weylkit {

JacobiCoefficients::JacobiCoefficients(std::vector<double> a, std::vector<double> b,
                                       double tail_a, double tail_b,
                                       std::optional<int> size)
    : a_(std::move(a)), b_(std::move(b)), tail_a_(tail_a), tail_b_(tail_b), size_(size) {
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!(a_[i] > 0.0) || !std::isfinite(a_[i])) {
      throw std::invalid_argument("a[" + std::to_string(i + 1) +
                                  "] must be a finite positive number");
    }
  }
  for (std::size_t i = 0; i < b_.size(); ++i) {
    if (!std::isfinite(b_[i])) {
      throw std::invalid_argument("b[" + std::to_string(i + 1) + "] must be finite");
    }
  }
  if (!(tail_a_ > 0.0) || !std::isfinite(tail_a_)) {
    throw std::invalid_argument("tail_a must be a finite positive number");
  }
  if (!std::isfinite(tail_b_)) {
    throw std::invalid_argument("tail_b must be finite");
  }
  if (size_ && *size_ < 1) {
    throw std::invalid_argument("N must be a positive integer");
  }
}

double JacobiCoefficients::a(int n) const {
  if (n <= 0) return 1.0;
  const auto i = static_cast<std::size_t>(n - 1);
  return i < a_.size() ? a_[i] : tail_a_;
}

double JacobiCoefficients::b(int n) const {
  const auto i = static_cast<std::size_t>(std::max(n - 1, 0));
  return i < b_.size() ? b_[i] : tail_b_;
}

SpectralPoint lambda_to_z(Complex lambda, BranchMode mode) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
    throw DomainError("lambda must be finite");
  }
  if (lambda.imag() == 0.0 && std::abs(lambda.real()) <= 2.0) {
    if (mode == BranchMode::strict) {
      throw DomainError("lambda lies on the cut [-2, 2]; |z| = 1 there");
    }
    const double x = lambda.real();
    const double y = std::sqrt(std::max(0.0, 4.0 - x * x));
    return {lambda, Complex(x / 2.0, -y / 2.0), true};
  }
  // Larger root first; the smaller one is its reciprocal (product of roots is 1).
  const Complex s = std::sqrt(lambda * lambda - 4.0);
  const Complex plus = lambda + s;
  const Complex minus = lambda - s;
  const Complex big = (std::abs(plus) >= std::abs(minus) ? plus : minus) / 2.0;
  return {lambda, 1.0 / big, false};
}

Complex z_to_lambda(Complex z) {
  if (z == Complex(0.0, 0.0)) {
    throw DomainError("z = 0 has no finite image under z + 1/z");
  }
  return z + 1.0 / z;
}

RegionSpec entry_bound(const JacobiCoefficients& coeffs) {
  double bound = std::max(coeffs.tail_a(), std::abs(coeffs.tail_b()));
  for (double v : coeffs.a_table()) bound = std::max(bound, v);
  for (double v : coeffs.b_table()) bound = std::max(bound, std::abs(v));
  return RegionSpec::from_bound(bound);
}

bool in_convergence_region(Complex lambda, const RegionSpec& region) {
  if (!(lambda.imag() > 0.0)) return false;
  const SpectralPoint p = lambda_to_z(lambda);
  return std::abs(p.z) < region.z_radius();
}

bool in_z_region(Complex z, const RegionSpec& region) {
  return z.imag() < 0.0 && std::abs(z) < region.z_radius();
}

std::vector<double> region_boundary_angles(int samples) {
  if (samples < 2) throw DomainError("region boundary needs at least 2 samples");
  std::vector<double> phi(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    phi[static_cast<std::size_t>(k)] =
        std::numbers::pi + std::numbers::pi * (k + 1) / (samples + 1);
  }
  return phi;
}

std::vector<Complex> region_boundary_curve(const RegionSpec& region, int samples) {
  const double R = region.R;
  std::vector<Complex> curve;
  curve.reserve(static_cast<std::size_t>(samples));
  for (double phi : region_boundary_angles(samples)) {
    curve.emplace_back((R + 1.0 / R) * std::cos(phi), (1.0 / R - R) * std::sin(phi));
  }
  return curve;
}

}  // namespace weylkit
