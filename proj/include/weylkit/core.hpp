#pragma once

#include <optional>
#include <vector>

#include "weylkit/errors.hpp"
#include "weylkit/precision.hpp"

namespace weylkit {

/// Coefficients of a (finite or semi-infinite) Jacobi matrix.
///
/// The tables are 1-indexed semantically: `a(1)` is the first stored
/// off-diagonal entry. Indices beyond the tables take the tail values,
/// which makes the semi-infinite operator finitely describable. The
/// boundary parameter a(0) is fixed to 1.
class JacobiCoefficients {
 public:
  JacobiCoefficients() = default;
  JacobiCoefficients(std::vector<double> a, std::vector<double> b,
                     double tail_a = 1.0, double tail_b = 0.0,
                     std::optional<int> size = std::nullopt);

  /// Free operator: a ≡ 1, b ≡ 0.
  static JacobiCoefficients free() { return {}; }

  /// a(n) for n >= 0; a(0) == 1.
  double a(int n) const;
  /// b(n) for n >= 1.
  double b(int n) const;

  const std::vector<double>& a_table() const { return a_; }
  const std::vector<double>& b_table() const { return b_; }
  double tail_a() const { return tail_a_; }
  double tail_b() const { return tail_b_; }

  /// Matrix size when the coefficient set describes a finite matrix.
  std::optional<int> size() const { return size_; }

 private:
  std::vector<double> a_;
  std::vector<double> b_;
  double tail_a_ = 1.0;
  double tail_b_ = 0.0;
  std::optional<int> size_;
};

/// A spectral parameter λ paired with its disk parameter z, λ = z + 1/z.
struct SpectralPoint {
  Complex lambda;
  Complex z;
  /// Set in relaxed mode when λ lies on [-2, 2], i.e. |z| == 1.
  bool on_cut = false;
};

/// Entry bound B and growth radius R = 3B + 1.
struct RegionSpec {
  double B = 0.0;
  double R = 1.0;

  static RegionSpec from_bound(double bound) { return {bound, 3.0 * bound + 1.0}; }
  double z_radius() const { return 1.0 / R; }
};

enum class BranchMode {
  strict,   // λ on [-2, 2] is an error
  relaxed,  // λ on [-2, 2] maps to the unit circle, Im z <= 0
};

/// Smaller-modulus root of z² - λz + 1 = 0.
SpectralPoint lambda_to_z(Complex lambda, BranchMode mode = BranchMode::strict);

/// λ = z + 1/z. Throws DomainError for z == 0.
Complex z_to_lambda(Complex z);

RegionSpec entry_bound(const JacobiCoefficients& coeffs);

/// True iff Im λ > 0 and |z(λ)| < 1/R.
bool in_convergence_region(Complex lambda, const RegionSpec& region);

/// z-side version: Im z < 0 and |z| < 1/R.
bool in_z_region(Complex z, const RegionSpec& region);

/// Image of |z| = 1/R under z + 1/z for φ in (π, 2π), sampled at interior
/// equispaced angles φ_k = π + π(k+1)/(samples+1).
std::vector<Complex> region_boundary_curve(const RegionSpec& region, int samples);

/// Angles used by region_boundary_curve.
std::vector<double> region_boundary_angles(int samples);

}  // namespace weylkit
