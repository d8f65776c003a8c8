#pragma once

#include <vector>

#include "weylkit/core.hpp"

namespace weylkit {

/// Boundary control f_0, f_1, ...; zero beyond the stored samples.
struct ControlSequence {
  std::vector<double> values;

  static ControlSequence delta() { return {{1.0}}; }

  double operator[](long t) const {
    return (t >= 0 && static_cast<std::size_t>(t) < values.size())
               ? values[static_cast<std::size_t>(t)]
               : 0.0;
  }
  std::size_t size() const { return values.size(); }
};

enum class SystemKind {
  semi_infinite,
  finite,  // Dirichlet closure at site N+1
};

/// Solution of the discrete-time wave system on the space-time triangle.
///
/// Row t stores sites n = 0 .. min(t, N) (finite kind) or n = 0 .. t
/// (semi-infinite kind); everything outside reads as zero. Site 0 carries
/// the control value.
template <class Real>
class BasicWaveField {
 public:
  BasicWaveField(SystemKind kind, int sites, int horizon);

  SystemKind kind() const { return kind_; }
  /// N for the finite kind, horizon + 1 for the semi-infinite kind.
  int sites() const { return sites_; }
  int horizon() const { return horizon_; }

  Real at(int n, int t) const;
  void set(int n, int t, Real value);
  /// Highest stored site index in row t.
  int row_extent(int t) const { return static_cast<int>(rows_[static_cast<std::size_t>(t)].size()) - 1; }

 private:
  SystemKind kind_;
  int sites_;
  int horizon_;
  std::vector<std::vector<Real>> rows_;
};

using WaveField = BasicWaveField<double>;
using QuadWaveField = BasicWaveField<Quad>;

/// Kernel of the response operator. Stored convention: r_t = u^δ_{1,t+1},
/// so entries()[0] == 1 for every coefficient set.
struct ResponseVector {
  std::vector<double> entries;

  double operator[](std::size_t t) const { return entries[t]; }
  std::size_t size() const { return entries.size(); }
};

/// w_{n,s} for 0 <= n <= s <= max_time(); zero below the diagonal.
template <class Real>
class BasicGoursatKernel {
 public:
  explicit BasicGoursatKernel(int max_time);

  int max_time() const { return max_time_; }
  Real at(int n, int s) const;
  void set(int n, int s, Real value);

 private:
  int max_time_;
  std::vector<std::vector<Real>> rows_;  // rows_[s][n]
};

using GoursatKernel = BasicGoursatKernel<double>;
using QuadGoursatKernel = BasicGoursatKernel<Quad>;

template <class Real = double>
BasicWaveField<Real> simulate_semi_infinite(const JacobiCoefficients& coeffs,
                                            const ControlSequence& f, int horizon);

template <class Real = double>
BasicWaveField<Real> simulate_finite(const JacobiCoefficients& coeffs, int N,
                                     const ControlSequence& g, int horizon);

/// r_0 .. r_{T-1} of the semi-infinite system.
ResponseVector response_vector(const JacobiCoefficients& coeffs, int T);

/// r^N_0 .. r^N_{T-1} of the finite system.
ResponseVector response_vector_finite(const JacobiCoefficients& coeffs, int N, int T);

ControlSequence convolve(const ControlSequence& f, const ControlSequence& g);

/// (R f)_t = (r * f_{·-1})_t for t = 0 .. r.size(); output at t = 0 is 0.
ControlSequence apply_response(const ResponseVector& r, const ControlSequence& f);

/// u^f_{n,t} = (u^δ_{n,·} * f)_t on the grid of `u_delta`.
template <class Real>
BasicWaveField<Real> duhamel_solution(const BasicWaveField<Real>& u_delta,
                                      const ControlSequence& f);

/// Maximum |duhamel - direct simulation| over the shared grid; a nonzero
/// value beyond round-off points at a stencil bug.
template <class Real>
Real duhamel_mismatch(const JacobiCoefficients& coeffs, const ControlSequence& f,
                      int horizon);

/// w_{n,s} = u^δ_{n,s+1} for 1 <= n <= s <= T-1. Requires a semi-infinite
/// δ-field.
template <class Real>
BasicGoursatKernel<Real> goursat_kernel(const BasicWaveField<Real>& u_delta);

/// Largest absolute residual over the diagonal relation, the interior
/// equation (s >= n, with source -δ_{s,n}(1 - a_n²)∏a_k) and w_{0,s} = 0.
template <class Real>
Real verify_goursat(const BasicGoursatKernel<Real>& kernel,
                    const JacobiCoefficients& coeffs);

/// max_t M_t / R^t with M_0 = 1 and
/// M_t = max_{1<=n<=t} {|u_{n,t}|, |u_{n,t-1}|}.
double amplitude_bound_report(const WaveField& field, const RegionSpec& region);

}  // namespace weylkit
