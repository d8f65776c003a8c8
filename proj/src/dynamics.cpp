#include "weylkit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace weylkit {

namespace {

void require_positive(int value, const char* name) {
  if (value < 1) throw DomainError(std::string(name) + " must be >= 1");
}

template <class Real>
struct CoefficientCache {
  std::vector<Real> a;  // a[0] == 1
  std::vector<Real> b;  // b[0] unused

  CoefficientCache(const JacobiCoefficients& coeffs, int sites)
      : a(static_cast<std::size_t>(sites) + 2), b(static_cast<std::size_t>(sites) + 2) {
    for (int n = 0; n <= sites + 1; ++n) {
      a[static_cast<std::size_t>(n)] = Real(coeffs.a(n));
      b[static_cast<std::size_t>(n)] = n == 0 ? Real(0) : Real(coeffs.b(n));
    }
  }
};

template <class Real>
BasicWaveField<Real> simulate(const JacobiCoefficients& coeffs, SystemKind kind, int N,
                              const ControlSequence& f, int horizon) {
  require_positive(horizon, "horizon T");
  const int sites = kind == SystemKind::finite ? N : horizon + 1;
  require_positive(sites, "N");
  const CoefficientCache<Real> c(coeffs, sites);

  BasicWaveField<Real> u(kind, sites, horizon);
  for (int t = 0; t <= horizon; ++t) u.set(0, t, Real(f[t]));

  // u_{n,t+1} = a_n u_{n+1,t} + a_{n-1} u_{n-1,t} + b_n u_{n,t} - u_{n,t-1}
  for (int t = 0; t < horizon; ++t) {
    const int hi = std::min(t + 1, sites);
    for (int n = 1; n <= hi; ++n) {
      const auto i = static_cast<std::size_t>(n);
      const Real next = c.a[i] * u.at(n + 1, t) + c.a[i - 1] * u.at(n - 1, t) +
                        c.b[i] * u.at(n, t) - u.at(n, t - 1);
      u.set(n, t + 1, next);
    }
  }
  return u;
}

// Tracks only what reaches site 1 by time T: site n at time s matters iff
// n - 1 <= T - s.
ResponseVector response_impl(const JacobiCoefficients& coeffs, SystemKind kind, int N,
                             int T) {
  require_positive(T, "T");
  const int sites = kind == SystemKind::finite ? N : T + 1;
  require_positive(sites, "N");
  const CoefficientCache<double> c(coeffs, sites);

  const auto width = static_cast<std::size_t>(sites) + 2;
  std::vector<double> prev(width, 0.0), cur(width, 0.0), next(width, 0.0);
  cur[0] = 1.0;

  ResponseVector r;
  r.entries.resize(static_cast<std::size_t>(T));
  for (int t = 0; t < T; ++t) {
    const int s = t + 1;
    const int hi = std::min({s, sites, T - s + 1});
    next[0] = 0.0;
    for (int n = 1; n <= hi; ++n) {
      const auto i = static_cast<std::size_t>(n);
      next[i] = c.a[i] * cur[i + 1] + c.a[i - 1] * cur[i - 1] + c.b[i] * cur[i] - prev[i];
    }
    if (hi + 1 <= sites) next[static_cast<std::size_t>(hi) + 1] = 0.0;
    r.entries[static_cast<std::size_t>(t)] = next[1];
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return r;
}

}  // namespace

template <class Real>
BasicWaveField<Real>::BasicWaveField(SystemKind kind, int sites, int horizon)
    : kind_(kind), sites_(sites), horizon_(horizon) {
  rows_.resize(static_cast<std::size_t>(horizon) + 1);
  for (int t = 0; t <= horizon; ++t) {
    const int extent = kind == SystemKind::finite ? std::min(t, sites) : t;
    rows_[static_cast<std::size_t>(t)].assign(static_cast<std::size_t>(extent) + 1, Real(0));
  }
}

template <class Real>
Real BasicWaveField<Real>::at(int n, int t) const {
  if (t < 0 || t > horizon_ || n < 0) return Real(0);
  const auto& row = rows_[static_cast<std::size_t>(t)];
  return static_cast<std::size_t>(n) < row.size() ? row[static_cast<std::size_t>(n)] : Real(0);
}

template <class Real>
void BasicWaveField<Real>::set(int n, int t, Real value) {
  rows_.at(static_cast<std::size_t>(t)).at(static_cast<std::size_t>(n)) = value;
}

template <class Real>
BasicGoursatKernel<Real>::BasicGoursatKernel(int max_time) : max_time_(max_time) {
  rows_.resize(static_cast<std::size_t>(std::max(max_time, 0)) + 1);
  for (std::size_t s = 0; s < rows_.size(); ++s) rows_[s].assign(s + 1, Real(0));
}

template <class Real>
Real BasicGoursatKernel<Real>::at(int n, int s) const {
  if (s < 0 || s > max_time_ || n < 0 || n > s) return Real(0);
  return rows_[static_cast<std::size_t>(s)][static_cast<std::size_t>(n)];
}

template <class Real>
void BasicGoursatKernel<Real>::set(int n, int s, Real value) {
  rows_.at(static_cast<std::size_t>(s)).at(static_cast<std::size_t>(n)) = value;
}

template <class Real>
BasicWaveField<Real> simulate_semi_infinite(const JacobiCoefficients& coeffs,
                                            const ControlSequence& f, int horizon) {
  return simulate<Real>(coeffs, SystemKind::semi_infinite, 0, f, horizon);
}

template <class Real>
BasicWaveField<Real> simulate_finite(const JacobiCoefficients& coeffs, int N,
                                     const ControlSequence& g, int horizon) {
  require_positive(N, "N");
  return simulate<Real>(coeffs, SystemKind::finite, N, g, horizon);
}

ResponseVector response_vector(const JacobiCoefficients& coeffs, int T) {
  return response_impl(coeffs, SystemKind::semi_infinite, 0, T);
}

ResponseVector response_vector_finite(const JacobiCoefficients& coeffs, int N, int T) {
  require_positive(N, "N");
  return response_impl(coeffs, SystemKind::finite, N, T);
}

ControlSequence convolve(const ControlSequence& f, const ControlSequence& g) {
  if (f.size() == 0 || g.size() == 0) return {};
  ControlSequence c;
  c.values.assign(f.size() + g.size() - 1, 0.0);
  for (std::size_t s = 0; s < f.size(); ++s) {
    for (std::size_t k = 0; k < g.size(); ++k) c.values[s + k] += f.values[s] * g.values[k];
  }
  return c;
}

ControlSequence apply_response(const ResponseVector& r, const ControlSequence& f) {
  ControlSequence out;
  out.values.assign(r.size() + 1, 0.0);
  for (std::size_t t = 1; t <= r.size(); ++t) {
    double acc = 0.0;
    for (std::size_t s = 0; s < t; ++s) acc += r[s] * f[static_cast<long>(t - 1 - s)];
    out.values[t] = acc;
  }
  return out;
}

template <class Real>
BasicWaveField<Real> duhamel_solution(const BasicWaveField<Real>& u_delta,
                                      const ControlSequence& f) {
  BasicWaveField<Real> u(u_delta.kind(), u_delta.sites(), u_delta.horizon());
  for (int t = 0; t <= u_delta.horizon(); ++t) {
    for (int n = 0; n <= u.row_extent(t); ++n) {
      Real acc(0);
      for (int s = 0; s <= t; ++s) acc += u_delta.at(n, s) * Real(f[t - s]);
      u.set(n, t, acc);
    }
  }
  return u;
}

template <class Real>
Real duhamel_mismatch(const JacobiCoefficients& coeffs, const ControlSequence& f,
                      int horizon) {
  const auto u_delta = simulate_semi_infinite<Real>(coeffs, ControlSequence::delta(), horizon);
  const auto direct = simulate_semi_infinite<Real>(coeffs, f, horizon);
  const auto conv = duhamel_solution(u_delta, f);
  using std::abs;
  Real worst(0);
  for (int t = 0; t <= horizon; ++t) {
    for (int n = 0; n <= direct.row_extent(t); ++n) {
      worst = std::max(worst, Real(abs(direct.at(n, t) - conv.at(n, t))));
    }
  }
  return worst;
}

template <class Real>
BasicGoursatKernel<Real> goursat_kernel(const BasicWaveField<Real>& u_delta) {
  if (u_delta.kind() != SystemKind::semi_infinite) {
    throw DomainError("the Goursat kernel is defined for the semi-infinite system");
  }
  const int max_time = u_delta.horizon() - 1;
  BasicGoursatKernel<Real> w(max_time);
  for (int s = 1; s <= max_time; ++s) {
    for (int n = 1; n <= s; ++n) w.set(n, s, u_delta.at(n, s + 1));
  }
  return w;
}

template <class Real>
Real verify_goursat(const BasicGoursatKernel<Real>& w, const JacobiCoefficients& coeffs) {
  const int S = w.max_time();
  if (S < 3) throw DomainError("Goursat check needs a kernel triangle of side >= 3");
  const CoefficientCache<Real> c(coeffs, S);

  // wavefront amplitudes ∏_{k=0}^{n-1} a_k
  std::vector<Real> front(static_cast<std::size_t>(S) + 2);
  front[0] = Real(1);
  for (int n = 1; n <= S + 1; ++n) {
    front[static_cast<std::size_t>(n)] =
        front[static_cast<std::size_t>(n) - 1] * c.a[static_cast<std::size_t>(n) - 1];
  }

  using std::abs;
  Real worst(0);
  for (int s = 0; s <= S; ++s) worst = std::max(worst, Real(abs(w.at(0, s))));

  for (int n = 1; n <= S; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Real diag = w.at(n, n) - c.b[i] * front[i] - c.a[i - 1] * w.at(n - 1, n - 1);
    worst = std::max(worst, Real(abs(diag)));
  }

  for (int n = 1; n < S; ++n) {
    const auto i = static_cast<std::size_t>(n);
    for (int s = n; s < S; ++s) {
      Real lhs = w.at(n, s + 1) + w.at(n, s - 1) - c.a[i] * w.at(n + 1, s) -
                 c.a[i - 1] * w.at(n - 1, s) - c.b[i] * w.at(n, s);
      if (s == n) lhs += (Real(1) - c.a[i] * c.a[i]) * front[i];
      worst = std::max(worst, Real(abs(lhs)));
    }
  }
  return worst;
}

double amplitude_bound_report(const WaveField& field, const RegionSpec& region) {
  const double log_r = std::log(region.R);
  double worst = 1.0;  // t = 0: M_0 = 1 = R^0
  for (int t = 1; t <= field.horizon(); ++t) {
    double m = 0.0;
    const int hi = std::min(t, field.sites());
    for (int n = 1; n <= hi; ++n) {
      m = std::max({m, std::abs(field.at(n, t)), std::abs(field.at(n, t - 1))});
    }
    if (m > 0.0) worst = std::max(worst, std::exp(std::log(m) - t * log_r));
  }
  return worst;
}

template class BasicWaveField<double>;
template class BasicWaveField<Quad>;
template class BasicGoursatKernel<double>;
template class BasicGoursatKernel<Quad>;

template WaveField simulate_semi_infinite<double>(const JacobiCoefficients&,
                                                  const ControlSequence&, int);
template QuadWaveField simulate_semi_infinite<Quad>(const JacobiCoefficients&,
                                                    const ControlSequence&, int);
template WaveField simulate_finite<double>(const JacobiCoefficients&, int,
                                           const ControlSequence&, int);
template QuadWaveField simulate_finite<Quad>(const JacobiCoefficients&, int,
                                             const ControlSequence&, int);
template WaveField duhamel_solution<double>(const WaveField&, const ControlSequence&);
template QuadWaveField duhamel_solution<Quad>(const QuadWaveField&, const ControlSequence&);
template double duhamel_mismatch<double>(const JacobiCoefficients&, const ControlSequence&, int);
template Quad duhamel_mismatch<Quad>(const JacobiCoefficients&, const ControlSequence&, int);
template GoursatKernel goursat_kernel<double>(const WaveField&);
template QuadGoursatKernel goursat_kernel<Quad>(const QuadWaveField&);
template double verify_goursat<double>(const GoursatKernel&, const JacobiCoefficients&);
template Quad verify_goursat<Quad>(const QuadGoursatKernel&, const JacobiCoefficients&);

}  // namespace weylkit
