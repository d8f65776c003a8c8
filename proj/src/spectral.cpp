#include "weylkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace weylkit {

namespace {

constexpr int kRenormalizeEvery = 16;

void require_size(int N) {
  if (N < 1) throw DomainError("N must be >= 1");
}

Complex int_power(Complex z, int t) {
  Complex result(1.0, 0.0);
  Complex base = z;
  for (unsigned e = static_cast<unsigned>(t); e != 0; e >>= 1) {
    if (e & 1U) result *= base;
    base *= base;
  }
  return result;
}

template <class Real>
Real residual_tolerance();
template <>
double residual_tolerance<double>() { return 1e-10; }
template <>
Quad residual_tolerance<Quad>() { return Quad(1e-28); }

template <class C>
using real_of = decltype(abs(std::declval<C>()));

// Gaussian elimination with partial pivoting on a tridiagonal system; the
// second superdiagonal created by row swaps is kept in `dl`.
template <class C>
std::vector<C> solve_tridiagonal_pivoted(std::vector<C> dl, std::vector<C> d,
                                         std::vector<C> du, std::vector<C> rhs) {
  using std::abs;
  const std::size_t n = d.size();
  const C zero(0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (abs(d[i]) >= abs(dl[i])) {
      if (d[i] == zero) throw PoleError("singular resolvent system");
      const C mult = dl[i] / d[i];
      d[i + 1] -= mult * du[i];
      rhs[i + 1] -= mult * rhs[i];
      if (i + 2 < n) dl[i] = zero;
    } else {
      const C mult = d[i] / dl[i];
      d[i] = dl[i];
      const C temp = d[i + 1];
      d[i + 1] = du[i] - mult * temp;
      if (i + 2 < n) {
        dl[i] = du[i + 1];
        du[i + 1] = -mult * dl[i];
      }
      du[i] = temp;
      const C b_i = rhs[i];
      rhs[i] = rhs[i + 1];
      rhs[i + 1] = b_i - mult * rhs[i + 1];
    }
  }
  if (d[n - 1] == zero) throw PoleError("singular resolvent system");
  std::vector<C> x(n);
  x[n - 1] = rhs[n - 1] / d[n - 1];
  if (n >= 2) x[n - 2] = (rhs[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
  for (std::size_t k = n; k-- > 2;) {
    const std::size_t i = k - 2;
    x[i] = (rhs[i] - du[i] * x[i + 1] - dl[i] * x[i + 2]) / d[i];
  }
  return x;
}

}  // namespace

std::string_view to_string(WeylMethod method) {
  switch (method) {
    case WeylMethod::resolvent: return "resolvent";
    case WeylMethod::poly_ratio: return "poly_ratio";
    case WeylMethod::backward: return "backward";
    case WeylMethod::series: return "series";
  }
  return "unknown";
}

WeylMethod parse_weyl_method(std::string_view name) {
  if (name == "resolvent") return WeylMethod::resolvent;
  if (name == "poly_ratio") return WeylMethod::poly_ratio;
  if (name == "backward") return WeylMethod::backward;
  if (name == "series") return WeylMethod::series;
  throw std::invalid_argument("unknown Weyl method '" + std::string(name) + "'");
}

PolynomialPair polynomial_pair(const JacobiCoefficients& coeffs, int N, Complex lambda) {
  require_size(N);
  PolynomialPair pair{lambda, std::vector<Complex>(static_cast<std::size_t>(N) + 1),
                      std::vector<Complex>(static_cast<std::size_t>(N) + 1)};
  auto& P = pair.P;
  auto& Q = pair.Q;
  P[0] = 1.0;
  Q[0] = 0.0;
  P[1] = (lambda - coeffs.b(1)) / coeffs.a(1);
  Q[1] = 1.0 / coeffs.a(1);
  for (int n = 2; n <= N; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);  // slot of index n
    const double an = coeffs.a(n);
    const double am = coeffs.a(n - 1);
    const Complex shift = lambda - coeffs.b(n);
    P[i + 1] = (shift * P[i] - am * P[i - 1]) / an;
    Q[i + 1] = (shift * Q[i] - am * Q[i - 1]) / an;
  }
  return pair;
}

Complex wronskian(const PolynomialPair& pair, const JacobiCoefficients& coeffs, int n) {
  return coeffs.a(n) * (pair.p(n + 1) * pair.q(n) - pair.p(n) * pair.q(n + 1));
}

WeylValue weyl_finite_poly(const JacobiCoefficients& coeffs, int N, Complex lambda) {
  require_size(N);
  // Same recurrence as polynomial_pair, written from the virtual values
  // P_0 = 0, Q_0 = -1 (with a_0 = 1) and carrying only the last two terms.
  // P and Q are rescaled together so that large N cannot overflow.
  Complex p_prev = 0.0, p_cur = 1.0;
  Complex q_prev = -1.0, q_cur = 0.0;
  double scale = 0.0;
  for (int n = 1; n <= N; ++n) {
    const double an = coeffs.a(n);
    const double am = coeffs.a(n - 1);
    const Complex shift = lambda - coeffs.b(n);
    const Complex p_next = (shift * p_cur - am * p_prev) / an;
    const Complex q_next = (shift * q_cur - am * q_prev) / an;
    scale = (std::abs(shift) * std::abs(p_cur) + am * std::abs(p_prev)) / an;
    p_prev = p_cur;
    p_cur = p_next;
    q_prev = q_cur;
    q_cur = q_next;
    const double big = std::max(std::abs(p_cur), std::abs(p_prev));
    if (big > 1e100) {
      p_prev /= big;
      p_cur /= big;
      q_prev /= big;
      q_cur /= big;
      scale /= big;
    }
  }
  if (std::abs(p_cur) <= 8.0 * std::numeric_limits<double>::epsilon() * scale) {
    throw PoleError("lambda is at a zero of P_{N+1}");
  }
  return {-q_cur / p_cur, WeylMethod::poly_ratio, 0.0};
}

template <class C>
C resolvent_first_entry(const JacobiCoefficients& coeffs, int N, const C& lambda) {
  using Real = real_of<C>;
  using std::abs;
  require_size(N);
  const auto n = static_cast<std::size_t>(N);
  std::vector<C> diag(n), off(n > 1 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = C(Real(coeffs.b(static_cast<int>(i) + 1))) - lambda;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) off[i] = C(Real(coeffs.a(static_cast<int>(i) + 1)));

  // Thomas sweep for (H^N - λ) x = e_1.
  std::vector<C> x(n);
  bool ok = true;
  {
    std::vector<C> c_prime(n), y(n);
    C denom = diag[0];
    if (denom == C(0)) ok = false;
    if (ok) {
      y[0] = C(1) / denom;
      if (n > 1) c_prime[0] = off[0] / denom;
      for (std::size_t i = 1; i < n && ok; ++i) {
        denom = diag[i] - off[i - 1] * c_prime[i - 1];
        if (denom == C(0)) {
          ok = false;
          break;
        }
        if (i + 1 < n) c_prime[i] = off[i] / denom;
        y[i] = -(off[i - 1] * y[i - 1]) / denom;
      }
    }
    if (ok) {
      x[n - 1] = y[n - 1];
      for (std::size_t k = n - 1; k-- > 0;) x[k] = y[k] - c_prime[k] * x[k + 1];
    }
  }

  auto residual_ok = [&](const std::vector<C>& sol) {
    Real res(0), size(0);
    for (std::size_t i = 0; i < n; ++i) {
      C row = diag[i] * sol[i];
      if (i > 0) row += off[i - 1] * sol[i - 1];
      if (i + 1 < n) row += off[i] * sol[i + 1];
      if (i == 0) row -= C(1);
      const Real r = abs(row);
      const Real s = abs(sol[i]);
      if (!(r == r) || !(s == s)) return false;  // NaN
      res = std::max(res, r);
      size = std::max(size, s);
    }
    return res <= residual_tolerance<Real>() * size;
  };

  if (ok && residual_ok(x)) return x[0];

  std::vector<C> sub(n > 1 ? n - 1 : 0), sup(n > 1 ? n - 1 : 0), rhs(n, C(0));
  rhs[0] = C(1);
  for (std::size_t i = 0; i + 1 < n; ++i) sub[i] = sup[i] = off[i];
  sub.resize(n, C(0));
  sup.resize(n, C(0));
  const auto pivoted = solve_tridiagonal_pivoted(sub, diag, sup, rhs);
  for (const auto& v : pivoted) {
    const Real m = abs(v);
    if (!(m == m) || m > Real(1e300)) throw PoleError("singular resolvent system");
  }
  return pivoted[0];
}

template Complex resolvent_first_entry<Complex>(const JacobiCoefficients&, int,
                                                const Complex&);
template ComplexQuad resolvent_first_entry<ComplexQuad>(const JacobiCoefficients&, int,
                                                        const ComplexQuad&);

WeylValue weyl_finite_resolvent(const JacobiCoefficients& coeffs, int N, Complex lambda) {
  return {resolvent_first_entry(coeffs, N, lambda), WeylMethod::resolvent, 0.0};
}

WeylValue weyl_finite_backward(const JacobiCoefficients& coeffs, int N, Complex lambda) {
  require_size(N);
  // (Φ_{n+1}, Φ_n), starting from (Φ_{N+1}, Φ_N) = (0, 1).
  Complex upper = 0.0, cur = 1.0;
  double scale = 0.0;
  for (int n = N; n >= 1; --n) {
    const Complex shift = lambda - coeffs.b(n);
    const double an = n == N ? 0.0 : coeffs.a(n);
    const Complex lower = (shift * cur - an * upper) / coeffs.a(n - 1);
    scale = (std::abs(shift) * std::abs(cur) + an * std::abs(upper)) / coeffs.a(n - 1);
    upper = cur;
    cur = lower;
    if ((N - n + 1) % kRenormalizeEvery == 0) {
      const double big = std::max(std::abs(cur), std::abs(upper));
      if (big > 0.0) {
        cur /= big;
        upper /= big;
        scale /= big;
      }
    }
  }
  // cur = Φ_0, upper = Φ_1
  if (std::abs(cur) <= 8.0 * std::numeric_limits<double>::epsilon() * scale) {
    throw PoleError("Phi_0 vanishes: lambda is an eigenvalue of H^N");
  }
  return {-upper / cur, WeylMethod::backward, 0.0};
}

WeylValue weyl_finite(const JacobiCoefficients& coeffs, int N, Complex lambda,
                      WeylMethod method) {
  switch (method) {
    case WeylMethod::resolvent: return weyl_finite_resolvent(coeffs, N, lambda);
    case WeylMethod::poly_ratio: return weyl_finite_poly(coeffs, N, lambda);
    case WeylMethod::backward: return weyl_finite_backward(coeffs, N, lambda);
    case WeylMethod::series: break;
  }
  throw std::invalid_argument("series evaluation lives in the series module");
}

Complex chebyshev_U(int n, Complex x) {
  if (n < 0) throw DomainError("Chebyshev degree must be >= 0");
  if (n == 0) return 1.0;
  Complex prev = 1.0, cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const Complex next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex chebyshev_U_binomial(int n, Complex x) {
  if (n < 0) throw DomainError("Chebyshev degree must be >= 0");
  const Complex w = x * x - 1.0;
  Complex sum = 0.0;
  for (int k = 0; 2 * k <= n; ++k) {
    // C(n+1, 2k+1)
    double binom = 1.0;
    for (int j = 1; j <= 2 * k + 1; ++j) binom = binom * (n + 2 - j) / j;
    sum += binom * int_power(w, k) * int_power(x, n - 2 * k);
  }
  return sum;
}

FreePolynomials free_polynomials(int n_max, Complex lambda) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  FreePolynomials fp;
  fp.P.resize(static_cast<std::size_t>(n_max) + 1);
  fp.Q.resize(static_cast<std::size_t>(n_max) + 1);
  fp.P[0] = 0.0;
  fp.P[1] = 1.0;
  fp.Q[0] = -1.0;
  fp.Q[1] = 0.0;
  for (std::size_t n = 1; n < static_cast<std::size_t>(n_max); ++n) {
    fp.P[n + 1] = lambda * fp.P[n] - fp.P[n - 1];
    fp.Q[n + 1] = lambda * fp.Q[n] - fp.Q[n - 1];
  }
  return fp;
}

Complex free_weyl_finite(int N, Complex lambda) {
  require_size(N);
  Complex prev = 0.0, cur = 1.0;  // P_0, P_1
  double scale = 0.0;
  for (int n = 1; n <= N; ++n) {
    const Complex next = lambda * cur - prev;
    scale = std::abs(lambda) * std::abs(cur) + std::abs(prev);
    prev = cur;
    cur = next;
    const double big = std::max(std::abs(cur), std::abs(prev));
    if (big > 1e100) {
      prev /= big;
      cur /= big;
      scale /= big;
    }
  }
  if (std::abs(cur) <= 8.0 * std::numeric_limits<double>::epsilon() * scale) {
    throw PoleError("lambda is a zero of P_{N+1} (Chebyshev node)");
  }
  return -prev / cur;
}

Complex s_kernel(int t, const SpectralPoint& point) {
  if (t < 0) throw DomainError("S_t needs t >= 0");
  if (std::abs(point.z) > 1.0 + 1e-15) throw DomainError("S_t needs |z| <= 1");
  return -int_power(point.z, t);
}

double free_spectral_density(double lambda) {
  if (!(std::abs(lambda) < 2.0)) return 0.0;
  return std::sqrt(4.0 - lambda * lambda) / (2.0 * std::numbers::pi);
}

}  // namespace weylkit
