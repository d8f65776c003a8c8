#pragma once

#include <complex>

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

namespace weylkit {

using Complex = std::complex<double>;

// Extended precision for the ill-conditioned paths (long δ-simulations,
// Taylor-coefficient extraction on small circles).
using Quad = boost::multiprecision::float128;
using ComplexQuad = boost::multiprecision::complex128;

template <class Real>
struct ComplexFor;

template <>
struct ComplexFor<double> {
  using type = Complex;
};

template <>
struct ComplexFor<Quad> {
  using type = ComplexQuad;
};

template <class Real>
using complex_t = typename ComplexFor<Real>::type;

inline double to_double(double x) { return x; }
inline double to_double(const Quad& x) { return x.convert_to<double>(); }

inline Complex to_double(const Complex& z) { return z; }
inline Complex to_double(const ComplexQuad& z) {
  return {real(z).convert_to<double>(), imag(z).convert_to<double>()};
}

inline ComplexQuad to_quad(const Complex& z) {
  return ComplexQuad(Quad(z.real()), Quad(z.imag()));
}

}  // namespace weylkit
