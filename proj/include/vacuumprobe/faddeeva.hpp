#ifndef VACUUMPROBE_FADDEEVA_HPP
#define VACUUMPROBE_FADDEEVA_HPP

// Faddeeva function w(z) = exp(-z^2) erfc(-iz) on the upper half plane,
// plus the stable building blocks for Fourier integrals of a truncated
// Gaussian window:
//
//   window_fourier(a, x1, x2, w) = int_{x1}^{x2} exp(-a x^2 - i w x) dx
//
// evaluated through e^{-c^2} erf(u + i c) with c = w/(2 sqrt(a)). The
// naive erf form overflows once c is a few tens; rewriting via w(-c+iu)
// keeps every factor bounded.

#include <cmath>
#include <complex>

namespace vacuumprobe::numerics {

using cdouble = std::complex<double>;

// Requires Im z >= 0. Relative accuracy ~1e-13 over the region exercised
// here (it degrades slowly as Im z -> 0 with |Re z| < 16).
cdouble faddeeva_w(cdouble z);

// Dawson integral D(x) = exp(-x^2) int_0^x exp(t^2) dt.
double dawson(double x);

// e^{-c^2} erf(u + i c), bounded for any real u, c.
cdouble scaled_erf(double u, double c);

// int_{x1}^{x2} exp(-a x^2) exp(-i w x) dx, a > 0.
cdouble window_fourier(double a, double x1, double x2, double omega);

// int_{-h}^{h} exp(-a x^2) cos(w x) dx, the real symmetric case.
double cos_window(double a, double half_width, double omega);

// exp(i t) - 1 without cancellation for small t.
inline cdouble cis_minus_one(double t) {
    const double s = std::sin(0.5 * t);
    return {-2.0 * s * s, std::sin(t)};
}

// 1 - cos(t) without cancellation for small t.
inline double one_minus_cos(double t) {
    const double s = std::sin(0.5 * t);
    return 2.0 * s * s;
}

} // namespace vacuumprobe::numerics

#endif
