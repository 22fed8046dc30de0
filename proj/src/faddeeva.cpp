#include "vacuumprobe/faddeeva.hpp"

#include <cmath>
#include <stdexcept>

namespace vacuumprobe::numerics {

namespace {

constexpr double local_pi = 3.14159265358979323846;
constexpr double inv_sqrt_pi = 0.5641895835477562869;

// Asymptotic continued fraction, accurate for |z| >= ~8 on the upper
// half plane. Depth 24 is overkill at |z| = 16 but costs nothing.
cdouble w_continued_fraction(cdouble z) {
    cdouble t = z;
    for (int n = 24; n >= 1; --n)
        t = z - (0.5 * n) / t;
    return cdouble(0.0, inv_sqrt_pi) / t;
}

// Trapezoidal sum for w(z) = (i/pi) int e^{-t^2}/(z-t) dt plus the exact
// residue correction for the pole crossed by the contour shift:
//
//   w(z) = (i h/pi) sum_k e^{-(kh)^2}/(z - kh) - 2 q/(1-q) e^{-z^2},
//   q = exp(2 pi i z / h),
//
// with remaining error O(exp(-pi^2/h^2)). Valid for Im z > 0; the step
// is shrunk as Im z -> 0 to keep the correction term well conditioned.
cdouble w_trapezoid(cdouble z) {
    const double y = z.imag();
    double h = 0.25;
    if (y < 0.05)
        h = std::max(0.5 * y, 2.5e-4);

    const int kmax = static_cast<int>(std::ceil(6.6 / h));
    cdouble sum = 1.0 / z;
    const cdouble z2 = z * z;
    for (int k = 1; k <= kmax; ++k) {
        const double t = k * h;
        const double g = std::exp(-t * t);
        sum += g * (2.0 * z) / (z2 - t * t);
    }
    const cdouble q = std::exp(cdouble(0.0, 2.0 * local_pi / h) * z);
    cdouble w = cdouble(0.0, h / local_pi) * sum;
    w -= 2.0 * (q / (1.0 - q)) * std::exp(-z2);
    return w;
}

} // namespace

cdouble faddeeva_w(cdouble z) {
    if (!(z.imag() > 0.0)) {
        if (z.imag() == 0.0) {
            // Real axis limit: w(x) = e^{-x^2} + 2i/sqrt(pi) D(x).
            const double x = z.real();
            return {std::exp(-x * x), 2.0 * inv_sqrt_pi * dawson(x)};
        }
        throw std::domain_error("faddeeva_w: Im z must be >= 0");
    }
    if (std::norm(z) >= 256.0)
        return w_continued_fraction(z);
    return w_trapezoid(z);
}

// Rybicki-style sampled-Gaussian sum; error O(exp(-(pi/2h)^2)) with the
// exponentially small terms dropped.
double dawson(double x) {
    if (x < 0.0)
        return -dawson(-x);
    if (x > 8.0) {
        // Asymptotic series 1/(2x) + 1/(4x^3) + 3/(8x^5) + ...
        const double ix2 = 1.0 / (x * x);
        return (0.5 / x) * (1.0 + 0.5 * ix2 * (1.0 + 1.5 * ix2 * (1.0 + 2.5 * ix2)));
    }
    const double h = 0.2;
    const int n0 = 2 * static_cast<int>(0.5 * x / h) + 1; // odd node nearest x/h
    double sum = 0.0;
    for (int k = -35; k <= 35; ++k) {
        const int n = n0 + 2 * k; // odd offsets only
        const double d = x - n * h;
        sum += std::exp(-d * d) / n;
    }
    return inv_sqrt_pi * sum;
}

cdouble scaled_erf(double u, double c) {
    if (u < 0.0)
        return -std::conj(scaled_erf(-u, c));
    if (u == 0.0)
        return {0.0, 2.0 * inv_sqrt_pi * dawson(c)};
    const cdouble w = faddeeva_w(cdouble(-c, u));
    const double phase = -2.0 * u * c;
    const cdouble rot(std::cos(phase), std::sin(phase));
    return std::exp(-c * c) - std::exp(-u * u) * rot * w;
}

cdouble window_fourier(double a, double x1, double x2, double omega) {
    if (!(a > 0.0))
        throw std::domain_error("window_fourier: envelope exponent must be > 0");
    const double s = std::sqrt(a);
    const double c = 0.5 * omega / s;
    const cdouble diff = scaled_erf(s * x2, c) - scaled_erf(s * x1, c);
    return (0.5 * std::sqrt(local_pi) / s) * diff;
}

double cos_window(double a, double half_width, double omega) {
    if (!(a > 0.0) || !(half_width > 0.0))
        throw std::domain_error("cos_window: a and half_width must be > 0");
    const double s = std::sqrt(a);
    const double c = 0.5 * omega / s;
    return (std::sqrt(local_pi) / s) * scaled_erf(s * half_width, c).real();
}

} // namespace vacuumprobe::numerics
