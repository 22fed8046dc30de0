#ifndef VACUUMPROBE_QUADRATURE_HPP
#define VACUUMPROBE_QUADRATURE_HPP

// Thin wrappers over boost.math quadrature: adaptive Gauss-Kronrod for
// the oracle-style integrals and a fixed 8-point Gauss-Legendre rule for
// per-pixel photon integration.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace vacuumprobe::numerics {

template <typename F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-12,
                          unsigned max_depth = 18) {
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        std::forward<F>(f), a, b, max_depth, rel_tol);
}

template <typename F>
double integrate_gl8(F&& f, double a, double b) {
    return boost::math::quadrature::gauss<double, 8>::integrate(std::forward<F>(f), a, b);
}

} // namespace vacuumprobe::numerics

#endif
