#include "vacuumprobe/gaussian_beam.hpp"
#include "vacuumprobe/constants.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vacuumprobe::optics {

using constants::pi;

GaussianBeam::GaussianBeam(double wavelength_um_, double pulse_energy_J_, double duration_fs_,
                           double waist_um_, Polarization pol)
    : wavelength_um(wavelength_um_),
      pulse_energy_J(pulse_energy_J_),
      duration_fs(duration_fs_),
      waist_um(waist_um_),
      polarization(pol) {
    if (!(wavelength_um > 0.0) || !(waist_um > 0.0))
        throw std::invalid_argument("GaussianBeam: wavelength and waist must be > 0");
    if (pulse_energy_J < 0.0 || duration_fs < 0.0)
        throw std::invalid_argument("GaussianBeam: energy and duration must be >= 0");
    rayleigh_um = pi * waist_um * waist_um / wavelength_um;
}

double GaussianBeam::wavenumber_um() const { return 2.0 * pi / wavelength_um; }

double GaussianBeam::photons() const {
    return constants::photons_per_pulse(pulse_energy_J, wavelength_um * 1e-6);
}

double waist_at(double z_um, const GaussianBeam& beam) {
    const double zr = z_um / beam.rayleigh_um;
    return beam.waist_um * std::sqrt(1.0 + zr * zr);
}

double inverse_curvature_at(double z_um, const GaussianBeam& beam) {
    return z_um / (z_um * z_um + beam.rayleigh_um * beam.rayleigh_um);
}

double curvature_at(double z_um, const GaussianBeam& beam) {
    if (z_um == 0.0)
        return std::numeric_limits<double>::infinity();
    return 1.0 / inverse_curvature_at(z_um, beam);
}

double gouy_at(double z_um, const GaussianBeam& beam) {
    return std::atan(z_um / beam.rayleigh_um);
}

std::complex<double> field_amplitude(double x_um, double y_um, double z_um,
                                     const GaussianBeam& beam) {
    const double w = waist_at(z_um, beam);
    const double r2 = x_um * x_um + y_um * y_um;
    const double k = beam.wavenumber_um();
    // i k / (2R) written with the inverse curvature so the waist needs no
    // special case.
    const double inv_r = inverse_curvature_at(z_um, beam);
    const double phase = -(k * z_um - gouy_at(z_um, beam)) - 0.5 * k * inv_r * r2;
    const double envelope = (beam.waist_um / w) * std::exp(-r2 / (w * w));
    return std::polar(envelope, phase);
}

FocusingSetup waist_from_lens(double lens_diameter_m, double focal_length_m,
                              double wavelength_um) {
    if (!(lens_diameter_m > 0.0) || !(focal_length_m > 0.0) || !(wavelength_um > 0.0))
        throw std::domain_error("waist_from_lens: d, f, lambda must be > 0");

    const double lambda_m = wavelength_um * 1e-6;
    const double half_d = 0.5 * lens_diameter_m;

    // Substituting zR = pi w0^2 / lambda into the lens relation and
    // writing s = w0^2, beta = f lambda / pi gives the monotone cubic
    //   s^3 + beta^2 s - (d/2)^2 beta^2 = 0,
    // whose unique positive root is the self-consistent waist. Newton
    // from the small-f seed (d f lambda / 2 pi)^(1/3) squared.
    const double beta = focal_length_m * lambda_m / pi;
    const double rhs0 = half_d * half_d * beta * beta;
    double sq = std::cbrt(rhs0); // w0^2 iterate
    int iterations = 0;
    for (; iterations < 200; ++iterations) {
        const double h = sq * sq * sq + beta * beta * sq - rhs0;
        const double hp = 3.0 * sq * sq + beta * beta;
        const double step = h / hp;
        sq -= step;
        if (std::abs(step) < 1e-16 * sq)
            break;
    }
    const double w0 = std::sqrt(sq);
    if (!(w0 < half_d))
        throw std::domain_error("waist_from_lens: no solution with w0 < d/2");

    FocusingSetup s;
    s.lens_diameter_m = lens_diameter_m;
    s.focal_length_m = focal_length_m;
    s.wavelength_um = wavelength_um;
    s.waist_m = w0;
    s.rayleigh_m = pi * w0 * w0 / lambda_m;
    s.angular_uncertainty = lambda_m / s.rayleigh_m; // = (lambda/w0)^2 / pi
    return s;
}

} // namespace vacuumprobe::optics
