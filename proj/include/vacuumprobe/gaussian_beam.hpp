#ifndef VACUUMPROBE_GAUSSIAN_BEAM_HPP
#define VACUUMPROBE_GAUSSIAN_BEAM_HPP

// Gaussian beam propagation in vacuum and the lens-to-waist geometry of
// a focusing setup. Optics works in um / J / fs.

#include <complex>

namespace vacuumprobe::optics {

enum class Polarization { state1, state2 };

struct GaussianBeam {
    double wavelength_um = 0.8;
    double pulse_energy_J = 0.0;
    double duration_fs = 0.0;
    double waist_um = 1.0;
    Polarization polarization = Polarization::state1;
    double rayleigh_um = 0.0; // pi w0^2 / lambda, derived

    GaussianBeam(double wavelength_um_, double pulse_energy_J_, double duration_fs_,
                 double waist_um_, Polarization pol = Polarization::state1);

    // Focusing below the diffraction limit (w0 < lambda) is allowed for
    // parametric sweeps but flagged.
    bool below_diffraction_limit() const { return waist_um < wavelength_um; }

    double wavenumber_um() const; // 2 pi / lambda
    double photons() const;       // pulse energy / photon energy
};

// w(z) = w0 sqrt(1 + z^2/zR^2)
double waist_at(double z_um, const GaussianBeam& beam);

// R(z) = z (1 + zR^2/z^2); +inf at the waist (flat wavefront).
double curvature_at(double z_um, const GaussianBeam& beam);

// 1/R(z) = z / (z^2 + zR^2), regular everywhere.
double inverse_curvature_at(double z_um, const GaussianBeam& beam);

// Gouy phase eta(z) = atan(z/zR), zero at the waist.
double gouy_at(double z_um, const GaussianBeam& beam);

// (w0/w) exp{-i[kz - eta]} exp{-r^2 (1/w^2 + i k/(2R))}, normalized to
// modulus 1, phase 0 at the origin.
std::complex<double> field_amplitude(double x_um, double y_um, double z_um,
                                     const GaussianBeam& beam);

struct FocusingSetup {
    double lens_diameter_m = 0.0;
    double focal_length_m = 0.0;
    double wavelength_um = 0.0;
    double waist_m = 0.0;            // self-consistent solution
    double rayleigh_m = 0.0;
    double angular_uncertainty = 0.0; // lambda / zR
};

// Solves w0 = (d/2) (f/zR) / sqrt(1 + (f/zR)^2) jointly with
// zR = pi w0^2 / lambda. The right-hand side is strictly decreasing in
// w0 so the root is unique; bisection converges to <1e-12 relative.
FocusingSetup waist_from_lens(double lens_diameter_m, double focal_length_m,
                              double wavelength_um);

} // namespace vacuumprobe::optics

#endif
