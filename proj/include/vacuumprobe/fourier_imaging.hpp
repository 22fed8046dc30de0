#ifndef VACUUMPROBE_FOURIER_IMAGING_HPP
#define VACUUMPROBE_FOURIER_IMAGING_HPP

// Forward model of phase-contrast imaging on the focal plane: a Gaussian
// probe carrying a rectangular region of constant extra phase delta is
// Fourier transformed by the final lens. The focal intensity splits into
// a signal coefficient C_sig (truncated-Gaussian transform), a pedestal
// C_bkg (Gaussian transform), and the interference term
//
//   |psi|^2 = (A0/(f lambda))^2 { 2 C_sig (C_sig - C_bkg)(1 - cos d) + C_bkg^2 }
//
// with d = delta + offset_phase. Lengths in um, photon counts absolute.

#include <string>
#include <vector>

namespace vacuumprobe::imaging {

struct RectRegion {
    double half_width_um = 1.0;  // mu, along x
    double half_height_um = 1.0; // nu, along y
    double center_x_um = 0.0;
    double center_y_um = 0.0;

    RectRegion() = default;
    RectRegion(double mu, double nu, double cx = 0.0, double cy = 0.0);
    bool centered() const { return center_x_um == 0.0 && center_y_um == 0.0; }
};

struct ProbeProfile {
    double amplitude = 1.0;      // A0, sqrt(photons)/um
    double envelope_a = 1.0;     // field exponent 1/w^2, um^-2
    double wavelength_um = 0.8;
    double focal_length_m = 5.0;
    double offset_phase = 0.0;   // optional pi/2 plate on the phase region

    // Amplitude normalized so the transverse photon integral equals the
    // pulse photon count: A0^2 pi/(2a) = N.
    static ProbeProfile from_pulse(double pulse_energy_J, double wavelength_um,
                                   double waist_um, double focal_length_m,
                                   double offset_phase = 0.0);

    double photons() const;
    double focal_length_um() const { return focal_length_m * 1e6; }
    // Spatial frequency per focal-plane um: omega = 2 pi x / (f lambda).
    double freq_per_um() const;
    // Sigma of the pedestal photon distribution on the focal plane.
    double pedestal_sigma_um() const;
    // Peak input-plane fluence E/(2 pi w^2) in photons/um^2 (reporting
    // convention; the on-axis density of the normalized profile is 4x).
    double peak_input_fluence_per_um2() const;
};

// (sin(mu wx)/(mu wx))^2 (sin(nu wy)/(nu wy))^2, the slit/wire pattern.
double slit_fraunhofer(double mu_um, double nu_um, double omega_x, double omega_y);

// C_sig = int_{-mu}^{mu} e^{-a x^2} cos(wx x) dx * (same in y), um^2.
double c_sig(double omega_x, double omega_y, double mu_um, double nu_um, double envelope_a);

// C_bkg = (pi/a) exp(-(wx^2+wy^2)/(4a)), um^2.
double c_bkg(double omega_x, double omega_y, double envelope_a);

// Focal-plane photon density (photons/um^2) at spatial frequency
// (wx, wy) for a centered phase region.
double focal_intensity(double omega_x, double omega_y, double delta,
                       const ProbeProfile& profile, const RectRegion& region);

struct GridSpec {
    double pitch_um = 50.0;
    int nx = 401;
    int ny = 401;
};

enum class Provenance { with_signal, pedestal_only };

struct FocalPlaneImage {
    GridSpec grid;
    double delta = 0.0;
    double offset_phase = 0.0;
    Provenance provenance = Provenance::pedestal_only;
    bool coarse_grid_warning = false; // pitch > pedestal sigma
    double pedestal_sigma_um = 0.0;
    std::vector<double> photons; // row-major [iy][ix], photons per pixel

    double pixel_x_um(int ix) const { return (ix - 0.5 * (grid.nx - 1)) * grid.pitch_um; }
    double pixel_y_um(int iy) const { return (iy - 0.5 * (grid.ny - 1)) * grid.pitch_um; }
    double at(int ix, int iy) const { return photons[static_cast<std::size_t>(iy) * grid.nx + ix]; }
    double total() const;
};

// Photon counts integrated per pixel (8-point Gauss-Legendre per axis,
// exact for the separable integrand pieces up to polynomial degree 15).
// A pitch coarser than the pedestal sigma under-resolves the focal spot
// and sets coarse_grid_warning.
FocalPlaneImage render_focal_image(const ProbeProfile& profile, const RectRegion& region,
                                   double delta, const GridSpec& grid, unsigned threads = 1);

enum class Axis { x, y };

// Photons per pixel along the row/column through the origin. Requires a
// grid with an on-axis row (odd pixel counts).
std::vector<std::pair<double, double>> pixel_line_profile(const FocalPlaneImage& image, Axis axis);

// Focal-plane photons inside |x| <= half_x, |y| <= half_y (adaptive).
double photons_in_box(const ProbeProfile& profile, const RectRegion& region, double delta,
                      double half_x_um, double half_y_um);

// Focal-plane photons over the whole plane, each 1D factor extended
// until its tail contributes less than rel_cut. Compared against the
// input-plane photon integral this is the energy-conservation check.
double total_photons_numeric(const ProbeProfile& profile, const RectRegion& region,
                             double delta, double rel_cut = 1e-6);

} // namespace vacuumprobe::imaging

#endif
