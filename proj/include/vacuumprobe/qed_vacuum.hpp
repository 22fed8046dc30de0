#ifndef VACUUMPROBE_QED_VACUUM_HPP
#define VACUUMPROBE_QED_VACUUM_HPP

// One-loop vacuum response of intense light on light: phase velocities,
// the refractive-index shift seen by a probe crossing a focused target
// pulse, elastic photon-photon cross sections, and the residual-gas
// plasma background that competes with the vacuum signal.

namespace vacuumprobe::qed {

// Polarization combination of probe vs target; the weights 4 and 7 are
// the two invariants of the one-loop effective Lagrangian.
enum class PolarizationCombo { parallel, perpendicular };

inline double zeta(PolarizationCombo combo) {
    return combo == PolarizationCombo::parallel ? 4.0 : 7.0;
}

// Vacuum response at a given target energy density.
struct VacuumResponse {
    PolarizationCombo polarization_combo = PolarizationCombo::perpendicular;
    double energy_density_J_um3 = 0.0;
    double refractive_shift = 0.0;
};

VacuumResponse vacuum_response(PolarizationCombo combo, double energy_density_J_um3);

// N0 = (2/45) alpha^2 hbar^3 / (m_e^4 c^5) in um^3/J, the conversion
// from field energy density to refractive shift (~1.67e-12).
double n0_constant_um3_per_J();

// Lorentz-invariant field combination z_k/k^2 = eps^2 (1 + k.n)^2 for a
// crossed-field target; k.n = +1 along the target's (B x E) direction.
double zk_over_k2(double energy_density, double k_dot_n);

// Index shift 1 - v/c = (coef/45)(alpha^2 hbar^3 / m_e^4 c^5) u with
// coef = 8 (parallel) or 14 (perpendicular); u in J/m^3. Exposed
// directly so the 7:4 birefringence ratio carries no cancellation.
double vacuum_index_shift(PolarizationCombo combo, double energy_density_J_m3);

// Phase velocity v/c = 1 - vacuum_index_shift(...).
double phase_velocity_ratio(PolarizationCombo combo, double energy_density_J_m3);

// dn = zeta N0 (1 - cos theta) E_t / (pi w0t^2 c tau_t).
double refractive_shift(PolarizationCombo combo, double theta_rad, double pulse_energy_J,
                        double target_waist_um, double target_duration_fs);

// Embedded phase: delta = (2 pi / lambda_p) dn * c tau_t * weight; the
// optical path c tau_t cancels, leaving
// delta = (2 pi/lambda_p) zeta N0 (1-cos theta) E_t/(pi w0t^2) weight.
double phase_shift(double probe_wavelength_um, PolarizationCombo combo, double theta_rad,
                   double pulse_energy_J, double target_waist_um, double weight = 1.0);

// Elastic light-by-light cross section in the CMS,
// sigma = (973/10125 pi) alpha^2 r_e^2 (omega / m_e c^2)^6, in barn.
double qed_elastic_cross_section_barn(double omega_cms_eV);

// Small-angle elastic background scale (alpha^2/m_e^4)^2 w^6 theta^4 in
// natural units (eV^-2).
double qed_forward_background_inv_eV2(double omega_eV, double vartheta_rad);

// Static plasma index N = sqrt(1 - (n_e/n_cr)/gamma). Intensity, when
// given, sets gamma = sqrt(1 + a0^2) with
// a0 = 0.85e-9 lambda[um] sqrt(I0[W/cm^2]).
double plasma_refractive_index(double n_e_cm3, double lambda_um, double intensity_W_cm2 = 0.0);

// Index shift 1 - N, safe against cancellation at low density.
double plasma_index_shift(double n_e_cm3, double lambda_um, double intensity_W_cm2 = 0.0);

// Critical density where the plasma frequency matches the laser, in
// cm^-3 (~1.12e21 / lambda_um^2), derived from constants.
double critical_density_cm3(double lambda_um);

// Free-electron density of a singly ionized ideal gas at pressure P and
// temperature T, scaled by an effective charge state.
double electron_density_from_pressure_cm3(double pressure_Pa, double temperature_K = 300.0,
                                          double z_eff = 1.0);

} // namespace vacuumprobe::qed

#include "vacuumprobe/gaussian_beam.hpp"

namespace vacuumprobe::qed {

// Target-probe crossing: the focused target writes a phase stripe into
// the probe while the two pulses overlap. Valid only while the target
// stays within its Rayleigh range (c tau_t < zR_t) and the probe pulse
// outlasts the crossing (tau_t < tau_p).
struct CrossingGeometry {
    double crossing_angle_rad = 0.0;
    optics::GaussianBeam target;
    optics::GaussianBeam probe;
    double transverse_weight = 1.0; // phi_t(x_p, y_p), defaults to flat

    CrossingGeometry(double theta, const optics::GaussianBeam& target_,
                     const optics::GaussianBeam& probe_, double weight = 1.0);

    double refractive_shift(PolarizationCombo combo) const;
    double embedded_phase_shift(PolarizationCombo combo) const;
};

} // namespace vacuumprobe::qed

#endif
