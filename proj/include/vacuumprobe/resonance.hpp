#ifndef VACUUMPROBE_RESONANCE_HPP
#define VACUUMPROBE_RESONANCE_HPP

// Sensitivity pipeline for light scalar/pseudoscalar exchange between
// quasi-parallel photons: exact 2->2 kinematics at incident half-angle
// vartheta, Breit-Wigner resonance in chi = w^2 - w_r^2, averaging over
// the diffraction-limited angular spread, single-pulse luminosity of a
// focused beam, yield and mass-coupling reach. Natural units (eV)
// internally; SI only at the boundaries.

#include <array>

namespace vacuumprobe::resonance {

enum class FieldKind { scalar, pseudoscalar };

struct LightField {
    FieldKind kind = FieldKind::scalar;
    double mass_eV = 0.0;
    double coupling_g = 0.0;
    double mass_scale_M_eV = 0.0;

    LightField(FieldKind kind_, double mass_eV_, double coupling_g_, double mass_scale_M_eV_);
    double gm_over_M() const { return coupling_g * mass_eV / mass_scale_M_eV; }
};

// Two-photon decay rate Gamma = (g/M)^2 m^3 / (16 pi), eV.
double decay_rate_eV(const LightField& field);

// Resonant incident half-angle from m = 2 vartheta w (small angle).
double resonance_angle(double mass_eV, double omega_eV);

// chi(vartheta) = w_opt^2 (1 - (vartheta_r/vartheta)^-2 ... ) written as
// w_opt^2 - m^2/(4 vartheta^2); zero exactly at vartheta_r.
double chi_of_vartheta(double omega_opt_eV, double mass_eV, double vartheta);

struct ResonanceState {
    double omega_r_eV = 0.0;   // m / (2 sin vartheta)
    double chi_eV2 = 0.0;      // w^2 - w_r^2
    double width_a_eV2 = 0.0;  // m Gamma / (1 - cos 2 vartheta)
    double vartheta_r = 0.0;
    double epsilon = 0.0;      // vartheta / vartheta_r

    static ResonanceState at(double omega_eV, double vartheta, const LightField& field);
};

// Sign of the invariant amplitude for the given linear-polarization
// channel (indices 1/2; in-pair then out-pair), 0 if forbidden. The
// scalar and pseudoscalar non-zero channel sets are disjoint.
int amplitude_selection(FieldKind kind, int in1, int in2, int out1, int out2);

// |M|^2 = (2 pi)^2 a^2 / (chi^2 + a^2), peaking at (2 pi)^2 on resonance.
double resonant_amplitude_squared(double omega_eV, double vartheta, const LightField& field);

// int_{chi-}^{chi+} a^2/(chi^2+a^2) dchi = a [atan(chi/a)]; infinities allowed.
double bw_integral(double chi_minus, double chi_plus, double a);

enum class AverageMethod { numeric, closed_form };

struct AveragedAmplitude {
    double value = 0.0;
    bool within_acceptance = true; // resonance angle inside the angular spread
};

// <|M|^2> over a top-hat angular spread rho = 1/dtheta on (0, dtheta]:
//
//   closed form:  (2pi)^2/(2 w^2) (th_r/dth) a pi            (th_r <= dth)
//   numeric:      same prefactor times the weighted BW integral
//                 int (1 - (a/w^2) xi)^{-3/2} / (1+xi^2) dxi
//
// When the resonance lies outside the spread (th_r > dth) both methods
// return the off-peak tail estimate, M^-4 suppressed, flagged false.
AveragedAmplitude averaged_amplitude_squared(double omega_opt_eV, double vartheta_r,
                                             double delta_theta, double width_a_eV2,
                                             AverageMethod method);

struct CrossSection {
    double value_inv_eV2 = 0.0;
    bool within_acceptance = true;
};

// Angle-averaged differential cross section toward the upshifted photon,
// (pi/64) (2pi/lambda)^-2 (th_r/dth) (g m/M)^2 th_r^-4 with the photon
// wavelength taken at omega_opt. Outside the acceptance the sharp-cutoff
// tail suppression is applied and the flag cleared.
CrossSection differential_cross_section(double omega_opt_eV, double vartheta_r,
                                        double delta_theta, const LightField& field);

struct CollisionKinematics {
    double omega_eV = 0.0, vartheta = 0.0, theta3 = 0.0;
    double omega3_eV = 0.0, omega4_eV = 0.0, theta4 = 0.0;
    // 4-momenta (px, py, pz; E), metric (+,+,+,-).
    std::array<double, 4> p1{}, p2{}, p3{}, p4{};
};

double minkowski_dot(const std::array<double, 4>& a, const std::array<double, 4>& b);

// Energy-momentum conservation for photons incident at +-vartheta with
// the upshifted photon emitted at theta3 < vartheta.
CollisionKinematics solve_kinematics(double omega_eV, double vartheta, double theta3);

struct LuminositySetup {
    double n_photons = 0.0;     // average photons per pulse
    double tau_fs = 0.0;        // pulse duration
    double delta_t_fs = 0.0;    // interaction time scale, >= one light period
    double wavelength_um = 0.0;
    double focal_length_m = 0.0;
    double rayleigh_m = 0.0;
    double waist_m = 0.0;

    LuminositySetup(double n_photons_, double tau_fs_, double delta_t_fs_,
                    double wavelength_um_, double focal_length_m_, double rayleigh_m_,
                    double waist_m_);
};

struct LuminosityBreakdown {
    double dt_over_tau = 0.0;     // clamped at 1
    double n_interacting = 0.0;   // photons within the interaction window
    double bunches = 0.0;         // f / (c dt)
    double averaged_instant_per_um2 = 0.0;
    double effective_per_um2 = 0.0;
};

// L = (dt/tau) N^2 / (2 c tau lambda) * atan(f/zR), per um^2 per pulse.
LuminosityBreakdown effective_luminosity(const LuminositySetup& setup);

struct YieldResult {
    double yield_per_sr = 0.0; // per pulse
    bool within_acceptance = true;
    double luminosity_per_um2 = 0.0;
    double cross_section_inv_eV2 = 0.0;
    double width_a_eV2 = 0.0;
};

// dY/dOmega3 = L * <dsigma/dOmega3>, quadratic in the photon number.
YieldResult differential_yield(const LuminositySetup& setup, double omega_opt_eV,
                               double vartheta_r, double delta_theta, const LightField& field);

// Photon number per pulse for the target yield (the setup's n_photons is
// ignored); inverse of differential_yield at fixed geometry.
double required_photons(double target_yield_per_sr, const LuminositySetup& setup,
                        double omega_opt_eV, double vartheta_r, double delta_theta,
                        const LightField& field);

struct MassReach {
    double m_cut_eV = 0.0;  // heaviest mass with th_r inside the spread
    double m_min_eV = 0.0;  // aperture-limited lower bound on claimed mass
    double waist_m = 0.0;
    double delta_theta = 0.0;
    bool thin_lens_power_law = false; // f << zR closed form in force
};

// m_cut = 2 w dtheta with dtheta = lambda^2/(pi w0^2); in the f << zR
// regime w0 = (d f lambda / 2 pi)^(1/3) gives exact f^(-2/3) d^(-2/3)
// scaling, otherwise the self-consistent waist is used.
MassReach mass_reach(double omega_opt_eV, double lens_diameter_m, double focal_length_m,
                     double wavelength_um);

} // namespace vacuumprobe::resonance

#endif
