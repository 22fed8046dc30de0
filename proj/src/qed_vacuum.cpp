#include "vacuumprobe/qed_vacuum.hpp"
#include "vacuumprobe/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace vacuumprobe::qed {

namespace k = vacuumprobe::constants;

double n0_constant_um3_per_J() {
    // (2/45) alpha^2 / (Compton energy density), converted m^3 -> um^3.
    const double a2 = k::fine_structure_alpha * k::fine_structure_alpha;
    return (2.0 / 45.0) * a2 / k::compton_energy_density_J_m3 * 1e18;
}

double zk_over_k2(double energy_density, double k_dot_n) {
    const double f = 1.0 + k_dot_n;
    return energy_density * f * f;
}

double vacuum_index_shift(PolarizationCombo combo, double energy_density_J_m3) {
    const double coef = combo == PolarizationCombo::parallel ? 8.0 : 14.0;
    const double a2 = k::fine_structure_alpha * k::fine_structure_alpha;
    return (coef / 45.0) * a2 * energy_density_J_m3 / k::compton_energy_density_J_m3;
}

double phase_velocity_ratio(PolarizationCombo combo, double energy_density_J_m3) {
    return 1.0 - vacuum_index_shift(combo, energy_density_J_m3);
}

double refractive_shift(PolarizationCombo combo, double theta_rad, double pulse_energy_J,
                        double target_waist_um, double target_duration_fs) {
    if (!(pulse_energy_J >= 0.0))
        throw std::domain_error("refractive_shift: pulse energy must be >= 0");
    if (!(target_waist_um > 0.0) || !(target_duration_fs > 0.0))
        throw std::domain_error("refractive_shift: waist and duration must be > 0");
    const double c_tau_um = k::speed_of_light_m_s * target_duration_fs * 1e-15 * 1e6;
    const double volume_um3 = k::pi * target_waist_um * target_waist_um * c_tau_um;
    const double geom = 1.0 - std::cos(theta_rad);
    return zeta(combo) * n0_constant_um3_per_J() * geom * pulse_energy_J / volume_um3;
}

double phase_shift(double probe_wavelength_um, PolarizationCombo combo, double theta_rad,
                   double pulse_energy_J, double target_waist_um, double weight) {
    if (!(probe_wavelength_um > 0.0))
        throw std::domain_error("phase_shift: probe wavelength must be > 0");
    if (!(target_waist_um > 0.0))
        throw std::domain_error("phase_shift: target waist must be > 0");
    const double geom = 1.0 - std::cos(theta_rad);
    const double area_um2 = k::pi * target_waist_um * target_waist_um;
    return (2.0 * k::pi / probe_wavelength_um) * zeta(combo) * n0_constant_um3_per_J() *
           geom * pulse_energy_J / area_um2 * weight;
}

double qed_elastic_cross_section_barn(double omega_cms_eV) {
    if (!(omega_cms_eV > 0.0))
        throw std::domain_error("qed_elastic_cross_section: omega must be > 0");
    const double a2 = k::fine_structure_alpha * k::fine_structure_alpha;
    const double re_cm = k::classical_electron_radius_cm;
    const double x = omega_cms_eV / k::electron_rest_energy_eV;
    const double x6 = x * x * x * x * x * x;
    const double sigma_cm2 = (973.0 / (10125.0 * k::pi)) * a2 * re_cm * re_cm * x6;
    return sigma_cm2 / 1e-24; // 1 b = 1e-24 cm^2
}

double qed_forward_background_inv_eV2(double omega_eV, double vartheta_rad) {
    if (!(omega_eV > 0.0) || vartheta_rad < 0.0)
        throw std::domain_error("qed_forward_background: need omega > 0, vartheta >= 0");
    const double a2 = k::fine_structure_alpha * k::fine_structure_alpha;
    const double me = k::electron_rest_energy_eV;
    const double me4 = me * me * me * me;
    const double c = a2 / me4; // eV^-4
    const double w6 = std::pow(omega_eV, 6);
    const double t4 = std::pow(vartheta_rad, 4);
    return c * c * w6 * t4;
}

double critical_density_cm3(double lambda_um) {
    if (!(lambda_um > 0.0))
        throw std::domain_error("critical_density: lambda must be > 0");
    // n_cr = eps0 m_e (2 pi c / lambda)^2 / e^2
    const double lambda_m = lambda_um * 1e-6;
    const double omega0 = 2.0 * k::pi * k::speed_of_light_m_s / lambda_m;
    const double n_m3 = k::vacuum_permittivity_F_m * k::electron_mass_kg * omega0 * omega0 /
                        (k::elementary_charge_C * k::elementary_charge_C);
    return n_m3 * 1e-6;
}

namespace {
double lorentz_gamma(double lambda_um, double intensity_W_cm2) {
    if (intensity_W_cm2 <= 0.0)
        return 1.0;
    const double a0 = 0.85e-9 * lambda_um * std::sqrt(intensity_W_cm2);
    return std::sqrt(1.0 + a0 * a0);
}
} // namespace

double plasma_refractive_index(double n_e_cm3, double lambda_um, double intensity_W_cm2) {
    if (n_e_cm3 < 0.0)
        throw std::domain_error("plasma_refractive_index: n_e must be >= 0");
    const double gamma = lorentz_gamma(lambda_um, intensity_W_cm2);
    const double ratio = n_e_cm3 / critical_density_cm3(lambda_um) / gamma;
    if (ratio > 1.0)
        throw std::domain_error("plasma_refractive_index: evanescent regime (n_e > gamma n_cr)");
    return std::sqrt(1.0 - ratio);
}

double plasma_index_shift(double n_e_cm3, double lambda_um, double intensity_W_cm2) {
    const double gamma = lorentz_gamma(lambda_um, intensity_W_cm2);
    const double ratio = n_e_cm3 / critical_density_cm3(lambda_um) / gamma;
    if (ratio > 1.0)
        throw std::domain_error("plasma_index_shift: evanescent regime (n_e > gamma n_cr)");
    // 1 - sqrt(1-x) = x / (1 + sqrt(1-x))
    return ratio / (1.0 + std::sqrt(1.0 - ratio));
}

double electron_density_from_pressure_cm3(double pressure_Pa, double temperature_K,
                                          double z_eff) {
    if (pressure_Pa < 0.0 || !(temperature_K > 0.0) || z_eff < 0.0)
        throw std::domain_error("electron_density_from_pressure: bad inputs");
    const double n_m3 = pressure_Pa / (k::boltzmann_J_K * temperature_K);
    return z_eff * n_m3 * 1e-6;
}

VacuumResponse vacuum_response(PolarizationCombo combo, double energy_density_J_um3) {
    if (energy_density_J_um3 < 0.0)
        throw std::domain_error("vacuum_response: energy density must be >= 0");
    VacuumResponse r;
    r.polarization_combo = combo;
    r.energy_density_J_um3 = energy_density_J_um3;
    // za N0 (J/um^3 flavour of the phase-velocity shift), linear in u.
    r.refractive_shift = zeta(combo) * n0_constant_um3_per_J() * energy_density_J_um3;
    return r;
}

CrossingGeometry::CrossingGeometry(double theta, const optics::GaussianBeam& target_,
                                   const optics::GaussianBeam& probe_, double weight)
    : crossing_angle_rad(theta), target(target_), probe(probe_), transverse_weight(weight) {
    if (theta < 0.0 || theta > k::pi)
        throw std::invalid_argument("CrossingGeometry: crossing angle outside [0, pi]");
    if (weight < 0.0 || weight > 1.0)
        throw std::invalid_argument("CrossingGeometry: weight outside [0, 1]");
    const double c_tau_um = k::speed_of_light_m_s * target.duration_fs * 1e-15 * 1e6;
    if (!(c_tau_um < target.rayleigh_um))
        throw std::invalid_argument("CrossingGeometry: c tau_t must stay below the target zR");
    if (!(target.duration_fs < probe.duration_fs))
        throw std::invalid_argument("CrossingGeometry: target pulse must be shorter than probe");
}

double CrossingGeometry::refractive_shift(PolarizationCombo combo) const {
    return qed::refractive_shift(combo, crossing_angle_rad, target.pulse_energy_J,
                                 target.waist_um, target.duration_fs);
}

double CrossingGeometry::embedded_phase_shift(PolarizationCombo combo) const {
    return qed::phase_shift(probe.wavelength_um, combo, crossing_angle_rad,
                            target.pulse_energy_J, target.waist_um, transverse_weight);
}

} // namespace vacuumprobe::qed
