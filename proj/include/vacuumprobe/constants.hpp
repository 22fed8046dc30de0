#ifndef VACUUMPROBE_CONSTANTS_HPP
#define VACUUMPROBE_CONSTANTS_HPP

// Physical constants (CODATA 2018) and the unit conversions used by the
// optics pipeline (SI: um, J, fs) and the resonance pipeline (natural
// units, eV). Everything here is constexpr and immutable.

#include <numbers>
#include <stdexcept>
#include <string>

namespace vacuumprobe::constants {

inline constexpr double pi = std::numbers::pi_v<double>;

inline constexpr double fine_structure_alpha = 7.2973525693e-3;
inline constexpr double electron_rest_energy_eV = 510998.95000;   // m_e c^2
inline constexpr double classical_electron_radius_m = 2.8179403262e-15;
inline constexpr double classical_electron_radius_cm = classical_electron_radius_m * 1e2;
inline constexpr double speed_of_light_m_s = 299792458.0;          // exact
inline constexpr double elementary_charge_C = 1.602176634e-19;     // exact
inline constexpr double planck_h_Js = 6.62607015e-34;              // exact
inline constexpr double hbar_Js = planck_h_Js / (2.0 * pi);
inline constexpr double hbar_eVs = hbar_Js / elementary_charge_C;
inline constexpr double boltzmann_J_K = 1.380649e-23;              // exact
inline constexpr double vacuum_permittivity_F_m = 8.8541878128e-12;
inline constexpr double electron_mass_kg = 9.1093837015e-31;

// hbar*c in the two flavours the formulas want.
inline constexpr double hbar_c_eV_m = hbar_eVs * speed_of_light_m_s;       // ~1.9733e-7
inline constexpr double hbar_c_eV_nm = hbar_c_eV_m * 1e9;                  // 197.327
inline constexpr double hc_eV_nm = 2.0 * pi * hbar_c_eV_nm;                // 1239.84

// Reduced Planck mass, from 8*pi*G = hbar*c / M^2. The quoted coupling
// scale "M ~ 1e27 eV" in sensitivity scans is a run parameter, not this.
inline constexpr double reduced_planck_mass_eV = 2.435323e27;

// Compton energy density m_e^4 c^5 / hbar^3 = (m_e c^2)^4 / (hbar c)^3,
// ~1.42e24 J/m^3. Normalizes field energy density in the vacuum response.
inline constexpr double electron_rest_energy_J = electron_rest_energy_eV * elementary_charge_C;
inline constexpr double hbar_c_J_m = hbar_c_eV_m * elementary_charge_C;
inline constexpr double compton_energy_density_J_m3 =
    (electron_rest_energy_J * electron_rest_energy_J * electron_rest_energy_J * electron_rest_energy_J) /
    (hbar_c_J_m * hbar_c_J_m * hbar_c_J_m);

// Aggregate view for code that wants one handle on the whole set.
struct PhysicalConstants {
    double fine_structure_alpha = constants::fine_structure_alpha;
    double electron_rest_energy_eV = constants::electron_rest_energy_eV;
    double classical_electron_radius_cm = constants::classical_electron_radius_cm;
    double hbar_c_eV_m = constants::hbar_c_eV_m;
    double speed_of_light_m_s = constants::speed_of_light_m_s;
    double planck_mass_eV = constants::reduced_planck_mass_eV;
    double compton_energy_density_J_m3 = constants::compton_energy_density_J_m3;
};

inline constexpr PhysicalConstants physical_constants{};

// E = 2*pi*hbar*c / lambda, photon energy in eV for a wavelength in metres.
inline double photon_energy_from_wavelength(double lambda_m) {
    if (!(lambda_m > 0.0))
        throw std::domain_error("photon_energy_from_wavelength: wavelength must be > 0");
    return hc_eV_nm / (lambda_m * 1e9);
}

inline double photon_energy_from_wavelength_um(double lambda_um) {
    return photon_energy_from_wavelength(lambda_um * 1e-6);
}

// Photons per pulse of energy E (joule) at the given wavelength.
inline double photons_per_pulse(double pulse_energy_J, double lambda_m) {
    const double e_photon_J = photon_energy_from_wavelength(lambda_m) * elementary_charge_C;
    return pulse_energy_J / e_photon_J;
}

enum class Dimension { Energy, Length, Time, CrossSection };

// Natural-unit value (powers of eV) -> SI. Energy: eV -> J. Length:
// eV^-1 -> m. Time: eV^-1 -> s. CrossSection: eV^-2 -> m^2.
inline double natural_to_si(double value, Dimension dim) {
    switch (dim) {
        case Dimension::Energy: return value * elementary_charge_C;
        case Dimension::Length: return value * hbar_c_eV_m;
        case Dimension::Time: return value * hbar_eVs;
        case Dimension::CrossSection: return value * hbar_c_eV_m * hbar_c_eV_m;
    }
    throw std::domain_error("natural_to_si: unknown dimension");
}

inline double si_to_natural(double value, Dimension dim) {
    switch (dim) {
        case Dimension::Energy: return value / elementary_charge_C;
        case Dimension::Length: return value / hbar_c_eV_m;
        case Dimension::Time: return value / hbar_eVs;
        case Dimension::CrossSection: return value / (hbar_c_eV_m * hbar_c_eV_m);
    }
    throw std::domain_error("si_to_natural: unknown dimension");
}

inline constexpr double barn_m2 = 1e-28;

inline double cross_section_eV2_to_barn(double sigma_inv_eV2) {
    return natural_to_si(sigma_inv_eV2, Dimension::CrossSection) / barn_m2;
}

// um^2 <-> natural eV^-2, for gluing the luminosity (per um^2) to cross
// sections computed in natural units.
inline constexpr double um_per_inv_eV = hbar_c_eV_m * 1e6;
inline constexpr double um2_per_inv_eV2 = um_per_inv_eV * um_per_inv_eV;

} // namespace vacuumprobe::constants

#endif
