#include "vacuumprobe/resonance.hpp"

#include "vacuumprobe/constants.hpp"
#include "vacuumprobe/gaussian_beam.hpp"
#include "vacuumprobe/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vacuumprobe::resonance {

using constants::pi;
namespace num = vacuumprobe::numerics;

LightField::LightField(FieldKind kind_, double mass_eV_, double coupling_g_,
                       double mass_scale_M_eV_)
    : kind(kind_), mass_eV(mass_eV_), coupling_g(coupling_g_), mass_scale_M_eV(mass_scale_M_eV_) {
    if (!(mass_eV > 0.0) || !(mass_scale_M_eV > 0.0) || coupling_g < 0.0)
        throw std::invalid_argument("LightField: need m > 0, M > 0, g >= 0");
}

double decay_rate_eV(const LightField& field) {
    const double gm = field.coupling_g / field.mass_scale_M_eV;
    return gm * gm * field.mass_eV * field.mass_eV * field.mass_eV / (16.0 * pi);
}

double resonance_angle(double mass_eV, double omega_eV) {
    if (!(mass_eV > 0.0) || !(omega_eV > 0.0))
        throw std::domain_error("resonance_angle: need m > 0, omega > 0");
    return 0.5 * mass_eV / omega_eV;
}

double chi_of_vartheta(double omega_opt_eV, double mass_eV, double vartheta) {
    if (!(vartheta > 0.0))
        throw std::domain_error("chi_of_vartheta: vartheta must be > 0");
    return omega_opt_eV * omega_opt_eV - 0.25 * mass_eV * mass_eV / (vartheta * vartheta);
}

ResonanceState ResonanceState::at(double omega_eV, double vartheta, const LightField& field) {
    if (!(vartheta > 0.0) || vartheta > 0.5 * pi)
        throw std::domain_error("ResonanceState: vartheta must be in (0, pi/2]");
    ResonanceState s;
    const double sin_t = std::sin(vartheta);
    const double one_minus_cos2t = 2.0 * sin_t * sin_t;
    s.omega_r_eV = field.mass_eV / (2.0 * sin_t);
    s.chi_eV2 = omega_eV * omega_eV - s.omega_r_eV * s.omega_r_eV;
    s.width_a_eV2 = field.mass_eV * decay_rate_eV(field) / one_minus_cos2t;
    s.vartheta_r = resonance_angle(field.mass_eV, omega_eV);
    s.epsilon = vartheta / s.vartheta_r;
    return s;
}

int amplitude_selection(FieldKind kind, int in1, int in2, int out1, int out2) {
    for (int idx : {in1, in2, out1, out2})
        if (idx != 1 && idx != 2)
            throw std::domain_error("amplitude_selection: polarization indices are 1 or 2");
    const int code = in1 * 1000 + in2 * 100 + out1 * 10 + out2;
    if (kind == FieldKind::scalar) {
        switch (code) {
            case 1111: case 2222: return +1;
            case 1122: case 2211: return -1;
            default: return 0;
        }
    }
    switch (code) {
        case 1212: case 1221: return +1;
        case 2112: case 2121: return -1;
        default: return 0;
    }
}

double resonant_amplitude_squared(double omega_eV, double vartheta, const LightField& field) {
    const ResonanceState s = ResonanceState::at(omega_eV, vartheta, field);
    const double four_pi2 = 4.0 * pi * pi;
    const double a2 = s.width_a_eV2 * s.width_a_eV2;
    return four_pi2 * a2 / (s.chi_eV2 * s.chi_eV2 + a2);
}

double bw_integral(double chi_minus, double chi_plus, double a) {
    if (!(a > 0.0))
        throw std::domain_error("bw_integral: width must be > 0");
    if (!(chi_minus < chi_plus))
        throw std::domain_error("bw_integral: need chi_minus < chi_plus");
    auto bound = [&](double chi) {
        if (std::isinf(chi))
            return chi > 0 ? 0.5 * pi : -0.5 * pi;
        return std::atan(chi / a);
    };
    return a * (bound(chi_plus) - bound(chi_minus));
}

namespace {
// pi/2 + atan(x) without the saturation loss at large negative x, where
// the sum collapses to atan(-1/x) ~ -1/x below double resolution of pi/2.
double half_pi_plus_atan(double x) {
    if (x < 0.0)
        return std::atan(-1.0 / x);
    return 0.5 * pi + std::atan(x);
}
} // namespace

AveragedAmplitude averaged_amplitude_squared(double omega_opt_eV, double vartheta_r,
                                             double delta_theta, double width_a_eV2,
                                             AverageMethod method) {
    if (!(omega_opt_eV > 0.0) || !(vartheta_r > 0.0) || !(delta_theta > 0.0) ||
        !(width_a_eV2 > 0.0))
        throw std::domain_error("averaged_amplitude_squared: inputs must be > 0");

    const double w2 = omega_opt_eV * omega_opt_eV;
    const double a_tilde = width_a_eV2 / w2; // BW width in units of w^2
    const double ratio = vartheta_r / delta_theta;
    const double prefactor = 4.0 * pi * pi / (2.0 * w2) * ratio * width_a_eV2;
    const double xi_max = (1.0 - ratio * ratio) / a_tilde;

    AveragedAmplitude out;
    out.within_acceptance = delta_theta >= vartheta_r;

    if (!out.within_acceptance) {
        // Resonance outside the angular spread: only the far Lorentzian
        // tail is integrated, an M^-4 suppressed remnant.
        out.value = prefactor * half_pi_plus_atan(xi_max);
        return out;
    }

    if (method == AverageMethod::closed_form) {
        out.value = prefactor * pi;
        return out;
    }

    // Numeric average: the BW kernel of unit width times the phase-space
    // weight (1 - a_tilde xi)^{-3/2}. The kernel drops below 1e-16 of
    // its peak at |xi| = 1e8, which truncates the formally infinite
    // lower limit (and the upper one when xi_max is astronomically far).
    const double xi_cut = 1e8;
    const double upper = std::min(xi_max, xi_cut);
    auto kernel = [&](double xi) {
        return std::pow(1.0 - a_tilde * xi, -1.5) / (1.0 + xi * xi);
    };
    double integral = 0.0;
    const double inner = std::min(100.0, upper);
    integral += num::integrate_adaptive(kernel, -inner, inner, 1e-12);
    integral += num::integrate_adaptive(kernel, -xi_cut, -inner, 1e-12);
    if (upper > inner)
        integral += num::integrate_adaptive(kernel, inner, upper, 1e-12);
    out.value = prefactor * integral;
    return out;
}

CrossSection differential_cross_section(double omega_opt_eV, double vartheta_r,
                                        double delta_theta, const LightField& field) {
    if (!(omega_opt_eV > 0.0) || !(vartheta_r > 0.0) || !(delta_theta > 0.0))
        throw std::domain_error("differential_cross_section: inputs must be > 0");
    CrossSection out;
    out.within_acceptance = delta_theta >= vartheta_r;
    const double gmM = field.gm_over_M();
    const double inv_w2 = 1.0 / (omega_opt_eV * omega_opt_eV); // (2pi/lambda)^-2
    const double tr4 = vartheta_r * vartheta_r * vartheta_r * vartheta_r;
    double sigma = (pi / 64.0) * inv_w2 * (vartheta_r / delta_theta) * gmM * gmM / tr4;
    if (!out.within_acceptance) {
        const double a = ResonanceState::at(omega_opt_eV, vartheta_r, field).width_a_eV2;
        const double a_tilde = a * inv_w2;
        const double ratio = vartheta_r / delta_theta;
        const double xi_max = (1.0 - ratio * ratio) / a_tilde; // negative here
        sigma *= half_pi_plus_atan(xi_max) / pi;
    }
    out.value_inv_eV2 = sigma;
    return out;
}

double minkowski_dot(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] - a[3] * b[3];
}

CollisionKinematics solve_kinematics(double omega_eV, double vartheta, double theta3) {
    if (!(omega_eV > 0.0))
        throw std::domain_error("solve_kinematics: omega must be > 0");
    if (!(vartheta > 0.0) || !(vartheta < 0.5 * pi))
        throw std::domain_error("solve_kinematics: vartheta must be in (0, pi/2)");
    if (theta3 < 0.0 || theta3 >= vartheta)
        throw std::domain_error("solve_kinematics: requires 0 <= theta3 < vartheta");

    CollisionKinematics k;
    k.omega_eV = omega_eV;
    k.vartheta = vartheta;
    k.theta3 = theta3;

    const double ct = std::cos(vartheta), st = std::sin(vartheta);
    const double s3 = std::sin(theta3);
    // Half-angle forms keep the denominators exact down to vartheta ~
    // 1e-10, where 1 - cos(vartheta) cos(theta3) is pure cancellation.
    const double sh = std::sin(0.5 * vartheta);   // sin(vartheta/2)
    const double ch2 = 1.0 - sh * sh;             // cos^2(vartheta/2)
    const double s3h = std::sin(0.5 * theta3);    // sin(theta3/2)
    const double denom = 2.0 * sh * sh + 2.0 * ct * s3h * s3h; // 1 - ct c3
    k.omega3_eV = omega_eV * st * st / denom;
    // 2 denom - sin^2(vartheta) = 4 sin^4(v/2) + 4 ct sin^2(t3/2), so
    // omega4 = 2 w - omega3 without subtracting near-equal numbers.
    const double residual = 4.0 * sh * sh * sh * sh + 4.0 * ct * s3h * s3h;
    k.omega4_eV = omega_eV * residual / denom;
    const double s4 = k.omega3_eV * s3 / k.omega4_eV;
    // cos(theta4) = T / residual with the same cancellation-free grouping.
    const double bracket = 2.0 * ch2 * s3h * s3h - sh * sh;
    const double t_num = 4.0 * sh * sh * bracket + 4.0 * ct * ct * s3h * s3h;
    const double c4 = t_num / residual;
    k.theta4 = std::atan2(s4, c4);

    k.p1 = {omega_eV * st, 0.0, omega_eV * ct, omega_eV};
    k.p2 = {-omega_eV * st, 0.0, omega_eV * ct, omega_eV};
    k.p3 = {k.omega3_eV * s3, 0.0, k.omega3_eV * std::cos(theta3), k.omega3_eV};
    k.p4 = {-k.omega4_eV * s4, 0.0, k.omega4_eV * c4, k.omega4_eV};
    return k;
}

LuminositySetup::LuminositySetup(double n_photons_, double tau_fs_, double delta_t_fs_,
                                 double wavelength_um_, double focal_length_m_,
                                 double rayleigh_m_, double waist_m_)
    : n_photons(n_photons_),
      tau_fs(tau_fs_),
      delta_t_fs(delta_t_fs_),
      wavelength_um(wavelength_um_),
      focal_length_m(focal_length_m_),
      rayleigh_m(rayleigh_m_),
      waist_m(waist_m_) {
    if (n_photons < 0.0 || !(tau_fs > 0.0) || !(delta_t_fs > 0.0) || !(wavelength_um > 0.0) ||
        !(focal_length_m > 0.0) || !(rayleigh_m > 0.0) || !(waist_m > 0.0))
        throw std::invalid_argument("LuminositySetup: bad inputs");
    // Interaction window cannot beat the uncertainty floor 2 pi / omega.
    const double omega_eV = constants::photon_energy_from_wavelength_um(wavelength_um);
    const double period_fs = 2.0 * pi * constants::hbar_eVs / omega_eV * 1e15;
    if (delta_t_fs < period_fs * (1.0 - 1e-12))
        throw std::invalid_argument("LuminositySetup: delta_t below one optical period");
}

LuminosityBreakdown effective_luminosity(const LuminositySetup& setup) {
    LuminosityBreakdown b;
    b.dt_over_tau = std::min(1.0, setup.delta_t_fs / setup.tau_fs);
    b.n_interacting = b.dt_over_tau * setup.n_photons;

    const double c_um_fs = constants::speed_of_light_m_s * 1e-9; // ~0.3 um/fs
    const double c_tau_um = c_um_fs * setup.tau_fs;
    const double dt_eff_fs = std::min(setup.delta_t_fs, setup.tau_fs);
    const double c_dt_um = c_um_fs * dt_eff_fs;
    const double f_um = setup.focal_length_m * 1e6;
    const double spread = std::atan(setup.focal_length_m / setup.rayleigh_m);

    b.bunches = f_um / c_dt_um;
    b.averaged_instant_per_um2 =
        b.n_interacting * b.n_interacting / (2.0 * f_um * setup.wavelength_um) * spread;
    b.effective_per_um2 = b.dt_over_tau * setup.n_photons * setup.n_photons /
                          (2.0 * c_tau_um * setup.wavelength_um) * spread;
    return b;
}

YieldResult differential_yield(const LuminositySetup& setup, double omega_opt_eV,
                               double vartheta_r, double delta_theta, const LightField& field) {
    YieldResult out;
    const LuminosityBreakdown lum = effective_luminosity(setup);
    const CrossSection sigma =
        differential_cross_section(omega_opt_eV, vartheta_r, delta_theta, field);
    out.within_acceptance = sigma.within_acceptance;
    out.luminosity_per_um2 = lum.effective_per_um2;
    out.cross_section_inv_eV2 = sigma.value_inv_eV2;
    out.width_a_eV2 = ResonanceState::at(omega_opt_eV, vartheta_r, field).width_a_eV2;
    const double sigma_um2 = sigma.value_inv_eV2 * constants::um2_per_inv_eV2;
    out.yield_per_sr = lum.effective_per_um2 * sigma_um2;
    return out;
}

double required_photons(double target_yield_per_sr, const LuminositySetup& setup,
                        double omega_opt_eV, double vartheta_r, double delta_theta,
                        const LightField& field) {
    if (!(target_yield_per_sr > 0.0))
        throw std::domain_error("required_photons: target yield must be > 0");
    LuminositySetup unit = setup;
    unit.n_photons = 1.0;
    const double coef = differential_yield(unit, omega_opt_eV, vartheta_r, delta_theta, field)
                            .yield_per_sr;
    if (!(coef > 0.0))
        throw std::domain_error("required_photons: zero yield coefficient (no coupling?)");
    return std::sqrt(target_yield_per_sr / coef);
}

MassReach mass_reach(double omega_opt_eV, double lens_diameter_m, double focal_length_m,
                     double wavelength_um) {
    if (!(omega_opt_eV > 0.0))
        throw std::domain_error("mass_reach: omega must be > 0");
    const optics::FocusingSetup fs =
        optics::waist_from_lens(lens_diameter_m, focal_length_m, wavelength_um);
    MassReach out;
    const double lambda_m = wavelength_um * 1e-6;
    out.thin_lens_power_law = focal_length_m < 0.1 * fs.rayleigh_m;
    if (out.thin_lens_power_law) {
        // w0 = (d f lambda / 2 pi)^(1/3): exact -2/3 power scaling in f, d.
        const double w0 = std::cbrt(lens_diameter_m * focal_length_m * lambda_m / (2.0 * pi));
        out.waist_m = w0;
        out.delta_theta = lambda_m * lambda_m / (pi * w0 * w0);
    } else {
        out.waist_m = fs.waist_m;
        out.delta_theta = fs.angular_uncertainty;
    }
    out.m_cut_eV = 2.0 * omega_opt_eV * out.delta_theta;
    out.m_min_eV = 2.0 / pi * (lambda_m / lens_diameter_m) * (lambda_m / lens_diameter_m) *
                   omega_opt_eV;
    return out;
}

} // namespace vacuumprobe::resonance
