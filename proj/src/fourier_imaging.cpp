#include "vacuumprobe/fourier_imaging.hpp"

#include "vacuumprobe/constants.hpp"
#include "vacuumprobe/faddeeva.hpp"
#include "vacuumprobe/parallel.hpp"
#include "vacuumprobe/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace vacuumprobe::imaging {

using constants::pi;
namespace num = vacuumprobe::numerics;

RectRegion::RectRegion(double mu, double nu, double cx, double cy)
    : half_width_um(mu), half_height_um(nu), center_x_um(cx), center_y_um(cy) {
    if (!(mu > 0.0) || !(nu > 0.0))
        throw std::invalid_argument("RectRegion: half extents must be > 0");
}

ProbeProfile ProbeProfile::from_pulse(double pulse_energy_J, double wavelength_um,
                                      double waist_um, double focal_length_m,
                                      double offset_phase) {
    if (!(pulse_energy_J > 0.0) || !(waist_um > 0.0) || !(wavelength_um > 0.0) ||
        !(focal_length_m > 0.0))
        throw std::invalid_argument("ProbeProfile: inputs must be > 0");
    ProbeProfile p;
    p.envelope_a = 1.0 / (waist_um * waist_um);
    p.wavelength_um = wavelength_um;
    p.focal_length_m = focal_length_m;
    p.offset_phase = offset_phase;
    const double n_photons = constants::photons_per_pulse(pulse_energy_J, wavelength_um * 1e-6);
    p.amplitude = std::sqrt(2.0 * p.envelope_a * n_photons / pi);
    return p;
}

double ProbeProfile::photons() const {
    return amplitude * amplitude * pi / (2.0 * envelope_a);
}

double ProbeProfile::freq_per_um() const {
    return 2.0 * pi / (focal_length_um() * wavelength_um);
}

double ProbeProfile::pedestal_sigma_um() const {
    // pedestal density ~ exp(-omega^2/(2a)); omega = freq * x
    return std::sqrt(envelope_a) / freq_per_um();
}

double ProbeProfile::peak_input_fluence_per_um2() const {
    const double w2 = 1.0 / envelope_a;
    return photons() / (2.0 * pi * w2);
}

namespace {
double sinc(double x) {
    if (std::abs(x) < 1e-8)
        return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}
} // namespace

double slit_fraunhofer(double mu_um, double nu_um, double omega_x, double omega_y) {
    if (!(mu_um > 0.0) || !(nu_um > 0.0))
        throw std::domain_error("slit_fraunhofer: slit half extents must be > 0");
    const double sx = sinc(mu_um * omega_x);
    const double sy = sinc(nu_um * omega_y);
    return sx * sx * sy * sy;
}

double c_sig(double omega_x, double omega_y, double mu_um, double nu_um, double envelope_a) {
    return num::cos_window(envelope_a, mu_um, omega_x) *
           num::cos_window(envelope_a, nu_um, omega_y);
}

double c_bkg(double omega_x, double omega_y, double envelope_a) {
    if (!(envelope_a > 0.0))
        throw std::domain_error("c_bkg: envelope exponent must be > 0");
    const double w2 = omega_x * omega_x + omega_y * omega_y;
    return pi / envelope_a * std::exp(-w2 / (4.0 * envelope_a));
}

double focal_intensity(double omega_x, double omega_y, double delta,
                       const ProbeProfile& profile, const RectRegion& region) {
    if (!region.centered())
        throw std::domain_error(
            "focal_intensity: off-center regions go through the phase-map model");
    const double a = profile.envelope_a;
    const double cs = c_sig(omega_x, omega_y, region.half_width_um, region.half_height_um, a);
    const double cb = c_bkg(omega_x, omega_y, a);
    const double sf = num::one_minus_cos(delta + profile.offset_phase);
    const double scale = profile.amplitude / (profile.focal_length_um() * profile.wavelength_um);
    return scale * scale * (2.0 * cs * (cs - cb) * sf + cb * cb);
}

double FocalPlaneImage::total() const {
    double s = 0.0;
    for (double v : photons) s += v;
    return s;
}

namespace {

// 1D ingredients of the separable pixel integrals, as functions of the
// focal-plane coordinate: C(x) = cos_window(a, half, freq*x) and the
// Gaussian factor B1(x) = sqrt(pi/a) exp(-(freq*x)^2/(4a)).
struct AxisFactors {
    double a, half, freq;
    double C(double x) const { return num::cos_window(a, half, freq * x); }
    double B(double x) const {
        const double w = freq * x;
        return std::sqrt(pi / a) * std::exp(-w * w / (4.0 * a));
    }
};

struct AxisPixelTable {
    std::vector<double> CC, CB, BB; // per-pixel integrals of C^2, C*B, B^2
};

AxisPixelTable tabulate_axis(const AxisFactors& f, int n, double pitch, unsigned threads) {
    AxisPixelTable t;
    t.CC.resize(n);
    t.CB.resize(n);
    t.BB.resize(n);
    num::parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
        const double xc = (static_cast<double>(i) - 0.5 * (n - 1)) * pitch;
        const double lo = xc - 0.5 * pitch, hi = xc + 0.5 * pitch;
        t.CC[i] = num::integrate_gl8([&](double x) { const double c = f.C(x); return c * c; }, lo, hi);
        t.CB[i] = num::integrate_gl8([&](double x) { return f.C(x) * f.B(x); }, lo, hi);
        t.BB[i] = num::integrate_gl8([&](double x) { const double b = f.B(x); return b * b; }, lo, hi);
    });
    return t;
}

} // namespace

FocalPlaneImage render_focal_image(const ProbeProfile& profile, const RectRegion& region,
                                   double delta, const GridSpec& grid, unsigned threads) {
    if (!(grid.pitch_um > 0.0) || grid.nx < 1 || grid.ny < 1)
        throw std::invalid_argument("render_focal_image: bad grid spec");
    if (!region.centered())
        throw std::domain_error(
            "render_focal_image: off-center regions go through the phase-map model");

    FocalPlaneImage img;
    img.grid = grid;
    img.delta = delta;
    img.offset_phase = profile.offset_phase;
    img.provenance = (delta == 0.0 && profile.offset_phase == 0.0) ? Provenance::pedestal_only
                                                                   : Provenance::with_signal;
    img.pedestal_sigma_um = profile.pedestal_sigma_um();
    img.coarse_grid_warning = grid.pitch_um > img.pedestal_sigma_um;
    img.photons.assign(static_cast<std::size_t>(grid.nx) * grid.ny, 0.0);

    const double freq = profile.freq_per_um();
    const AxisFactors fx{profile.envelope_a, region.half_width_um, freq};
    const AxisFactors fy{profile.envelope_a, region.half_height_um, freq};
    const AxisPixelTable tx = tabulate_axis(fx, grid.nx, grid.pitch_um, threads);
    const AxisPixelTable ty = tabulate_axis(fy, grid.ny, grid.pitch_um, threads);

    const double sf = num::one_minus_cos(delta + profile.offset_phase);
    const double scale = profile.amplitude / (profile.focal_length_um() * profile.wavelength_um);
    const double p2 = scale * scale;

    num::parallel_for(static_cast<std::size_t>(grid.ny), threads, [&](std::size_t iy) {
        double* row = img.photons.data() + iy * grid.nx;
        for (int ix = 0; ix < grid.nx; ++ix) {
            const double sig = tx.CC[ix] * ty.CC[iy] - tx.CB[ix] * ty.CB[iy];
            row[ix] = p2 * (2.0 * sf * sig + tx.BB[ix] * ty.BB[iy]);
        }
    });
    return img;
}

std::vector<std::pair<double, double>> pixel_line_profile(const FocalPlaneImage& image, Axis axis) {
    const int n_along = axis == Axis::x ? image.grid.nx : image.grid.ny;
    const int n_cross = axis == Axis::x ? image.grid.ny : image.grid.nx;
    if (n_cross % 2 == 0)
        throw std::domain_error("pixel_line_profile: grid has no on-axis pixel row");
    const int mid = (n_cross - 1) / 2;
    std::vector<std::pair<double, double>> out;
    out.reserve(n_along);
    for (int i = 0; i < n_along; ++i) {
        if (axis == Axis::x)
            out.emplace_back(image.pixel_x_um(i), image.at(i, mid));
        else
            out.emplace_back(image.pixel_y_um(i), image.at(mid, i));
    }
    return out;
}

namespace {

struct SeparableTotals {
    double cc, cb, bb;
};

SeparableTotals integrate_axis_box(const AxisFactors& f, double half_extent) {
    SeparableTotals s{};
    s.cc = num::integrate_adaptive([&](double x) { const double c = f.C(x); return c * c; },
                                   -half_extent, half_extent, 1e-10);
    s.cb = num::integrate_adaptive([&](double x) { return f.C(x) * f.B(x); }, -half_extent,
                                   half_extent, 1e-10);
    s.bb = num::integrate_adaptive([&](double x) { const double b = f.B(x); return b * b; },
                                   -half_extent, half_extent, 1e-10);
    return s;
}

double assemble(const ProbeProfile& profile, double delta, const SeparableTotals& x,
                const SeparableTotals& y) {
    const double sf = num::one_minus_cos(delta + profile.offset_phase);
    const double scale = profile.amplitude / (profile.focal_length_um() * profile.wavelength_um);
    return scale * scale * (2.0 * sf * (x.cc * y.cc - x.cb * y.cb) + x.bb * y.bb);
}

} // namespace

double photons_in_box(const ProbeProfile& profile, const RectRegion& region, double delta,
                      double half_x_um, double half_y_um) {
    if (!region.centered())
        throw std::domain_error("photons_in_box: off-center regions unsupported");
    const double freq = profile.freq_per_um();
    const AxisFactors fx{profile.envelope_a, region.half_width_um, freq};
    const AxisFactors fy{profile.envelope_a, region.half_height_um, freq};
    return assemble(profile, delta, integrate_axis_box(fx, half_x_um),
                    integrate_axis_box(fy, half_y_um));
}

double total_photons_numeric(const ProbeProfile& profile, const RectRegion& region,
                             double delta, double rel_cut) {
    if (!region.centered())
        throw std::domain_error("total_photons_numeric: off-center regions unsupported");
    const double freq = profile.freq_per_um();
    const AxisFactors fx{profile.envelope_a, region.half_width_um, freq};
    const AxisFactors fy{profile.envelope_a, region.half_height_um, freq};

    // Extend the integration box until the assembled total is stable to
    // rel_cut. The individual sinc-squared factors have slow 1/X tails,
    // but the interference bracket they enter cancels in the tail, so
    // the assembled value settles after a few doublings.
    auto add_shell = [&](const AxisFactors& f, SeparableTotals& tot, double lo, double hi) {
        tot.cc += 2.0 * num::integrate_adaptive(
                            [&](double x) { const double c = f.C(x); return c * c; }, lo, hi, 1e-10);
        tot.cb += 2.0 * num::integrate_adaptive([&](double x) { return f.C(x) * f.B(x); }, lo, hi, 1e-10);
        tot.bb += 2.0 * num::integrate_adaptive(
                            [&](double x) { const double b = f.B(x); return b * b; }, lo, hi, 1e-10);
    };

    const double ripple_x = 2.0 * pi / (freq * region.half_width_um);
    const double ripple_y = 2.0 * pi / (freq * region.half_height_um);
    double half = 8.0 * profile.pedestal_sigma_um() + 20.0 * std::max(ripple_x, ripple_y);
    SeparableTotals tx = integrate_axis_box(fx, half);
    SeparableTotals ty = integrate_axis_box(fy, half);
    double total = assemble(profile, delta, tx, ty);
    for (int it = 0; it < 48; ++it) {
        const double next = 2.0 * half;
        add_shell(fx, tx, half, next);
        add_shell(fy, ty, half, next);
        half = next;
        const double updated = assemble(profile, delta, tx, ty);
        const double rel = std::abs(updated - total) / std::abs(updated);
        total = updated;
        if (rel < rel_cut)
            break;
    }
    return total;
}

} // namespace vacuumprobe::imaging
