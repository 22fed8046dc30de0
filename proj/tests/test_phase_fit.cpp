#include <doctest.h>

#include "vacuumprobe/constants.hpp"
#include "vacuumprobe/fourier_imaging.hpp"
#include "vacuumprobe/phase_fit.hpp"
#include "vacuumprobe/prng.hpp"
#include "vacuumprobe/quadrature.hpp"

#include <cmath>

using namespace vacuumprobe::phasefit;
namespace num = vacuumprobe::numerics;
namespace img = vacuumprobe::imaging;
namespace k = vacuumprobe::constants;

namespace {
bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

// Compact fit-scale geometry: unit envelope, 4x4 regions over [-2,2]^2,
// 64x64 frequency grid masked at five pedestal sigmas.
constexpr double kA = 1.0;

SamplingGrid default_grid() { return SamplingGrid::regular(64, 64, 16.0, 5.0 * std::sqrt(kA)); }

PhaseMap grid_map(double phase = 0.0) { return PhaseMap::pixel_grid(4, 4, 2.0, phase); }

SignalTemplate stripe_template(double delta, double offset = 0.0) {
    // Horizontal band through the middle two region rows: mirror
    // symmetric in y, so the summed region transform is real and the
    // +-kappa degeneracy of the centered embedding holds exactly.
    SignalTemplate t;
    t.delta.assign(17, 0.0);
    t.offset_phase = offset;
    for (int ix = 0; ix < 4; ++ix) {
        t.delta[1 + 1 * 4 + ix] = delta;
        t.delta[1 + 2 * 4 + ix] = delta;
    }
    return t;
}
} // namespace

TEST_CASE("region integral equals the quadrature oracle") {
    num::Prng rng(555u);
    for (int trial = 0; trial < 12; ++trial) {
        const double cx = rng.uniform(-2.0, 2.0);
        const double cy = rng.uniform(-2.0, 2.0);
        const double hw = rng.uniform(0.1, 1.0);
        const double hh = rng.uniform(0.1, 1.0);
        const double wx = rng.uniform(-10.0, 10.0);
        const double wy = rng.uniform(-10.0, 10.0);
        const auto reg = Region::rect(cx, cy, hw, hh);
        const cdouble v = region_integral(reg, wx, wy, kA);

        auto jx_re = [&](double x) { return std::exp(-kA * x * x) * std::cos(wx * x); };
        auto jx_im = [&](double x) { return -std::exp(-kA * x * x) * std::sin(wx * x); };
        auto jy_re = [&](double y) { return std::exp(-kA * y * y) * std::cos(wy * y); };
        auto jy_im = [&](double y) { return -std::exp(-kA * y * y) * std::sin(wy * y); };
        const cdouble jx(num::integrate_adaptive(jx_re, cx - hw, cx + hw, 1e-13),
                         num::integrate_adaptive(jx_im, cx - hw, cx + hw, 1e-13));
        const cdouble jy(num::integrate_adaptive(jy_re, cy - hh, cy + hh, 1e-13),
                         num::integrate_adaptive(jy_im, cy - hh, cy + hh, 1e-13));
        const cdouble q = jx * jy;
        CHECK(std::abs(v - q) <= 1e-10 * std::max(std::abs(q), 1e-10));
    }
}

TEST_CASE("centered region integral is real and equals the imaging coefficient") {
    const auto reg = Region::rect(0.0, 0.0, 0.8, 0.4);
    for (double wx : {0.0, 0.7, 3.1}) {
        for (double wy : {0.0, 1.9}) {
            const cdouble v = region_integral(reg, wx, wy, kA);
            CHECK(std::abs(v.imag()) <= 1e-14 * std::abs(v.real()));
            CHECK(close(v.real(), img::c_sig(wx, wy, 0.8, 0.4, kA), 1e-12));
        }
    }
}

TEST_CASE("region integrals are additive over tilings") {
    // Four quadrants of [-1,1]^2 sum to the full square.
    const double wx = 2.3, wy = -0.7;
    cdouble sum = 0.0;
    for (double sx : {-0.5, 0.5})
        for (double sy : {-0.5, 0.5})
            sum += region_integral(Region::rect(sx, sy, 0.5, 0.5), wx, wy, kA);
    const cdouble whole = region_integral(Region::rect(0.0, 0.0, 1.0, 1.0), wx, wy, kA);
    CHECK(std::abs(sum - whole) <= 1e-12 * std::abs(whole) + 1e-15);
}

TEST_CASE("forward model completeness and flat-map reduction") {
    // All phases zero: |psi|^2 = I_inf^2 regardless of the tiling.
    const auto grid = default_grid();
    const ForwardModel model(grid_map(), grid, kA);
    const auto flat = model.intensities(std::vector<double>(17, 0.0));
    std::size_t p = 0;
    for (double wy : grid.wy) {
        for (double wx : grid.wx) {
            if (std::hypot(wx, wy) < grid.mask_radius) continue;
            const double ped = img::c_bkg(wx, wy, kA);
            CHECK(close(flat[p], ped * ped, 1e-11));
            ++p;
        }
    }
    CHECK(p == model.n_points());
}

TEST_CASE("single centered region reproduces the closed-form intensity") {
    PhaseMap map;
    map.regions = {Region::complement(), Region::rect(0.0, 0.0, 0.8, 0.4)};
    map.phases = {0.0, 0.0};
    SignalTemplate tmpl;
    tmpl.delta = {0.0, 1.0};

    const auto grid = default_grid();
    const ForwardModel model(map, grid, kA);
    const double kappa = 3.17e-3;
    const auto vals = model.intensities_with_template(map, tmpl, kappa);

    img::ProbeProfile profile;
    profile.amplitude = 1.0;
    profile.envelope_a = kA;
    profile.wavelength_um = 1.0;
    profile.focal_length_m = 1e-6; // unit frequency scale: w = x
    const img::RectRegion rect(0.8, 0.4);

    std::size_t p = 0;
    for (double wy : grid.wy) {
        for (double wx : grid.wx) {
            if (std::hypot(wx, wy) < grid.mask_radius) continue;
            const double ref = img::focal_intensity(wx, wy, kappa, profile, rect);
            CHECK(std::abs(vals[p] - ref) <= 1e-8 * std::max(ref, 1e-12));
            ++p;
        }
    }
}

TEST_CASE("global phase gauge invariance over a complete tiling") {
    const auto grid = default_grid();
    const auto map = grid_map();
    const ForwardModel model(map, grid, kA);
    num::Prng rng(99u);
    std::vector<double> phases(17);
    for (auto& v : phases) v = 0.3 * rng.symmetric();
    auto shifted = phases;
    for (auto& v : shifted) v += 0.4217;

    const auto a = model.intensities(phases);
    const auto b = model.intensities(shifted);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(std::abs(a[i] - b[i]) <= 1e-11 * std::max(a[i], 1e-12));
}

TEST_CASE("partition refinement leaves the amplitude unchanged") {
    // Splitting one region into two halves with the same phase.
    PhaseMap coarse;
    coarse.regions = {Region::complement(), Region::rect(0.0, 0.0, 1.0, 0.5)};
    coarse.phases = {0.0, 0.21};
    PhaseMap fine;
    fine.regions = {Region::complement(), Region::rect(-0.5, 0.0, 0.5, 0.5),
                    Region::rect(0.5, 0.0, 0.5, 0.5)};
    fine.phases = {0.0, 0.21, 0.21};

    const auto grid = default_grid();
    const auto a = ForwardModel(coarse, grid, kA).intensities(coarse.phases);
    const auto b = ForwardModel(fine, grid, kA).intensities(fine.phases);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(std::abs(a[i] - b[i]) <= 1e-11 * std::max(a[i], 1e-12));
}

TEST_CASE("chi-square basics") {
    const auto grid = default_grid();
    const auto map = grid_map();
    const ForwardModel model(map, grid, kA);
    const auto tmpl = stripe_template(0.1);

    const auto meas = model.intensities_with_template(map, tmpl, 1.0);
    CHECK(chi_square_at(model, meas, map, tmpl, 1.0) == 0.0);
    CHECK(chi_square_at(model, meas, map, tmpl, 0.0) > 0.0);

    // Model nesting: the fitted minimum cannot exceed the kappa = 0 value.
    ScanSpec scan;
    const auto fit = fit_kappa(model, meas, map, tmpl, scan);
    CHECK(fit.chi2_min <= chi_square_at(model, meas, map, tmpl, 0.0));
}

TEST_CASE("chi-square under a pinned perturbation (regression)") {
    const auto grid = default_grid();
    const auto map = grid_map();
    const ForwardModel model(map, grid, kA);
    const auto tmpl = stripe_template(0.1);
    auto meas = model.intensities_with_template(map, tmpl, 1.0);
    num::Prng rng(1234u);
    for (auto& v : meas) v *= 1.0 + 1e-3 * rng.symmetric();
    const double chi2 = chi_square_at(model, meas, map, tmpl, 1.0);
    CHECK(chi2 > 0.0);
    MESSAGE("perturbation chi2 = ", chi2);
    CHECK(chi2 < 1.0);
}

TEST_CASE("kappa recovery on noiseless synthetic data") {
    const auto grid = default_grid();
    const auto map = grid_map();
    const ForwardModel model(map, grid, kA);
    const auto tmpl = stripe_template(0.1);
    ScanSpec scan; // [-2, 2], step 1e-2, refine to 1e-6

    for (double truth : {1.0, 0.0}) {
        const auto meas = model.intensities_with_template(map, tmpl, truth);
        const auto fit = fit_kappa(model, meas, map, tmpl, scan);
        CHECK(std::abs(fit.kappa_hat - truth) <= scan.step * scan.refine);
        CHECK_FALSE(fit.on_boundary);
        CHECK(fit.n_sampling_points == model.n_points());
    }
}

TEST_CASE("kappa recovery with a compensated background map") {
    auto map = grid_map();
    num::Prng rng(777u);
    for (std::size_t i = 1; i < map.phases.size(); ++i)
        map.phases[i] = std::sqrt(3.0) * 1e-2 * rng.symmetric(); // RMS 1e-2
    const auto grid = default_grid();
    const ForwardModel model(map, grid, kA);
    const auto tmpl = stripe_template(0.1);
    ScanSpec scan;

    const auto meas = model.intensities_with_template(map, tmpl, 1.0);
    const auto fit = fit_kappa(model, meas, map, tmpl, scan);
    CHECK(std::abs(fit.kappa_hat - 1.0) <= scan.step * scan.refine);
}

TEST_CASE("sign degeneracy without an offset plate, broken with one") {
    const auto grid = default_grid();
    const auto map = grid_map(); // phases identically zero
    const ForwardModel model(map, grid, kA);

    const auto plain = stripe_template(0.1, 0.0);
    const auto meas = model.intensities_with_template(map, plain, 1.0);
    for (double kappa : {0.3, 0.7, 1.0, 1.6}) {
        const double cp = chi_square_at(model, meas, map, plain, kappa);
        const double cm = chi_square_at(model, meas, map, plain, -kappa);
        // exact in real arithmetic; 1e-30 absorbs the roundoff floor of
        // chi^2 built from few-ulp intensity differences
        CHECK(std::abs(cp - cm) <= 1e-12 * std::max(cp, cm) + 1e-30);
    }

    const auto plate = stripe_template(0.1, 0.5 * k::pi);
    const auto meas_p = model.intensities_with_template(map, plate, 1.0);
    const double cp = chi_square_at(model, meas_p, map, plate, 1.0);
    const double cm = chi_square_at(model, meas_p, map, plate, -1.0);
    CHECK(cp == 0.0);
    CHECK(cm > 1e3 * std::max(cp, 1e-300));
}

TEST_CASE("scan boundary is flagged") {
    const auto grid = default_grid();
    const auto map = grid_map();
    const ForwardModel model(map, grid, kA);
    const auto tmpl = stripe_template(0.1);
    const auto meas = model.intensities_with_template(map, tmpl, 1.0);
    ScanSpec narrow{0.2, 0.8, 0.1, 1e-4};
    const auto fit = fit_kappa(model, meas, map, tmpl, narrow);
    CHECK(fit.on_boundary);
}

TEST_CASE("phase map reconstruction") {
    // A 3-sigma core mask keeps part of the regions' main transform
    // lobes in the sample; at the 5-sigma kappa-fit default the
    // coordinate scans still converge but need far more sweeps.
    const auto grid = SamplingGrid::regular(64, 64, 16.0, 3.0 * std::sqrt(kA));
    ReconstructOptions opt;
    opt.scan = ScanSpec{-0.05, 0.05, 1e-3, 1e-4};

    SUBCASE("flat truth map stays flat") {
        const auto truth = grid_map();
        const ForwardModel model(truth, grid, kA);
        const auto meas = model.intensities(truth.phases);
        const auto rec = reconstruct_phase_map(model, meas, grid_map(), opt);
        for (double phi : rec.map.phases) CHECK(std::abs(phi) <= 3.0 * opt.scan.step);
    }

    SUBCASE("single-region bump is recovered") {
        auto truth = grid_map();
        truth.phases[6] = 1e-4;
        const ForwardModel model(truth, grid, kA);
        const auto meas = model.intensities(truth.phases);
        const auto rec = reconstruct_phase_map(model, meas, grid_map(), opt);
        CHECK(std::abs(rec.map.phases[6] - 1e-4) <= 3.0 * opt.scan.step);
        for (std::size_t i = 1; i < rec.map.phases.size(); ++i)
            if (i != 6) CHECK(std::abs(rec.map.phases[i]) <= 3.0 * opt.scan.step);
    }

    SUBCASE("random map with RMS 1e-3 converges within the sweep budget") {
        auto truth = grid_map();
        num::Prng rng(42u);
        for (std::size_t i = 1; i < truth.phases.size(); ++i)
            truth.phases[i] = std::sqrt(3.0) * 1e-3 * rng.symmetric();
        const ForwardModel model(truth, grid, kA);
        const auto meas = model.intensities(truth.phases);
        const auto rec = reconstruct_phase_map(model, meas, grid_map(), opt);
        CHECK(rec.sweeps <= 20);
        double worst = 0.0;
        for (std::size_t i = 0; i < truth.phases.size(); ++i)
            worst = std::max(worst, std::abs(rec.map.phases[i] - truth.phases[i]));
        MESSAGE("reconstruction worst error = ", worst, " after ", rec.sweeps, " sweeps");
        CHECK(worst < 3.0 * opt.scan.step);
    }
}

TEST_CASE("validation errors") {
    const auto grid = default_grid();
    auto map = grid_map();

    // Underdetermined: more regions than sampling points.
    SamplingGrid tiny = SamplingGrid::regular(3, 3, 16.0, 0.0);
    const ForwardModel small_model(map, tiny, kA);
    const std::vector<double> meas(small_model.n_points(), 1.0);
    CHECK_THROWS_AS(reconstruct_phase_map(small_model, meas, map, {}), std::domain_error);

    // Mask that removes everything.
    SamplingGrid all_masked = SamplingGrid::regular(8, 8, 1.0, 10.0);
    CHECK_THROWS_AS(ForwardModel(map, all_masked, kA), std::domain_error);

    // Mismatched template.
    const ForwardModel model(map, grid, kA);
    SignalTemplate bad;
    bad.delta.assign(3, 0.0);
    CHECK_THROWS_AS(model.intensities_with_template(map, bad, 1.0), std::domain_error);

    // Overlapping regions.
    PhaseMap overlap;
    overlap.regions = {Region::rect(0.0, 0.0, 1.0, 1.0), Region::rect(0.5, 0.5, 1.0, 1.0)};
    overlap.phases = {0.0, 0.0};
    CHECK_THROWS_AS(overlap.validate(), std::invalid_argument);
}
