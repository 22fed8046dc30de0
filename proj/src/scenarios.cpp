#include "vacuumprobe/scenarios.hpp"

#include "vacuumprobe/config.hpp"
#include "vacuumprobe/constants.hpp"
#include "vacuumprobe/fourier_imaging.hpp"
#include "vacuumprobe/gaussian_beam.hpp"
#include "vacuumprobe/phase_fit.hpp"
#include "vacuumprobe/prng.hpp"
#include "vacuumprobe/qed_vacuum.hpp"
#include "vacuumprobe/report_io.hpp"
#include "vacuumprobe/resonance.hpp"

#include <cmath>

namespace vacuumprobe::cli {

namespace cfg = vacuumprobe::config;
namespace k = vacuumprobe::constants;
namespace num = vacuumprobe::numerics;
using nlohmann::json;

namespace {

json make_manifest(const std::string& scenario, const json& config, const RunOptions& opt) {
    json m;
    m["schema_version"] = 1;
    m["scenario"] = scenario;
    m["seed"] = opt.seed;
    m["config"] = config;
    m["tool"] = {{"name", tool_name}, {"version", tool_version}};
    m["artifacts"] = json::array();
    m["intermediates"] = json::object();
    return m;
}

void write_manifest(json& manifest, const RunOptions& opt) {
    const auto path = opt.out_dir / (manifest["scenario"].get<std::string>() + "_manifest.json");
    io::write_text_file(path, manifest.dump(2) + "\n");
}

void add_artifact(json& manifest, const RunOptions& opt, const std::string& name,
                  const std::string& content) {
    io::write_text_file(opt.out_dir / name, content);
    manifest["artifacts"].push_back(name);
}

qed::PolarizationCombo combo_from_string(const std::string& s) {
    if (s == "parallel") return qed::PolarizationCombo::parallel;
    if (s == "perpendicular") return qed::PolarizationCombo::perpendicular;
    throw cfg::ValidationError("polarization_combo must be 'parallel' or 'perpendicular'");
}

resonance::FieldKind kind_from_string(const std::string& s) {
    if (s == "scalar") return resonance::FieldKind::scalar;
    if (s == "pseudoscalar") return resonance::FieldKind::pseudoscalar;
    throw cfg::ValidationError("field.kind must be 'scalar' or 'pseudoscalar'");
}

std::string image_csv(const imaging::FocalPlaneImage& img) {
    io::CsvWriter w;
    for (int iy = 0; iy < img.grid.ny; ++iy) {
        std::vector<double> row(static_cast<std::size_t>(img.grid.nx));
        for (int ix = 0; ix < img.grid.nx; ++ix) row[ix] = img.at(ix, iy);
        w.row(row);
    }
    return w.text();
}

std::string profile_csv(const std::vector<std::pair<double, double>>& profile,
                        const std::string& xlabel) {
    io::CsvWriter w;
    w.header({xlabel, "photons_per_pixel"});
    for (const auto& [x, v] : profile) w.row({x, v});
    return w.text();
}

json region_to_json(const phasefit::Region& r, double phase) {
    if (r.kind == phasefit::Region::Kind::complement)
        return json{{"kind", "complement"}, {"phase", phase}};
    return json{{"x0", r.center_x}, {"y0", r.center_y}, {"half_w", r.half_w},
                {"half_h", r.half_h}, {"phase", phase}};
}

json phase_map_to_json(const phasefit::PhaseMap& map) {
    json arr = json::array();
    for (std::size_t i = 0; i < map.regions.size(); ++i)
        arr.push_back(region_to_json(map.regions[i], map.phases[i]));
    return arr;
}

} // namespace

json run_table1(const json& config, const RunOptions& opt) {
    // The benchmark parameter set: 10 kJ / 10 fs / 800 nm target focused
    // at F#1.2 crossed at 90 degrees by an equal-energy probe at F#4.5,
    // probe expanded 5e4x and refocused by a 5 m lens.
    json manifest = make_manifest("table1", config, opt);

    const double lambda_um = 0.8;
    const double pulse_energy_J = 1e4;
    const double tau_t_fs = 10.0;
    const double f_number_t = 1.2, f_number_p = 4.5;
    const double expansion = 5.0e4;
    const double f_pe_m = 5.0;
    const double theta = 0.5 * k::pi;

    const double w0t_um = f_number_t * lambda_um;
    const double w0p_um = f_number_p * lambda_um;
    optics::GaussianBeam target(lambda_um, pulse_energy_J, tau_t_fs, w0t_um);
    optics::GaussianBeam probe(lambda_um, pulse_energy_J, target.rayleigh_um / (k::speed_of_light_m_s * 1e-9), w0p_um);

    const qed::CrossingGeometry crossing(theta, target, probe);
    const double delta_n = crossing.refractive_shift(qed::PolarizationCombo::perpendicular);
    const double delta = crossing.embedded_phase_shift(qed::PolarizationCombo::perpendicular);
    const double w_pe_um = expansion * w0p_um;
    const auto expanded =
        imaging::ProbeProfile::from_pulse(pulse_energy_J, lambda_um, w_pe_um, f_pe_m);

    json r;
    r["target"] = {
        {"wavelength_um", lambda_um},
        {"pulse_energy_J", pulse_energy_J},
        {"duration_fs", tau_t_fs},
        {"f_number", f_number_t},
        {"waist_um", w0t_um},
        {"rayleigh_um", target.rayleigh_um},
        {"photons", target.photons()},
    };
    r["probe"] = {
        {"wavelength_um", lambda_um},
        {"pulse_energy_J", pulse_energy_J},
        {"duration_fs", probe.duration_fs},
        {"f_number", f_number_p},
        {"waist_um", w0p_um},
        {"rayleigh_um", probe.rayleigh_um},
        {"photons", probe.photons()},
    };
    r["qed_phase"] = {
        {"polarization_combo", "perpendicular"},
        {"zeta", 7.0},
        {"crossing_angle_rad", theta},
        {"n0_um3_per_J", qed::n0_constant_um3_per_J()},
        {"refractive_shift", delta_n},
        {"phase_shift_rad", delta},
    };
    r["signal_path"] = {
        {"expansion_factor", expansion},
        {"expanded_waist_um", w_pe_um},
        {"final_focal_length_m", f_pe_m},
        {"peak_input_fluence_per_um2", expanded.peak_input_fluence_per_um2()},
        {"pedestal_sigma_um", expanded.pedestal_sigma_um()},
    };

    manifest["intermediates"] = r;
    add_artifact(manifest, opt, "table1_report.json", r.dump(2) + "\n");
    write_manifest(manifest, opt);
    return manifest;
}

json run_image(const json& config, const RunOptions& opt) {
    json manifest = make_manifest("image", config, opt);

    const double pulse_energy_J = cfg::number_or(config, "probe.pulse_energy_J", 1e4);
    const double lambda_um = cfg::number_or(config, "probe.wavelength_um", 0.8);
    const double waist_um = cfg::number_or(config, "probe.waist_um", 3.6);
    const double expansion = cfg::number_or(config, "probe.expansion_factor", 5e4);
    const double focal_m = cfg::number_or(config, "probe.focal_length_m", 5.0);
    const double offset_phase = cfg::number_or(config, "image.offset_phase", 0.0);

    // Phase region defaults to the target trajectory footprint (target
    // Rayleigh length along x, target waist along y), magnified with the
    // probe before the final focusing.
    const double target_waist_um = cfg::number_or(config, "target.waist_um", 0.96);
    const optics::GaussianBeam target_beam(cfg::number_or(config, "target.wavelength_um", 0.8),
                                           cfg::number_or(config, "target.pulse_energy_J", 1e4),
                                           cfg::number_or(config, "target.duration_fs", 10.0),
                                           target_waist_um);
    const double mu_um =
        cfg::number_or(config, "region.half_width_um", target_beam.rayleigh_um) * expansion;
    const double nu_um = cfg::number_or(config, "region.half_height_um", target_waist_um) * expansion;

    // image.delta: either a phase in radians or "qed" to derive it from
    // the [target] block.
    double delta;
    const nlohmann::json* delta_node = cfg::find_path(config, "image.delta");
    if (delta_node && delta_node->is_number()) {
        delta = delta_node->get<double>();
    } else if (!delta_node || *delta_node == "qed") {
        const auto combo =
            combo_from_string(cfg::string_or(config, "target.polarization_combo", "perpendicular"));
        delta = qed::phase_shift(lambda_um, combo,
                                 cfg::number_or(config, "target.crossing_angle_rad", 0.5 * k::pi),
                                 cfg::number_or(config, "target.pulse_energy_J", 1e4),
                                 cfg::number_or(config, "target.waist_um", 0.96));
    } else {
        delta = cfg::require_number(config, "image.delta");
    }

    imaging::GridSpec grid;
    grid.pitch_um = cfg::number_or(config, "grid.pitch_um", 50.0);
    grid.nx = cfg::int_or(config, "grid.nx", 401);
    grid.ny = cfg::int_or(config, "grid.ny", 401);

    const auto profile = imaging::ProbeProfile::from_pulse(
        pulse_energy_J, lambda_um, waist_um * expansion, focal_m, offset_phase);
    const imaging::RectRegion region(mu_um, nu_um);
    const auto image = imaging::render_focal_image(profile, region, delta, grid, opt.threads);

    add_artifact(manifest, opt, "image.csv", image_csv(image));

    json meta;
    meta["schema_version"] = 1;
    meta["pitch_um"] = grid.pitch_um;
    meta["nx"] = grid.nx;
    meta["ny"] = grid.ny;
    meta["delta_rad"] = delta;
    meta["offset_phase_rad"] = offset_phase;
    meta["provenance"] =
        image.provenance == imaging::Provenance::pedestal_only ? "pedestal_only" : "with_signal";
    meta["coarse_grid_warning"] = image.coarse_grid_warning;
    meta["pedestal_sigma_um"] = image.pedestal_sigma_um;
    meta["region_half_width_um"] = mu_um;
    meta["region_half_height_um"] = nu_um;
    meta["total_photons_on_grid"] = image.total();
    meta["value_unit"] = "photons_per_pixel";
    meta["axes"] = {{"row", "y index, pitch_um spacing, centered"},
                    {"col", "x index, pitch_um spacing, centered"}};
    add_artifact(manifest, opt, "image_meta.json", meta.dump(2) + "\n");

    if (cfg::bool_or(config, "image.emit_line_profiles", true) && grid.ny % 2 == 1 &&
        grid.nx % 2 == 1) {
        add_artifact(manifest, opt, "profile_x.csv",
                     profile_csv(imaging::pixel_line_profile(image, imaging::Axis::x), "x_um"));
        add_artifact(manifest, opt, "profile_y.csv",
                     profile_csv(imaging::pixel_line_profile(image, imaging::Axis::y), "y_um"));
    }

    if (cfg::bool_or(config, "image.emit_wire_pattern", false)) {
        // Far-field pattern of the bare wire/slit shape on the same grid
        // (dimensionless, normalized to 1 at the origin).
        io::CsvWriter w;
        const double freq = profile.freq_per_um();
        for (int iy = 0; iy < grid.ny; ++iy) {
            std::vector<double> row(static_cast<std::size_t>(grid.nx));
            for (int ix = 0; ix < grid.nx; ++ix)
                row[ix] = imaging::slit_fraunhofer(mu_um, nu_um, freq * image.pixel_x_um(ix),
                                                   freq * image.pixel_y_um(iy));
            w.row(row);
        }
        add_artifact(manifest, opt, "wire_pattern.csv", w.text());
    }

    manifest["intermediates"] = {
        {"delta_rad", delta},
        {"photons_total_input", profile.photons()},
        {"pedestal_sigma_um", image.pedestal_sigma_um},
        {"coarse_grid_warning", image.coarse_grid_warning},
    };
    write_manifest(manifest, opt);
    return manifest;
}

json run_fit(const json& config, const RunOptions& opt) {
    json manifest = make_manifest("fit", config, opt);

    const double envelope_a = cfg::number_or(config, "fit.envelope_a", 1.0);
    const int nx_regions = cfg::int_or(config, "fit.regions_x", 4);
    const int ny_regions = cfg::int_or(config, "fit.regions_y", 4);
    const double half_extent = cfg::number_or(config, "fit.half_extent", 2.0);
    const int n_grid = cfg::int_or(config, "fit.sampling_n", 64);
    const double w_max = cfg::number_or(config, "fit.sampling_w_max", 16.0);
    const double mask_radius = cfg::number_or(config, "fit.mask_radius",
                                              5.0 * std::sqrt(envelope_a));
    const double kappa_truth = cfg::number_or(config, "fit.kappa_truth", 1.0);
    const double template_delta = cfg::number_or(config, "fit.template_delta", 0.1);
    const double background_rms = cfg::number_or(config, "fit.background_rms", 0.0);
    const double perturb_rel = cfg::number_or(config, "fit.perturb_rel", 0.0);
    const double offset_phase = cfg::number_or(config, "fit.offset_phase", 0.0);

    phasefit::ScanSpec scan;
    scan.min = cfg::number_or(config, "fit.scan_min", -2.0);
    scan.max = cfg::number_or(config, "fit.scan_max", 2.0);
    scan.step = cfg::number_or(config, "fit.scan_step", 1e-2);

    auto map = phasefit::PhaseMap::pixel_grid(nx_regions, ny_regions, half_extent);
    num::Prng rng(opt.seed);
    if (background_rms > 0.0) {
        // Uniform in [-sqrt(3) s, sqrt(3) s): distributional RMS = s.
        const double amp = std::sqrt(3.0) * background_rms;
        for (std::size_t i = 1; i < map.phases.size(); ++i)
            map.phases[i] = amp * rng.symmetric();
    }

    // Template: a horizontal band through the middle region rows mimics
    // the target trajectory (mirror symmetric for even row counts).
    phasefit::SignalTemplate tmpl;
    tmpl.delta.assign(map.regions.size(), 0.0);
    tmpl.offset_phase = offset_phase;
    tmpl.note = "horizontal band through the middle region rows";
    const int hi_row = ny_regions / 2;
    const int lo_row = (ny_regions % 2 == 0 && ny_regions > 1) ? hi_row - 1 : hi_row;
    for (int row = lo_row; row <= hi_row; ++row)
        for (int ix = 0; ix < nx_regions; ++ix)
            tmpl.delta[1 + static_cast<std::size_t>(row) * nx_regions + ix] = template_delta;

    const auto grid = phasefit::SamplingGrid::regular(n_grid, n_grid, w_max, mask_radius);
    const phasefit::ForwardModel model(map, grid, envelope_a);

    auto measured = model.intensities_with_template(map, tmpl, kappa_truth);
    if (perturb_rel > 0.0)
        for (auto& v : measured) v *= 1.0 + perturb_rel * rng.symmetric();

    const auto fit = phasefit::fit_kappa(model, measured, map, tmpl, scan);

    json result;
    result["kappa_hat"] = fit.kappa_hat;
    result["chi2_min"] = fit.chi2_min;
    result["n_points"] = fit.n_sampling_points;
    result["scan"] = {{"min", scan.min}, {"max", scan.max}, {"step", scan.step},
                      {"refine", scan.refine}};
    result["on_boundary"] = fit.on_boundary;
    result["kappa_truth"] = kappa_truth;
    add_artifact(manifest, opt, "fit_result.json", result.dump(2) + "\n");
    add_artifact(manifest, opt, "background_map.json", phase_map_to_json(map).dump(2) + "\n");

    manifest["intermediates"] = result;
    write_manifest(manifest, opt);
    return manifest;
}

namespace {

struct SensitivityPoint {
    double f_m, d_m, lambda_um, omega_eV, m_eV;
    double vartheta_r, delta_theta, width_a;
    double n_photons, yield_per_sr, m_cut_eV, m_min_eV, required_n1;
    bool excluded;
    double luminosity_per_um2;
};

SensitivityPoint evaluate_sensitivity(const json& config, double f_m, double n_photons) {
    SensitivityPoint p{};
    p.f_m = f_m;
    p.d_m = cfg::number_or(config, "sensitivity.d_m", 2.0);
    p.lambda_um = cfg::number_or(config, "sensitivity.lambda_um", 0.8);
    p.omega_eV = cfg::number_or(config, "sensitivity.omega_eV", 1.0);
    p.m_eV = cfg::require_number(config, "sensitivity.m_eV");
    p.n_photons = n_photons;

    const resonance::LightField field(
        kind_from_string(cfg::string_or(config, "sensitivity.kind", "scalar")), p.m_eV,
        cfg::number_or(config, "sensitivity.g", 1.0 / 137.0),
        cfg::number_or(config, "sensitivity.M_eV", 1e27));

    // The polarization channel must be admissible for the field type.
    const int in1 = cfg::int_or(config, "sensitivity.pol_in1", 1);
    const int in2 = cfg::int_or(config, "sensitivity.pol_in2", 1);
    const int out1 = cfg::int_or(config, "sensitivity.pol_out1", 2);
    const int out2 = cfg::int_or(config, "sensitivity.pol_out2", 2);
    const int channel = resonance::amplitude_selection(field.kind, in1, in2, out1, out2);

    const auto reach = resonance::mass_reach(p.omega_eV, p.d_m, f_m, p.lambda_um);
    p.m_cut_eV = reach.m_cut_eV;
    p.m_min_eV = reach.m_min_eV;
    p.vartheta_r = resonance::resonance_angle(p.m_eV, p.omega_eV);
    p.delta_theta = cfg::number_or(config, "sensitivity.delta_theta", reach.delta_theta);

    const double tau_fs = cfg::number_or(config, "sensitivity.tau_fs", 10.0);
    const double dt_fs = cfg::number_or(config, "sensitivity.delta_t_fs", tau_fs);
    const auto lens = optics::waist_from_lens(p.d_m, f_m, p.lambda_um);
    const resonance::LuminositySetup setup(n_photons, tau_fs, dt_fs, p.lambda_um, f_m,
                                           lens.rayleigh_m, lens.waist_m);

    if (channel == 0) {
        p.width_a = resonance::ResonanceState::at(p.omega_eV, p.vartheta_r, field).width_a_eV2;
        p.yield_per_sr = 0.0;
        p.required_n1 = 0.0;
        p.excluded = false;
        p.luminosity_per_um2 = resonance::effective_luminosity(setup).effective_per_um2;
        return p;
    }

    const auto yield =
        resonance::differential_yield(setup, p.omega_eV, p.vartheta_r, p.delta_theta, field);
    p.width_a = yield.width_a_eV2;
    p.yield_per_sr = yield.yield_per_sr;
    p.luminosity_per_um2 = yield.luminosity_per_um2;
    const double target = cfg::number_or(config, "sensitivity.target_yield", 1.0);
    p.required_n1 = resonance::required_photons(target, setup, p.omega_eV, p.vartheta_r,
                                                p.delta_theta, field);
    p.excluded = yield.within_acceptance && p.yield_per_sr >= target;
    return p;
}

} // namespace

json run_sensitivity(const json& config, const RunOptions& opt) {
    json manifest = make_manifest("sensitivity", config, opt);

    double n_photons = cfg::number_or(config, "sensitivity.n_photons", 0.0);
    if (n_photons <= 0.0) {
        const double pulse_J = cfg::number_or(config, "sensitivity.pulse_energy_J", 1e4);
        const double lambda_um = cfg::number_or(config, "sensitivity.lambda_um", 0.8);
        n_photons = k::photons_per_pulse(pulse_J, lambda_um * 1e-6);
    }

    const std::string mode = cfg::string_or(config, "sensitivity.mode", "single");
    if (mode == "single") {
        const auto p =
            evaluate_sensitivity(config, cfg::number_or(config, "sensitivity.f_m", 3.0), n_photons);
        json r;
        r["inputs"] = {{"m_eV", p.m_eV}, {"omega_eV", p.omega_eV}, {"lambda_um", p.lambda_um},
                       {"d_m", p.d_m}, {"f_m", p.f_m}, {"n_photons", p.n_photons}};
        r["vartheta_r"] = p.vartheta_r;
        r["delta_theta"] = p.delta_theta;
        r["width_a_eV2"] = p.width_a;
        r["luminosity_per_um2"] = p.luminosity_per_um2;
        r["yield_per_pulse_per_sr"] = p.yield_per_sr;
        r["required_photons_N1"] = p.required_n1;
        r["m_cut_eV"] = p.m_cut_eV;
        r["m_min_eV"] = p.m_min_eV;
        r["excluded"] = p.excluded;
        add_artifact(manifest, opt, "sensitivity_report.json", r.dump(2) + "\n");
        manifest["intermediates"] = r;
    } else if (mode == "f_sweep") {
        // An empty list is a legal degenerate sweep: header-only CSV.
        std::vector<double> f_list;
        if (const auto* node = cfg::find_path(config, "sensitivity.f_list_m");
            node && node->is_array() && node->empty())
            f_list.clear();
        else
            f_list = cfg::require_number_list(config, "sensitivity.f_list_m");
        io::CsvWriter w;
        w.header({"m_eV", "gM_inv_GeV", "f_m", "d_m", "N_photons", "yield_per_pulse",
                  "m_cut_eV", "excluded_bool"});
        for (double f : f_list) {
            const auto p = evaluate_sensitivity(config, f, n_photons);
            const double gM_inv_GeV =
                cfg::number_or(config, "sensitivity.g", 1.0 / 137.0) /
                (cfg::number_or(config, "sensitivity.M_eV", 1e27) * 1e-9);
            w.row_raw({io::format_g17(p.m_eV), io::format_g17(gM_inv_GeV), io::format_g17(f),
                       io::format_g17(p.d_m), io::format_g17(p.n_photons),
                       io::format_g17(p.yield_per_sr), io::format_g17(p.m_cut_eV),
                       io::format_bool(p.excluded)});
        }
        add_artifact(manifest, opt, "sensitivity_sweep.csv", w.text());
        manifest["intermediates"] = {{"rows", f_list.size()}};
    } else {
        throw cfg::ValidationError("sensitivity.mode must be 'single' or 'f_sweep'");
    }
    write_manifest(manifest, opt);
    return manifest;
}

json run_kinematics(const json& config, const RunOptions& opt) {
    json manifest = make_manifest("kinematics", config, opt);

    const double omega = cfg::number_or(config, "kinematics.omega_eV", 1.0);
    const double vartheta = cfg::require_number(config, "kinematics.vartheta_rad");
    const double theta3 = cfg::number_or(config, "kinematics.theta3_rad", 0.0);
    const auto kin = resonance::solve_kinematics(omega, vartheta, theta3);

    auto residuals = [](const resonance::CollisionKinematics& q) {
        const double energy = q.omega3_eV + q.omega4_eV - 2.0 * q.omega_eV;
        const double pz = q.omega3_eV * std::cos(q.theta3) + q.omega4_eV * std::cos(q.theta4) -
                          2.0 * q.omega_eV * std::cos(q.vartheta);
        const double px = q.omega3_eV * std::sin(q.theta3) - q.omega4_eV * std::sin(q.theta4);
        return json{{"energy", energy}, {"pz", pz}, {"px", px}};
    };

    json r;
    r["inputs"] = {{"omega_eV", omega}, {"vartheta_rad", vartheta}, {"theta3_rad", theta3}};
    r["omega3_eV"] = kin.omega3_eV;
    r["omega4_eV"] = kin.omega4_eV;
    r["theta4_rad"] = kin.theta4;
    r["q_s_squared_eV2"] = resonance::minkowski_dot(
        {kin.p1[0] + kin.p2[0], kin.p1[1] + kin.p2[1], kin.p1[2] + kin.p2[2],
         kin.p1[3] + kin.p2[3]},
        {kin.p1[0] + kin.p2[0], kin.p1[1] + kin.p2[1], kin.p1[2] + kin.p2[2],
         kin.p1[3] + kin.p2[3]});
    r["conservation_residuals_eV"] = residuals(kin);

    const int n_random = cfg::int_or(config, "kinematics.n_random", 0);
    if (n_random > 0) {
        num::Prng rng(opt.seed);
        double worst = 0.0;
        for (int i = 0; i < n_random; ++i) {
            const double w = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
            const double t = std::exp(rng.uniform(std::log(1e-10), std::log(1.0)));
            const double t3 = rng.uniform01() * t * 0.999;
            const auto q = resonance::solve_kinematics(w, t, t3);
            const json res = residuals(q);
            for (const auto& v : res)
                worst = std::max(worst, std::abs(v.get<double>()) / (2.0 * w));
        }
        r["random_closure"] = {{"n", n_random}, {"worst_relative_residual", worst}};
    }

    add_artifact(manifest, opt, "kinematics_report.json", r.dump(2) + "\n");
    manifest["intermediates"] = r;
    write_manifest(manifest, opt);
    return manifest;
}

json run_scenario(const std::string& name, const json& config, const RunOptions& opt) {
    if (name == "table1") return run_table1(config, opt);
    if (name == "image") return run_image(config, opt);
    if (name == "fit") return run_fit(config, opt);
    if (name == "sensitivity") return run_sensitivity(config, opt);
    if (name == "kinematics") return run_kinematics(config, opt);
    throw cfg::ValidationError("unknown scenario: " + name);
}

} // namespace vacuumprobe::cli
