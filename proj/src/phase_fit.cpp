#include "vacuumprobe/phase_fit.hpp"

#include "vacuumprobe/constants.hpp"
#include "vacuumprobe/faddeeva.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vacuumprobe::phasefit {

using constants::pi;
namespace num = vacuumprobe::numerics;

Region Region::rect(double cx, double cy, double hw, double hh) {
    if (!(hw > 0.0) || !(hh > 0.0))
        throw std::invalid_argument("Region::rect: half extents must be > 0");
    Region r;
    r.kind = Kind::rect;
    r.center_x = cx;
    r.center_y = cy;
    r.half_w = hw;
    r.half_h = hh;
    return r;
}

Region Region::complement() {
    Region r;
    r.kind = Kind::complement;
    return r;
}

void PhaseMap::validate() const {
    if (regions.size() != phases.size())
        throw std::invalid_argument("PhaseMap: regions/phases size mismatch");
    int complements = 0;
    for (const auto& r : regions)
        if (r.kind == Region::Kind::complement) ++complements;
    if (complements > 1)
        throw std::invalid_argument("PhaseMap: more than one complement region");
    for (std::size_t i = 0; i < regions.size(); ++i) {
        if (regions[i].kind != Region::Kind::rect) continue;
        for (std::size_t j = i + 1; j < regions.size(); ++j) {
            if (regions[j].kind != Region::Kind::rect) continue;
            const auto& a = regions[i];
            const auto& b = regions[j];
            const bool overlap_x = std::abs(a.center_x - b.center_x) < a.half_w + b.half_w - 1e-12;
            const bool overlap_y = std::abs(a.center_y - b.center_y) < a.half_h + b.half_h - 1e-12;
            if (overlap_x && overlap_y)
                throw std::invalid_argument("PhaseMap: overlapping regions");
        }
    }
}

PhaseMap PhaseMap::pixel_grid(int n_x, int n_y, double half_extent, double phase) {
    if (n_x < 1 || n_y < 1 || !(half_extent > 0.0))
        throw std::invalid_argument("PhaseMap::pixel_grid: bad grid");
    PhaseMap map;
    map.regions.push_back(Region::complement());
    map.phases.push_back(0.0);
    const double hx = half_extent / n_x;
    const double hy = half_extent / n_y;
    for (int iy = 0; iy < n_y; ++iy) {
        for (int ix = 0; ix < n_x; ++ix) {
            const double cx = -half_extent + (2 * ix + 1) * hx;
            const double cy = -half_extent + (2 * iy + 1) * hy;
            map.regions.push_back(Region::rect(cx, cy, hx, hy));
            map.phases.push_back(phase);
        }
    }
    return map;
}

SamplingGrid SamplingGrid::regular(int nx, int ny, double w_max, double mask_radius) {
    if (nx < 2 || ny < 2 || !(w_max > 0.0))
        throw std::invalid_argument("SamplingGrid::regular: bad grid");
    SamplingGrid g;
    g.mask_radius = mask_radius;
    g.wx.resize(nx);
    g.wy.resize(ny);
    for (int i = 0; i < nx; ++i)
        g.wx[i] = -w_max + 2.0 * w_max * i / (nx - 1);
    for (int j = 0; j < ny; ++j)
        g.wy[j] = -w_max + 2.0 * w_max * j / (ny - 1);
    return g;
}

cdouble region_integral(const Region& region, double wx, double wy, double envelope_a) {
    if (region.kind == Region::Kind::complement)
        throw std::domain_error("region_integral: complement is defined by the full map");
    const cdouble jx = num::window_fourier(envelope_a, region.center_x - region.half_w,
                                           region.center_x + region.half_w, wx);
    const cdouble jy = num::window_fourier(envelope_a, region.center_y - region.half_h,
                                           region.center_y + region.half_h, wy);
    return jx * jy;
}

namespace {
double gaussian_full_transform(double w, double a) {
    return std::sqrt(pi / a) * std::exp(-w * w / (4.0 * a));
}
} // namespace

ForwardModel::ForwardModel(const PhaseMap& map, const SamplingGrid& grid, double envelope_a,
                           double intensity_scale)
    : envelope_a_(envelope_a), scale_(intensity_scale) {
    map.validate();
    if (!(envelope_a > 0.0))
        throw std::invalid_argument("ForwardModel: envelope exponent must be > 0");
    n_regions_ = map.regions.size();

    std::vector<std::pair<double, double>> pts;
    for (double wy : grid.wy)
        for (double wx : grid.wx)
            if (std::hypot(wx, wy) >= grid.mask_radius)
                pts.emplace_back(wx, wy);
    n_points_ = pts.size();
    if (n_points_ == 0)
        throw std::domain_error("ForwardModel: mask removed every sampling point");

    // 1D window transforms per region edge pair, cached per axis value.
    base_.resize(n_points_);
    for (std::size_t p = 0; p < n_points_; ++p)
        base_[p] = gaussian_full_transform(pts[p].first, envelope_a_) *
                   gaussian_full_transform(pts[p].second, envelope_a_);

    factors_.assign(n_regions_ * n_points_, cdouble(0.0));
    std::vector<cdouble> rect_sum(n_points_, cdouble(0.0));
    std::size_t complement_index = n_regions_; // sentinel: none
    for (std::size_t r = 0; r < n_regions_; ++r) {
        const Region& reg = map.regions[r];
        if (reg.kind == Region::Kind::complement) {
            complement_index = r;
            continue;
        }
        // Tensor structure: 1D factors along each axis.
        std::vector<cdouble> jx(grid.wx.size()), jy(grid.wy.size());
        for (std::size_t i = 0; i < grid.wx.size(); ++i)
            jx[i] = num::window_fourier(envelope_a_, reg.center_x - reg.half_w,
                                        reg.center_x + reg.half_w, grid.wx[i]);
        for (std::size_t j = 0; j < grid.wy.size(); ++j)
            jy[j] = num::window_fourier(envelope_a_, reg.center_y - reg.half_h,
                                        reg.center_y + reg.half_h, grid.wy[j]);
        std::size_t p = 0;
        for (std::size_t j = 0; j < grid.wy.size(); ++j) {
            for (std::size_t i = 0; i < grid.wx.size(); ++i) {
                if (std::hypot(grid.wx[i], grid.wy[j]) < grid.mask_radius) continue;
                const cdouble v = jx[i] * jy[j];
                factors_[r * n_points_ + p] = v;
                rect_sum[p] += v;
                ++p;
            }
        }
    }
    if (complement_index < n_regions_) {
        for (std::size_t p = 0; p < n_points_; ++p)
            factors_[complement_index * n_points_ + p] = base_[p] - rect_sum[p];
    }
}

std::vector<cdouble> ForwardModel::amplitudes(const std::vector<double>& phases) const {
    if (phases.size() != n_regions_)
        throw std::domain_error("ForwardModel: phases do not match the region grid");
    std::vector<cdouble> psi(base_);
    for (std::size_t r = 0; r < n_regions_; ++r) {
        const cdouble coef = num::cis_minus_one(phases[r]);
        if (coef == cdouble(0.0)) continue;
        const cdouble* f = factors_.data() + r * n_points_;
        for (std::size_t p = 0; p < n_points_; ++p)
            psi[p] += coef * f[p];
    }
    return psi;
}

std::vector<double> ForwardModel::intensities(const std::vector<double>& phases) const {
    const std::vector<cdouble> psi = amplitudes(phases);
    std::vector<double> out(n_points_);
    for (std::size_t p = 0; p < n_points_; ++p)
        out[p] = scale_ * std::norm(psi[p]);
    return out;
}

std::vector<double> apply_template(const PhaseMap& map, const SignalTemplate& tmpl,
                                   double kappa) {
    if (tmpl.delta.size() != map.phases.size())
        throw std::domain_error("apply_template: template does not match the region grid");
    std::vector<double> phases(map.phases);
    for (std::size_t i = 0; i < phases.size(); ++i) {
        if (tmpl.delta[i] != 0.0)
            phases[i] += kappa * tmpl.delta[i] + tmpl.offset_phase;
    }
    return phases;
}

std::vector<double> ForwardModel::intensities_with_template(const PhaseMap& map,
                                                            const SignalTemplate& tmpl,
                                                            double kappa) const {
    return intensities(apply_template(map, tmpl, kappa));
}

double chi_square(const std::vector<double>& measured, const std::vector<double>& model) {
    if (measured.size() != model.size())
        throw std::domain_error("chi_square: sample size mismatch");
    if (measured.size() < 2)
        throw std::domain_error("chi_square: need at least two sampling points");
    double sum = 0.0;
    for (std::size_t i = 0; i < measured.size(); ++i) {
        const double denom = measured[i] + model[i];
        if (denom <= 0.0) continue; // both empty: no information
        const double d = measured[i] - model[i];
        sum += d * d / denom;
    }
    return sum / static_cast<double>(measured.size() - 1);
}

double chi_square_at(const ForwardModel& model, const std::vector<double>& measured,
                     const PhaseMap& map, const SignalTemplate& tmpl, double kappa) {
    return chi_square(measured, model.intensities_with_template(map, tmpl, kappa));
}

namespace {

// Golden-section minimization on [lo, hi] down to width tol.
template <typename F>
double golden_min(F&& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498948;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

FitResult fit_kappa(const ForwardModel& model, const std::vector<double>& measured,
                    const PhaseMap& map, const SignalTemplate& tmpl, const ScanSpec& scan) {
    if (!(scan.step > 0.0) || !(scan.max > scan.min))
        throw std::invalid_argument("fit_kappa: bad scan spec");
    if (measured.size() != model.n_points())
        throw std::domain_error("fit_kappa: measurement does not match the sampling grid");

    auto chi2 = [&](double kappa) { return chi_square_at(model, measured, map, tmpl, kappa); };

    const int n_steps = static_cast<int>(std::floor((scan.max - scan.min) / scan.step + 0.5));
    double best_k = scan.min;
    double best_chi2 = chi2(scan.min);
    int best_i = 0;
    for (int i = 1; i <= n_steps; ++i) {
        const double k = scan.min + i * scan.step;
        const double c = chi2(k);
        if (c < best_chi2) {
            best_chi2 = c;
            best_k = k;
            best_i = i;
        }
    }

    FitResult res;
    res.scan_step = scan.step;
    res.n_sampling_points = model.n_points();
    res.on_boundary = (best_i == 0 || best_i == n_steps);

    const double lo = std::max(scan.min, best_k - scan.step);
    const double hi = std::min(scan.max, best_k + scan.step);
    res.kappa_hat = golden_min(chi2, lo, hi, scan.step * scan.refine);
    res.chi2_min = chi2(res.kappa_hat);
    if (res.chi2_min > best_chi2) { // keep the better of grid vs refined
        res.kappa_hat = best_k;
        res.chi2_min = best_chi2;
    }
    return res;
}

ReconstructResult reconstruct_phase_map(const ForwardModel& model,
                                        const std::vector<double>& measured,
                                        const PhaseMap& initial,
                                        const ReconstructOptions& options) {
    initial.validate();
    std::size_t free_regions = 0;
    for (const auto& r : initial.regions)
        if (r.kind == Region::Kind::rect) ++free_regions;
    if (model.n_points() < free_regions)
        throw std::domain_error("reconstruct_phase_map: underdetermined (N_W < N_X)");
    if (measured.size() != model.n_points())
        throw std::domain_error("reconstruct_phase_map: measurement grid mismatch");

    ReconstructResult out;
    out.map = initial;
    std::vector<double>& phases = out.map.phases;
    const double scale = model.intensity_scale();
    const std::size_t n = model.n_points();

    // Current amplitude per point, updated in place region by region so
    // a candidate phase costs O(N_W) instead of O(N_W N_X).
    std::vector<cdouble> psi = model.amplitudes(phases);
    auto chi2_of_psi = [&](const std::vector<cdouble>& amp) {
        double sum = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            const double m = scale * std::norm(amp[p]);
            const double denom = measured[p] + m;
            if (denom <= 0.0) continue;
            const double d = measured[p] - m;
            sum += d * d / denom;
        }
        return sum / static_cast<double>(n - 1);
    };
    double chi2_prev = chi2_of_psi(psi);

    for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
        for (std::size_t r = 0; r < phases.size(); ++r) {
            if (initial.regions[r].kind == Region::Kind::complement)
                continue; // the complement is the phase reference
            const cdouble* f = model.region_factors(r);
            const cdouble cur = num::cis_minus_one(phases[r]);
            auto chi2_of = [&](double phi) {
                const cdouble diff = num::cis_minus_one(phi) - cur;
                double sum = 0.0;
                for (std::size_t p = 0; p < n; ++p) {
                    const double m = scale * std::norm(psi[p] + diff * f[p]);
                    const double denom = measured[p] + m;
                    if (denom <= 0.0) continue;
                    const double d = measured[p] - m;
                    sum += d * d / denom;
                }
                return sum / static_cast<double>(n - 1);
            };
            const double center = phases[r];
            double best = center;
            double best_chi2 = chi2_of(center);
            const int n_steps = static_cast<int>(
                std::floor((options.scan.max - options.scan.min) / options.scan.step + 0.5));
            for (int i = 0; i <= n_steps; ++i) {
                const double phi = center + options.scan.min + i * options.scan.step;
                const double c = chi2_of(phi);
                if (c < best_chi2) {
                    best_chi2 = c;
                    best = phi;
                }
            }
            double refined = golden_min(chi2_of, best - options.scan.step,
                                        best + options.scan.step,
                                        options.scan.step * options.scan.refine);
            if (chi2_of(refined) > best_chi2)
                refined = best;
            const cdouble diff = num::cis_minus_one(refined) - cur;
            for (std::size_t p = 0; p < n; ++p)
                psi[p] += diff * f[p];
            phases[r] = refined;
        }
        out.sweeps = sweep;
        const double chi2_now = chi2_of_psi(psi);
        const bool converged =
            chi2_prev - chi2_now < options.chi2_tolerance * std::max(chi2_prev, 1e-300);
        chi2_prev = chi2_now;
        if (converged)
            break;
    }
    out.chi2 = chi2_prev;
    return out;
}

} // namespace vacuumprobe::phasefit
