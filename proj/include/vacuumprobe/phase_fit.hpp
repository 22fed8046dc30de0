#ifndef VACUUMPROBE_PHASE_FIT_HPP
#define VACUUMPROBE_PHASE_FIT_HPP

// Inverse problem for the phase-contrast image: the probe amplitude is a
// Gaussian cut into regions R_i of constant phase phi_i,
//
//   psi(W) = sum_i (e^{i phi_i} - 1) I_i(W) + I_inf(W),
//   I_i(W) = int_{R_i} e^{-a(x^2+y^2)} e^{-i(wx x + wy y)} dx dy,
//
// and the focal intensity |psi|^2 is sampled away from the bright core.
// A physical-signal template delta_i scaled by kappa is superimposed on
// the background map (phi_i -> phi_i + kappa delta_i) and kappa is
// estimated by scanning a Poisson-flavoured chi^2.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace vacuumprobe::phasefit {

using cdouble = std::complex<double>;

struct Region {
    enum class Kind { rect, complement };
    Kind kind = Kind::rect;
    double center_x = 0.0, center_y = 0.0;
    double half_w = 0.0, half_h = 0.0;

    static Region rect(double cx, double cy, double hw, double hh);
    // Everything outside the union of the map's rectangles.
    static Region complement();
};

struct PhaseMap {
    std::vector<Region> regions;
    std::vector<double> phases;

    void validate() const; // sizes match, rects disjoint, <= 1 complement
    // 4x4-style pixel grid covering [-half, half]^2 plus the outside
    // complement as region 0 (the natural phase anchor).
    static PhaseMap pixel_grid(int n_x, int n_y, double half_extent, double phase = 0.0);
};

struct SignalTemplate {
    std::vector<double> delta;  // aligned with PhaseMap::regions
    double offset_phase = 0.0;  // extra plate phase on the template support
    std::string note;           // geometry provenance
};

struct ScanSpec {
    double min = -2.0;
    double max = 2.0;
    double step = 1e-2;
    double refine = 1e-4; // golden-section width target, in units of step
};

struct FitResult {
    double kappa_hat = 0.0;
    double chi2_min = 0.0;
    double scan_step = 0.0;
    std::size_t n_sampling_points = 0;
    bool on_boundary = false; // minimum at a scan edge: widen the range
};

// Tensor sampling grid on the focal plane with the bright core masked.
struct SamplingGrid {
    std::vector<double> wx, wy;
    double mask_radius = 0.0;

    static SamplingGrid regular(int nx, int ny, double w_max, double mask_radius);
    std::size_t total_points() const { return wx.size() * wy.size(); }
};

cdouble region_integral(const Region& region, double wx, double wy, double envelope_a);

// Precomputes the region transforms on the unmasked sampling points so
// chi^2 scans cost one complex dot product per point.
class ForwardModel {
  public:
    ForwardModel(const PhaseMap& map, const SamplingGrid& grid, double envelope_a,
                 double intensity_scale = 1.0);

    std::size_t n_points() const { return n_points_; }
    std::size_t n_regions() const { return n_regions_; }
    double envelope_a() const { return envelope_a_; }

    // |psi|^2 at every unmasked point for the given per-region phases.
    std::vector<double> intensities(const std::vector<double>& phases) const;

    // Background + scaled template: phi_i + kappa delta_i (+ offset on
    // the template support).
    std::vector<double> intensities_with_template(const PhaseMap& map,
                                                  const SignalTemplate& tmpl,
                                                  double kappa) const;

    // Complex amplitude per point, for incremental single-region updates.
    std::vector<cdouble> amplitudes(const std::vector<double>& phases) const;
    double intensity_scale() const { return scale_; }
    const cdouble* region_factors(std::size_t region) const {
        return factors_.data() + region * n_points_;
    }

  private:
    std::size_t n_points_ = 0;
    std::size_t n_regions_ = 0;
    double envelope_a_ = 1.0;
    double scale_ = 1.0;
    std::vector<cdouble> base_;     // I_inf at each point
    std::vector<cdouble> factors_;  // [region][point]
};

std::vector<double> apply_template(const PhaseMap& map, const SignalTemplate& tmpl,
                                   double kappa);

// chi^2(kappa) = 1/(N_W - 1) sum |I_meas - I_model|^2 / (I_meas + I_model).
double chi_square(const std::vector<double>& measured, const std::vector<double>& model);

double chi_square_at(const ForwardModel& model, const std::vector<double>& measured,
                     const PhaseMap& map, const SignalTemplate& tmpl, double kappa);

// Coarse scan over kappa followed by golden-section refinement around
// the best grid point.
FitResult fit_kappa(const ForwardModel& model, const std::vector<double>& measured,
                    const PhaseMap& map, const SignalTemplate& tmpl, const ScanSpec& scan);

struct ReconstructOptions {
    ScanSpec scan{-0.5, 0.5, 1e-3, 1e-4};
    int max_sweeps = 20;
    double chi2_tolerance = 1e-12; // relative improvement per sweep
};

struct ReconstructResult {
    PhaseMap map;
    double chi2 = 0.0;
    int sweeps = 0;
};

// Coordinate-wise phase recovery: raster scans of each rectangle's phase
// (the complement stays fixed as the reference). Requires at least as
// many sampling points as free regions.
ReconstructResult reconstruct_phase_map(const ForwardModel& model,
                                        const std::vector<double>& measured,
                                        const PhaseMap& initial,
                                        const ReconstructOptions& options = {});

} // namespace vacuumprobe::phasefit

#endif
