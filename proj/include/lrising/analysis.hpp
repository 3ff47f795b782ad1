#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrising/ensembles.hpp"

namespace lrising {

// Binder cumulant from second and fourth moments of the order parameter
// (classical m or quantum S_x). m2 must be positive.
double binder_from_moments(double m2, double m4);

struct BinderCurve {
    int L = 0;
    std::vector<double> control;  // T or eps, strictly increasing
    std::vector<double> u4;
    std::vector<double> err;      // same length; zeros allowed
    std::string source;           // exact | monte-carlo | diagonal

    void validate() const;  // sizes and ordering (hard errors)
    // Points outside 0 <= U4 <= 2/3 + 3 err. Small-L corrections can
    // exceed the bound marginally, so callers flag these, never fail.
    std::vector<std::size_t> soft_bound_violations() const;
};

enum class CrossingStatus { found, none, degenerate };

struct Crossing {
    CrossingStatus status = CrossingStatus::none;
    double control = 0.0;  // crossing location
    double err = 0.0;
    double u4 = 0.0;       // Binder value at the crossing
    double u4_err = 0.0;
    int L_small = 0, L_big = 0;
};

struct CrossingOptions {
    int resamples = 200;
    std::uint64_t seed = 0x5ca1ab1e;
    double tol = 1e-5;
};

// Root of U4_A - U4_B between monotone-cubic interpolants of the two
// curves; error from resampling the curve points within their error bars.
// A missing bracketing sign change is a result, not an exception.
Crossing find_crossing(const BinderCurve& a, const BinderCurve& b,
                       CrossingOptions opts = {});

struct TcExtrapolation {
    double tc = 0.0;
    double err_stat = 0.0;   // from the weighted fit
    double err_syst = 0.0;   // fit with vs without the largest size
    double err = 0.0;        // combined
    double slope = 0.0;
    int n_points = 0;
};

// Weighted linear fit of crossing temperatures against 1/L_small.
TcExtrapolation extrapolate_tc(const std::vector<Crossing>& crossings);

struct ScalingFit {
    double tc = 0.0;
    double a = 0.0;
    double omega = 0.0;
    double theta_t = 0.0;
    double b = 0.0;
    double c = 0.0;
    double residual_u4 = 0.0;  // rms of the U4c stage
    double residual_tc = 0.0;  // rms of the Tc stage
    bool zero_dof = false;     // 3 points for 3 parameters; no error bars
};

// Two-stage fit: U4c(L) = b + c L^-omega first, then
// Tc(L) = Tc (1 + a L^-(omega+theta_t)) with omega frozen.
ScalingFit scaling_fit(const std::vector<Crossing>& crossings);

// Mean across the shared control window of the cross-size variance of
// U4((control - tc_of_L) * L^theta). theta = 0 with all tc equal gives
// the uncollapsed spread.
double collapse_spread(const std::vector<BinderCurve>& curves,
                       const std::vector<double>& tc_of_l, double theta);

// (g/J)/arctanh(g/J) for 0 <= g/J < 1 (limit 1 at g = 0); 0 beyond.
double mean_field_tc(double g_over_j);

struct CriticalPoint {
    double g = 0.0;
    double tc = 0.0, tc_err = 0.0;
    double eps_c = 0.0, eps_err = 0.0;
    std::string note;  // e.g. "small-L estimate"
};

struct PhaseDiagramGrid {
    std::vector<double> g_axis;    // ascending
    std::vector<double> eps_axis;  // ascending
    // row-major [eps][g]; absent cells hold NaN and absent = 1
    std::vector<double> sx2, sz;
    std::vector<std::uint8_t> absent;
    std::string ensemble;
    int L = 0;
    std::vector<CriticalPoint> critical_line;

    std::size_t cell(std::size_t ie, std::size_t ig) const {
        return ie * g_axis.size() + ig;
    }
};

// Assemble a rectangular (eps, g) grid from ensemble records. Cells with
// no record for any observable are marked absent; a cell with only part
// of the observables is a ragged-input error.
PhaseDiagramGrid assemble_phase_diagram(const std::vector<EnsembleResult>& results,
                                        const std::vector<CriticalPoint>& critical_line);

}  // namespace lrising
