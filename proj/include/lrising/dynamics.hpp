#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "lrising/ensembles.hpp"
#include "lrising/model.hpp"

namespace lrising {

// Complex amplitudes over the z computational basis (bit i of the index =
// spin down along z at site i). Unit norm within 1e-10.
struct StateVector {
    int L = 0;
    std::vector<std::complex<double>> amps;
    double norm() const;
};

struct EncodeOptions {
    int hard_cap = 24;
};

// Tensor product of single-spin states: |s_i> along x, optionally rotated
// by the global tilt about y.
StateVector encode_product_state(const ProductState& state, EncodeOptions opts = {});

struct ObservableRequest {
    bool sx2 = true;
    bool sz = true;
    bool energy = false;
    bool correlations = false;  // full <sx_i sx_j> matrix per time, L^2 cost
};

struct ObservableSeries {
    int L = 0;
    std::vector<double> times;
    std::vector<double> sx2;                  // <(sum sx)^2>/L^2
    std::vector<double> sz;                   // <sum sz>/L
    std::vector<double> energy;               // <H>, present if requested
    std::vector<double> norm;                 // <psi|psi>, always recorded
    std::vector<std::vector<double>> corr;    // per time, L*L row-major
};

enum class EvolveMethod { automatic, dense, krylov };

struct EvolveOptions {
    EvolveMethod method = EvolveMethod::automatic;
    int dense_cap = 14;        // eigendecomposition up to here
    int krylov_dim = 30;
    double krylov_step_tol = 1e-9;
    const SpectrumCache* cache = nullptr;  // reuse an existing spectrum
};

// <psi(t)|O|psi(t)> on the requested time grid. Dense eigendecomposition
// for L <= dense_cap, Lanczos propagation with adaptive substeps beyond.
ObservableSeries evolve_and_measure(const StateVector& psi0, const ModelSpec& model,
                                    const std::vector<double>& times,
                                    const ObservableRequest& what,
                                    const EvolveOptions& opts = {});

// The evolved state itself, back in the z basis (for shot sampling).
StateVector evolve_state(const StateVector& psi0, const ModelSpec& model, double t,
                         const EvolveOptions& opts = {});

struct TimeAverage {
    double T = 0.0;
    double sx2 = 0.0;
    double sz = 0.0;
};

// (1/T) integral_0^T O(t) dt by the trapezoidal rule on the sampled grid.
TimeAverage time_average(const ObservableSeries& series, double T);

// time_average evaluated at every grid point (running mean).
ObservableSeries running_average(const ObservableSeries& series);

enum class MeasureBasis { x, z };

// Projective measurement samples; key = outcome bitstring (measurement
// basis convention: bit i set = spin down at site i along the chosen
// axis), value = count. Reproducible under the seed.
std::map<std::uint64_t, int> sample_shots(const StateVector& state, MeasureBasis basis,
                                          int n_shots, std::uint64_t seed);

// Unbiased S_x^2 estimator from x-basis shot counts.
double sx2_from_x_shots(const std::map<std::uint64_t, int>& counts, int L);

}  // namespace lrising
