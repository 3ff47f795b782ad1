#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lrising/model.hpp"

namespace lrising {

struct StateVector;  // dynamics.hpp

enum class Observable { sx2, sx4, sz };
const char* observable_name(Observable o);

// Full exact spectrum of the model Hamiltonian at L <= 14, split over the
// two global-spin-flip sectors of the x basis. Immutable after
// construction and safe to share across threads.
class SpectrumCache {
public:
    static constexpr int kMaxL = 14;

    explicit SpectrumCache(const ModelSpec& model);

    const ModelSpec& model() const { return model_; }
    int size() const { return model_.size(); }
    std::size_t dim() const { return energies_.size(); }  // 2^L

    // Ascending eigenvalues over both sectors.
    const std::vector<double>& energies() const { return energies_; }
    double ground_energy() const { return energies_.front(); }

    // <n|O|n> aligned with energies().
    const std::vector<double>& eigen_observable(Observable o) const;

    // Half-open [begin, end) runs of eigenvalues degenerate within
    // tolerance 1e-10 * J * L.
    const std::vector<std::pair<int, int>>& degeneracy_blocks() const { return blocks_; }
    double degeneracy_tolerance() const { return deg_tol_; }

    // Sector handle: s in {0 (+), 1 (-)}, dimension 2^(L-1).
    int sector_dim() const { return int(std::size_t(1) << (size() - 1)); }
    const std::vector<double>& sector_eigenvalues(int s) const { return evals_[s]; }
    const std::vector<double>& sector_eigenvectors(int s) const { return evecs_[s]; }
    // global index -> (sector, column)
    const std::vector<std::pair<std::uint8_t, int>>& order() const { return order_; }
    const std::vector<double>& sector_diag() const { return diag_; }  // D(r)
    const std::vector<double>& sector_mag() const { return mag_; }    // m(r)

private:
    ModelSpec model_;
    std::vector<double> diag_, mag_;
    std::vector<double> evals_[2];
    std::vector<double> evecs_[2];
    std::vector<double> energies_;
    std::vector<std::pair<std::uint8_t, int>> order_;
    std::vector<std::pair<int, int>> blocks_;
    std::vector<double> obs_sx2_, obs_sx4_, obs_sz_;
    double deg_tol_ = 0.0;
};

struct EnsembleResult {
    double eps = 0.0;  // energy density E/(J L)
    Observable observable = Observable::sx2;
    double value = 0.0;
    std::string ensemble;  // time-averaged | diagonal | canonical | microcanonical | monte-carlo
    double g = 0.0, J = 1.0;
    int L = 0;
    double gamma = 0.0;
    std::string provenance;
    double T = 0.0;  // canonical only
};

// Dense spectrum for L <= 14; larger sizes get a CapabilityError pointing
// at the Monte Carlo (g = 0) or dynamics-only workflows.
SpectrumCache diagonalize(const ModelSpec& model);

// Infinite-time average of O from |psi0>: sum over degenerate blocks of
// <psi|P_B O P_B|psi>; reduces to sum_n |<n|psi>|^2 <n|O|n> when the
// spectrum is nondegenerate.
double diagonal_ensemble(const StateVector& psi0, const SpectrumCache& cache,
                         Observable obs);

// Tr[O e^{-H/T}] / Tr[e^{-H/T}] with the max-shift trick.
EnsembleResult canonical_expectation(const SpectrumCache& cache, Observable obs, double T);

// Canonical energy density at temperature T.
double canonical_energy_density(const SpectrumCache& cache, double T);

struct MicrocanonicalResult {
    double value = 0.0;
    double window = 0.0;  // final window after any widening
    int count = 0;        // eigenstates inside
    bool widened = false;
};

// Mean of <n|O|n> over |E_n - E| < window/2; default window 0.05*J*L,
// widened geometrically until it holds >= 10 eigenstates.
MicrocanonicalResult microcanonical_expectation(const SpectrumCache& cache, Observable obs,
                                                double E, double window = 0.0);

// Bisection on the canonical energy density; |eps(T) - E/L| < 1e-6 J.
double invert_energy_to_temperature(const SpectrumCache& cache, double E);

}  // namespace lrising
