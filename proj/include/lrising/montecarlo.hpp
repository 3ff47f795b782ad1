#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrising/model.hpp"
#include "lrising/rng.hpp"

namespace lrising {

// Classical spin configuration for the g = 0 model, with the energy
// maintained incrementally across cluster flips and auditable against a
// full recompute.
class SpinConfiguration {
public:
    SpinConfiguration(int L, const CounterRng& rng);  // hot start

    int size() const { return int(spins_.size()); }
    const std::vector<std::int8_t>& spins() const { return spins_; }
    double energy() const { return energy_; }
    int magnetization_sum() const { return mag_sum_; }

    void set_energy(double e) { energy_ = e; }
    double recompute_energy(const CouplingMatrix& couplings) const;

private:
    friend class WolffSampler;
    std::vector<std::int8_t> spins_;
    std::vector<double> spins_d_;  // double mirror for vectorized row dots
    double energy_ = 0.0;
    int mag_sum_ = 0;
};

// Wolff cluster update for ferromagnetic long-range couplings: bonds
// between aligned spins activate with p_ij = 1 - exp(-2 J_ij / T); the
// grown cluster is flipped. Bond probabilities are tabulated per
// temperature; cluster growth scans coupling rows (O(L) per added site).
class WolffSampler {
public:
    WolffSampler(const CouplingMatrix& couplings, double T);

    // One cluster update; returns the cluster size.
    int update(SpinConfiguration& config, CounterRng& rng);

    double temperature() const { return temperature_; }
    const CouplingMatrix& couplings() const { return couplings_; }

private:
    CouplingMatrix couplings_;
    double temperature_;
    std::vector<double> bond_prob_;  // L x L, row-major
    std::vector<std::int32_t> stack_, added_;
    std::vector<std::uint8_t> in_cluster_, accept_mask_;
};

struct McEstimate {
    int L = 0;
    double T = 0.0;
    double gamma = 0.0;
    std::string provenance;
    double abs_m = 0.0, abs_m_err = 0.0;
    double m2 = 0.0, m2_err = 0.0;
    double m4 = 0.0, m4_err = 0.0;
    double eps = 0.0, eps_err = 0.0;  // energy density E/L
    long n_samples = 0;
    int cadence = 0;  // cluster updates between measurements
    std::uint64_t seed = 0;
    // Per-block means (64 blocks) retained for bootstrap propagation.
    std::vector<double> block_abs_m, block_m2, block_m4, block_eps;
};

struct ChainOptions {
    int n_blocks = 64;
    int bootstrap_resamples = 256;
    long audit_interval = 100000;  // updates between energy audits
    int fixed_cadence = 0;         // 0 = adaptive ceil(L / mean cluster size)
};

// Burn in, pick the measurement cadence from the burn-in mean cluster
// size, then record n_measure samples. Fully reproducible under the seed.
McEstimate run_chain(const CouplingMatrix& couplings, double T, long n_measure,
                     long n_burn, std::uint64_t seed, ChainOptions opts = {});

struct BinderValue {
    double u4 = 0.0;
    double err = 0.0;
};

// U4 = 1 - <m^4> / (3 <m^2>^2), error by block bootstrap.
BinderValue u4_from_estimate(const McEstimate& est);

// Inverse-variance-weighted merge of same-parameter chains.
McEstimate merge_estimates(const std::vector<McEstimate>& chains);

}  // namespace lrising
