#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lrising {

enum class Provenance { ideal, unnormalized, ion_derived };

const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

// Symmetric L x L pairwise couplings in units of J, zero diagonal. The
// Hamiltonian convention is fixed here once and consumed identically by
// dynamics, ensembles and Monte Carlo:
//   H = -sum_{i<j} J_ij sx_i sx_j - g sum_i sz_i
// i.e. the Kac factor J/(2N) is already folded into the entries.
class CouplingMatrix {
public:
    CouplingMatrix() = default;
    CouplingMatrix(int L, std::vector<double> entries, Provenance prov,
                   std::optional<double> gamma = std::nullopt);

    int size() const { return L_; }
    double operator()(int i, int j) const { return j_[std::size_t(i) * L_ + j]; }
    const std::vector<double>& entries() const { return j_; }
    const double* row(int i) const { return j_.data() + std::size_t(i) * L_; }
    Provenance provenance() const { return prov_; }
    std::optional<double> gamma() const { return gamma_; }

    // Distance-averaged profile Jbar(l) = sum_i J_{i,i+l} / (L-l).
    std::vector<double> distance_profile() const;

private:
    int L_ = 0;
    std::vector<double> j_;
    Provenance prov_ = Provenance::ideal;
    std::optional<double> gamma_;
};

struct ModelSpec {
    CouplingMatrix couplings;
    double g = 0.0;  // transverse field, units of J
    double J = 1.0;  // energy unit
    int size() const { return couplings.size(); }
};

// x-basis product state: s_i = +1 ("u") or -1 ("d") per site, plus an
// optional global tilt about the y axis.
struct ProductState {
    std::vector<std::int8_t> spins;
    double tilt = 0.0;

    int size() const { return static_cast<int>(spins.size()); }
    std::string to_string() const;            // e.g. "dduud"
    static ProductState from_string(const std::string& s, double tilt = 0.0);
    static ProductState polarized(int L, int sign = -1);
    ProductState flipped() const;
};

// N = (1/(L-1)) sum_{i<j} exp(-(gamma/L)|i-j|); equals L/2 at gamma = 0.
double kac_normalization(int L, double gamma);

// J_ij = J/(2N) * exp(-(gamma/L)|i-j|), all positive, translation invariant.
CouplingMatrix build_ideal_couplings(int L, double gamma, double J = 1.0);

// J_ij = exp(-(gamma/denominator)|i-j|); no Kac rescaling, no L dependence.
CouplingMatrix build_unnormalized_couplings(int L, double gamma,
                                            double denominator = 13.0);

// E = -sum_{i<j} J_ij s_i s_j. Requires tilt = 0 (the field term then
// contributes exactly zero).
double product_state_energy(const ProductState& state, const ModelSpec& model);

// <H^2> - <H>^2 = g^2 L for tilt = 0: the coupling part is diagonal on
// x-product states, only the field term fluctuates.
double product_state_energy_variance(const ProductState& state, const ModelSpec& model);

struct SelectedState {
    ProductState state;
    double energy = 0.0;
    double target = 0.0;
};

struct StateSelection {
    std::vector<SelectedState> states;  // duplicates collapsed, target order
    std::vector<std::string> notes;     // near-degenerate ties, one line each
};

struct SelectOptions {
    int exhaustive_cap = 26;   // largest L for the full 2^L scan
    bool use_heuristic = false;  // greedy bit flips beyond the cap
    int threads = 0;           // 0 = hardware default
};

// Targets equally spaced on [E_min, E_max] with E_min the fully polarized
// energy; per target, the x-product state of closest energy over all 2^L,
// ties broken toward the lexicographically smallest spin string (d < u).
StateSelection select_initial_states(const ModelSpec& model, int n_targets,
                                     double e_max = 0.0, SelectOptions opts = {});

// Energy of every x-product state, indexed by bitmask (bit i set = spin
// down at site i). Gray-code scan, O(L 2^L).
std::vector<double> product_state_energy_table(const CouplingMatrix& couplings);

// Magnetization sum_i s_i per bitmask, same indexing as the energy table.
std::vector<double> magnetization_table(int L);

}  // namespace lrising
