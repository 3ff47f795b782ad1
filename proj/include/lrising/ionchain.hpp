#pragma once

#include <vector>

#include "lrising/model.hpp"

namespace lrising {

// Trap and beam parameters are typed in the units the hardware papers
// quote (eV/mm^2, eV/mm^4, 2pi x MHz, um); conversions to SI happen
// internally.
struct TrapConfig {
    int n_ions = 2;
    double c2 = 0.0;          // axial quadratic coefficient, eV/mm^2
    double c4 = 0.0;          // axial quartic coefficient, eV/mm^4
    double omega_com = 0.0;   // radial COM angular frequency, rad/s
    double mass_amu = 171.0;  // ion mass

    void validate() const;
};

enum class DenominatorConvention {
    mode_detuning,  // D_k = Delta + omega_N - omega_k (beatnote measured from the lowest mode)
    as_printed      // D_k = Delta - omega_N - omega_k
};

struct BeamConfig {
    std::vector<double> rabi;  // relative amplitudes per ion; 0 = beam off
    double eta0 = 0.08;        // Lamb-Dicke scale
    double detuning = 0.0;     // Delta, rad/s, signed
    bool staggered = true;     // multiply J_ij by (-1)^(i+j)
    DenominatorConvention convention = DenominatorConvention::mode_detuning;

    void validate(int n_ions) const;
    // Uniform beams with `off_each_side` edge beams switched off.
    static std::vector<double> uniform_masked(int n_ions, int off_each_side);
};

struct ModeSpectrum {
    std::vector<double> positions_um;  // strictly increasing
    std::vector<double> omegas;        // rad/s, sorted decreasing (omega_1 = COM)
    std::vector<double> b;             // participation, row-major b[i*N + k]
    int n() const { return int(omegas.size()); }
    double participation(int ion, int mode) const { return b[std::size_t(ion) * n() + mode]; }
};

struct EquilibriumOptions {
    int max_iterations = 200;
    double grad_tol = 1e-10;  // relative to the natural force scale
};

// Minimizer of sum_i V(x_i) + sum_{i<j} ke^2/|x_i - x_j| by damped Newton
// from the uniform-spacing ansatz. Returns sorted positions in um.
std::vector<double> solve_equilibrium_positions(const TrapConfig& trap,
                                                EquilibriumOptions opts = {});

// Radial normal modes: diagonalize A_ij = delta_ij (w1^2 - sum_k K/(m d_ik^3))
//                                       + (1-delta_ij) K/(m d_ij^3).
// The uniform vector is an exact eigenvector at the COM frequency.
ModeSpectrum compute_radial_modes(const std::vector<double>& positions_um,
                                  const TrapConfig& trap);

// J_ij = sum_k eta_ik eta_jk Omega_i Omega_j / (2 D_k), eta = eta0 b;
// staggering multiplies by (-1)^(i+j); rows/columns of switched-off beams
// are removed. Provenance: ion-derived. Guard: |D_k| >= 2pi x 1 kHz.
CouplingMatrix synthesize_couplings(const ModeSpectrum& spectrum, const BeamConfig& beams);

struct CalibratedCouplings {
    double j_scale = 0.0;        // max_ij J_ij, in the synthesized units
    CouplingMatrix normalized;   // entries divided by j_scale
};

CalibratedCouplings calibrate_to_target(const CouplingMatrix& couplings);

// Bridge from the max-normalized experimental matrix to model units:
// least-squares scale onto the Kac-normalized target exp(-(gamma/L)|i-j|)
// so the realized couplings can be consumed by the same Hamiltonian
// convention as the ideal ones (polarized energy densities then line up
// with the target model).
CouplingMatrix match_to_ideal_scale(const CouplingMatrix& normalized, double gamma);

// 2pi x MHz -> rad/s etc.
constexpr double two_pi = 6.283185307179586476925287;
inline double mhz_to_rad_s(double mhz) { return two_pi * mhz * 1e6; }
inline double khz_to_rad_s(double khz) { return two_pi * khz * 1e3; }

// The paper's 23 relative Rabi amplitudes for the L=23 configuration.
const std::vector<double>& rabi_profile_23();

}  // namespace lrising
