#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

#include "lrising/rng.hpp"

// Data-parallel inner loops of the state-vector engine and the cluster
// Monte Carlo, in two interchangeable backends: a scalar reference and an
// AVX2+FMA variant selected at runtime. Both backends use the same
// 4-lane-striped accumulation order, so results are bit-identical; the
// equivalence tests assert exact equality.

namespace lrising::kernels {

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_supported(Backend b);

// Active backend: best supported one by default, overridable via
// set_backend() or the LRISING_KERNEL_BACKEND environment variable
// ("scalar" / "avx2"), checked once on first use.
Backend active_backend();
void set_backend(Backend b);  // throws InvalidArgument if unsupported

struct Moments {
    double w0 = 0;  // sum w            (norm^2)
    double w1 = 0;  // sum w m
    double w2 = 0;  // sum w m^2
    double w3 = 0;  // sum w m^3
    double w4 = 0;  // sum w m^4
};

struct Kernels {
    // In-place unnormalized Walsh-Hadamard butterflies:
    // x[k] <- sum_b (-1)^{popcount(k & b)} x[b]. n must be a power of two.
    void (*fwht_real)(double* x, std::size_t n);
    void (*fwht_cplx)(std::complex<double>* x, std::size_t n);

    // y[b] = diag[b] * x[b]
    void (*diag_mul)(const double* diag, const std::complex<double>* x,
                     std::complex<double>* y, std::size_t n);

    // y[b] += coeff * sum_{i<nbits} x[b ^ (1<<i)]
    void (*hop_accumulate)(const std::complex<double>* x, std::complex<double>* y,
                           double coeff, int nbits);

    // Weighted magnetization moments with w_b = |x_b|^2.
    Moments (*weighted_moments)(const std::complex<double>* x, const double* m,
                                std::size_t n);

    // sum_i v[i]^2 w[i]
    double (*weighted_sq_dot)(const double* v, const double* w, std::size_t n);

    // sum_i a[i] b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);

    // sum_i conj(a[i]) b[i]
    std::complex<double> (*cdot)(const std::complex<double>* a,
                                 const std::complex<double>* b, std::size_t n);

    // Wolff bond scan over one coupling row. For each j in [0, n):
    // candidate iff accept_mask[j] != 0 and rng.uniform_at(ctr0 + j) <
    // p_row[j]; indices are appended to out in increasing j order.
    // Returns the number appended.
    int (*wolff_scan)(const double* p_row, const std::uint8_t* accept_mask,
                      int n, const CounterRng& rng, std::uint64_t ctr0,
                      std::int32_t* out);
};

// Dispatch table of the active backend.
const Kernels& active();
// Dispatch table of a specific backend (for equivalence tests).
const Kernels& table(Backend b);

namespace detail {
extern const Kernels scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
extern const Kernels avx2_table;
#endif
}  // namespace detail

}  // namespace lrising::kernels
