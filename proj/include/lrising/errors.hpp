#pragma once

#include <stdexcept>
#include <string>

namespace lrising {

// Bad sizes, out-of-range parameters, malformed inputs.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a declared capability bound (exhaustive-search cap,
// dense-diagonalization cap, state-vector cap). The message names the
// bound and the supported alternative.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative solver failed to reach its tolerance; message carries the
// achieved residual.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A Raman beatnote landed within the resonance guard of a motional mode.
struct NearResonanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Radial confinement too weak: the planned linear chain would buckle.
struct ZigzagInstabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Model outside what an algorithm supports (e.g. negative couplings in
// the ferromagnetic cluster update).
struct UnsupportedModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lrising
