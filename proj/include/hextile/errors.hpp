#pragma once

#include <stdexcept>
#include <string>

namespace hextile {

// Bad argument (zero argument, |p| >= 1, invalid shape, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated product failed to converge within the term budget.
struct policy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A denominator theta factor vanished; `index` identifies the offending
// factor when there is a natural indexing.
struct pole_error : std::runtime_error {
    long index = -1;
    explicit pole_error(const std::string& what, long idx = -1)
        : std::runtime_error(what), index(idx) {}
};

// Argument landed on (or within snapping distance of) a lattice zero.
struct zero_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters too close to a theta zero for the requested quantity.
struct degenerate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Regime not covered by the implementation (complex p positivity, |q|=1 gamma).
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration or state space larger than the configured guard.
struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal chain state violated an invariant (indicates an upstream bug).
struct state_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Probability-bearing quantity with |Im|/|Re| above tolerance, or branch
// inconsistency in a fixed-square-root computation.
struct configuration_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hextile
