#pragma once

#include <stdexcept>
#include <string>

namespace hyperred {

/// Construction of a rational with denominator zero.
struct ZeroDenominator : std::domain_error {
    using std::domain_error::domain_error;
};

/// An exact value does not fit into a double.
struct Overflow : std::range_error {
    using std::range_error::range_error;
};

/// A denominator Pochhammer vanishes at the queried multi-index.
struct PoleAtIndex : std::domain_error {
    using std::domain_error::domain_error;
};

/// A denominator Pochhammer vanishes somewhere inside the truncation region.
struct PoleWithinTruncation : std::domain_error {
    using std::domain_error::domain_error;
};

/// A series argument with nonzero coefficient has degree zero, so coefficient
/// extraction in x would not terminate.
struct DegreeZeroArgument : std::domain_error {
    using std::domain_error::domain_error;
};

/// Floating-point summation hit the term budget before the stopping rule fired.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A denominator Pochhammer in a reduction prefactor is zero.
struct PolarPrefactor : std::domain_error {
    using std::domain_error::domain_error;
};

/// Identity id not present in the registry.
struct UnknownIdentity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parameter sampling gave up after too many polar rejections.
struct SamplerExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structurally invalid input (zero-weight parameter, malformed JSON, ...).
struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace hyperred
