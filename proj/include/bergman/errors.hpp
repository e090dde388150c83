#pragma once

#include <stdexcept>

namespace bergman {

/// A norm or integral came out non-finite (the function is outside the
/// space for the requested exponents). Distinct from a failed check.
struct divergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation point violates a pointwise precondition (|f| or |f'| too
/// close to 0 for the requested identity).
struct singular_point_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bergman
