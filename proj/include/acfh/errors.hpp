#pragma once

#include <stdexcept>
#include <string>

namespace acfh {

// Eigenvalue solver did not converge under mesh refinement.
struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quotient with an identically vanishing denominator.
struct DegenerateField : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polar/frame operation requested on (or too close to) the center axis
// x = y = 0, where the horizontal frame degenerates.
struct CharacteristicAxis : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation at the pole of a kernel (the group origin).
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace acfh
