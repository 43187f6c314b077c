#pragma once

#include <stdexcept>
#include <string>

namespace rhoq {

/// Constant term of the series is not +1 or -1, so no integral inverse exists.
struct NotAUnit : std::domain_error {
    using std::domain_error::domain_error;
};

/// Coefficient requested beyond the truncation order. Truncated series know
/// nothing about higher coefficients, so this never silently yields zero.
struct IndexBeyondOrder : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Membership predicates exist only for undecorated families; decorated
/// families (overpartitions, colored, cubic) carry multiplicities instead.
struct NotAPredicateFamily : std::domain_error {
    using std::domain_error::domain_error;
};

/// The family has no closed-form product generating function.
struct NoSeriesForm : std::domain_error {
    using std::domain_error::domain_error;
};

/// Operation is defined only for even arguments.
struct OddArgument : std::domain_error {
    using std::domain_error::domain_error;
};

/// An enumeration-backed check was requested beyond the configured budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rhoq
