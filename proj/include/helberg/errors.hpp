#pragma once

#include <stdexcept>

namespace helberg {

/// A received word could not be mapped back to a codeword.
struct decode_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration would exceed its configured budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace helberg
