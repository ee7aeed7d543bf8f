#pragma once

#include <stdexcept>
#include <string>

namespace bethecount {

// Bad arguments or malformed input (CLI maps this to exit code 2).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A resource guard refused to run an enumeration (CLI exit code 3).
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed. Multiplicities count states and must be
// nonnegative; a negative value signals a bug, not a result.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace bethecount
