#pragma once

#include <stdexcept>

namespace qoco {

// Malformed input, bad spec string, violated precondition. CLI exit code 2.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A size/state guard tripped (problem too large for the configured limits).
// CLI exit code 3.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qoco
