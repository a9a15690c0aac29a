#pragma once

#include <stdexcept>
#include <string>

namespace qfrob {

// Bad user input or parameters (CLI maps this to exit status 2).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation would leave the configured (A_max, T_max) box.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

struct WindowTooSmallError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qfrob
