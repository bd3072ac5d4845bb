#ifndef TORICGB_ERRORS_HPP
#define TORICGB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toricgb {

// Bad user input (malformed configuration, unknown preset, cap exceeded).
// Maps to process exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A condition that correct code on valid input can never reach: a proved
// bound violated, a cross-oracle mismatch, an arithmetic overflow guard.
// Maps to process exit code 3.
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace toricgb

#endif
