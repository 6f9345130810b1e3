#pragma once

#include <stdexcept>
#include <string>

namespace zzpa {

// Bad arguments or violated preconditions: the caller asked for something
// outside the contract (CLI maps this to exit code 2).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact check that was expected to hold did not (CLI exit code 1).
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A refinement or enumeration budget was exhausted before a verdict could be
// certified either way (CLI exit code 3). Never raised in place of a provable
// "no"; only when the procedure genuinely cannot decide within its caps.
struct undecided_error : std::runtime_error {
    explicit undecided_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace zzpa
