#pragma once

#include <stdexcept>
#include <string>

namespace hardlef {

/// Malformed or inconsistent user input (bad file, bad rational string,
/// failed precondition on data supplied from outside). CLI exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Violation of an internal invariant the engine itself guarantees
/// (e.g. a Lefschetz image that fails to be closed). CLI exit code 3.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void internal_check(bool ok, const std::string& msg) {
    if (!ok) throw InternalError(msg);
}

}  // namespace hardlef
