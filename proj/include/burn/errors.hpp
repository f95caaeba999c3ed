#ifndef BURN_ERRORS_HPP
#define BURN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace burn {

/// Malformed input text (edge lists, schedule files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation that requires a connected graph received a disconnected one.
struct NotConnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A schedule violated the burning process rules (e.g. strict-mode source
/// already burned).
struct ScheduleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A guarantee the algorithms establish internally did not hold. Indicates a
/// bug, never bad user input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

namespace detail {

inline void require_internal(bool cond, const std::string& what) {
    if (!cond) throw InternalError("internal invariant violated: " + what);
}

} // namespace detail

} // namespace burn

#endif // BURN_ERRORS_HPP
