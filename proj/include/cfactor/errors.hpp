#pragma once

#include <stdexcept>
#include <string>

namespace cfactor {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition on an operation's input was violated.
struct invalid_input_error : error {
    using error::error;
};

/// A polynomial that must act as a recurrence operator has a zero root
/// (zero constant term).
struct zero_root_error : error {
    using error::error;
};

/// Root extraction hit an irrational root; the caller may supply the
/// roots explicitly instead.
struct not_split_over_rationals_error : error {
    using error::error;
};

/// A brute-force reference routine was asked for an instance beyond its
/// hard size guard.
struct too_large_error : error {
    using error::error;
};

/// No recurrence of admissible order fits the given terms.
struct no_recurrence_error : error {
    using error::error;
};

/// The only recurrences fitting the terms have a zero trailing
/// coefficient, which no recurrence operator may have.
struct degenerate_recurrence_error : error {
    using error::error;
};

/// An internal consistency check failed; indicates a bug.
struct internal_error : error {
    using error::error;
};

} // namespace cfactor
