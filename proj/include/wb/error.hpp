#pragma once

#include <stdexcept>
#include <string>

namespace wb {

/* Thrown on invalid user-supplied data (bad partition strings, mismatched
 * sizes, non-prime characteristic).  The CLI maps this to exit code 1. */
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* Thrown when an internal invariant fails.  The CLI maps this to exit code 2.
 * Any instance of this escaping the library is a bug. */
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw validation_error(what);
}

inline void invariant(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

}  // namespace wb
