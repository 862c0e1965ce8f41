#pragma once

#include <stdexcept>
#include <string>

namespace cltk {

// Rejected input or violated call contract (CLI maps this to exit code 2).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural identity that must hold was violated by a computation
// (wrong solution-space dimension, sign law failure, ...).  If one of
// these fires, either the build is corrupted or an assumption baked into
// the library is wrong.  CLI maps this to exit code 3.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Work refused because it exceeds a configured size bound.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cltk
