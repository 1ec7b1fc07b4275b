#pragma once

#include <stdexcept>
#include <string>

namespace mlab {

struct mlab_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested computation exceeds a configured size bound. Callers refuse
// instead of silently truncating; the CLI maps this to exit code 2.
struct bound_exceeded : mlab_error {
  using mlab_error::mlab_error;
};

// An operation's stated precondition does not hold. Exit code 2.
struct precondition_failed : mlab_error {
  using mlab_error::mlab_error;
};

// A construction invariant is violated (bad monoid, non-total map, ...).
struct validation_error : mlab_error {
  using mlab_error::mlab_error;
};

}  // namespace mlab
