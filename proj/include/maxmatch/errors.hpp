#pragma once

#include <stdexcept>

namespace maxmatch {

// Thrown when an operation would exceed its configured size cap.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace maxmatch
