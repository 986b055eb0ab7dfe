#pragma once

#include <stdexcept>
#include <string>

namespace regal {

// Invalid or incomparable inputs (bad parameters, mismatched agent sets,
// cyclic input where a tree is required, ...).
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A profile enumeration would exceed the configured cap.
struct EnumerationCapExceeded : ModelError {
  using ModelError::ModelError;
};

}  // namespace regal
