#pragma once

#include <ostream>

namespace regal::cli {

inline constexpr const char* kVersion = "0.1.0";

// Runs one invocation. Exit code 0: the queried property holds (or the
// command succeeded), 1: the property was refuted, 2: usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace regal::cli
