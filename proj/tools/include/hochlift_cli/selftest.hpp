#pragma once

#include <cstdint>

#include "hochlift_cli/io.hpp"

namespace hochlift::cli {

/// Runs the invariant suites with the given seed. The report is a pure
/// function of the seed.
io::Json run_selftest(std::uint64_t seed);

}  // namespace hochlift::cli
