#pragma once

#include <cstdint>
#include <iosfwd>

namespace gp::cli {

// Runs the randomized invariant suites; one line per suite. Returns true when
// every suite passes.
bool selftest(std::uint64_t seed, std::ostream& out);

}  // namespace gp::cli
