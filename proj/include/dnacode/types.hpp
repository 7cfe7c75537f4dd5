#pragma once

#include <limits>

namespace dnacode {

/// Maximum run argument meaning "no run constraint".
inline constexpr unsigned kNoRunLimit = std::numeric_limits<unsigned>::max();

/// Which weights count as nearly balanced: |w/n - 1/2| < a (strict) or
/// |w/n - 1/2| <= a (inclusive).
enum class BoundaryMode { strict, inclusive };

enum class Alphabet { binary, quaternary };

}  // namespace dnacode
