#pragma once

#include <stdexcept>
#include <string>

namespace excycles {

inline constexpr const char* kVersion = "0.1.0";

// RNG algorithm identifier embedded in every experiment report so published
// numbers stay replayable across releases.
inline constexpr const char* kRngId = "splitmix64+xoshiro256**-1.0";

/// Thrown when an exact algorithm is asked to run beyond its size guard.
/// The CLI maps this to exit code 3.
class SizeGuardError : public std::runtime_error {
public:
    explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when the redundant-blocker recursion exceeds depth k, which
/// certifies that the input graph has k+1 disjoint cycles.
class NotInExCyclesError : public std::runtime_error {
public:
    explicit NotInExCyclesError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace excycles
