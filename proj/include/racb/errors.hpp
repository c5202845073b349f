// Shared error types and search caps.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace racb {

// Thrown when an enumeration hits its node/chamber budget before reaching a
// conclusive answer. Callers must treat this as "inconclusive", never as a value.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Default budget for word-level searches (canonical forms visited).
inline constexpr std::size_t kDefaultSearchCap = 10'000'000;

// Default budget for chamber enumerations in a building.
inline constexpr std::size_t kDefaultChamberCap = 1'000'000;

}  // namespace racb
