#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace macfrob {

/// Thrown when a computation would exceed a configured resource cap.
/// Callers can retry with a larger cap, a smaller instance, or a
/// sampling-based mode where one exists.
class SizeCapError : public std::runtime_error {
 public:
  explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the Hilbert-series fitter when the numerator does not
/// stabilize below the internal degree cap.
class NotStabilizedError : public std::runtime_error {
 public:
  explicit NotStabilizedError(const std::string& what) : std::runtime_error(what) {}
};

/// Resource caps shared by the expensive operations.
struct Caps {
  std::int64_t matrix_cells = 50'000'000;  // dense elimination refusal threshold
  std::int64_t enum_spaces = 1'000'000;    // max strongly stable spaces per enumeration
  std::int64_t sumset_size = 5'000'000;    // max monomials per Minkowski-sum level
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

}  // namespace macfrob
