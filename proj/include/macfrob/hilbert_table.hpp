#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace macfrob {

enum class Provenance { Exact, SampledLowerBound };

struct HilbertEntry {
  int j;
  std::int64_t value;
  Provenance provenance;
};

/// Values of a Hilbert function over a contiguous range j = 0..J.
/// Subalgebra tables anchor at H(0) = 1; ideal-growth tables anchor at
/// H(0) = u. The producer states which in `context`.
struct HilbertTable {
  std::string context;
  std::vector<HilbertEntry> entries;

  void validate() const;  // throws std::logic_error if not contiguous from 0
};

}  // namespace macfrob
