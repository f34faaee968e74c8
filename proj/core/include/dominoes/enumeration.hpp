#pragma once

#include <stdexcept>
#include <string>

namespace dominoes {

// Size guards for exhaustive enumeration.
struct EnumerationLimits {
  int max_size = 10;    // |lambda| for the paths backend
  int max_cells = 200;  // region cells for the tiling backend
};

// Deterministic partition of an enumeration: a worker keeps every jobs-th
// subtree at the split level, starting from its own index.
struct WorkSplit {
  int worker = 0;
  int jobs = 1;
  bool keeps(long long counter) const { return jobs <= 1 || counter % jobs == worker; }
};

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dominoes
