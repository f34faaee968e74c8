#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dominoes/enumeration.hpp"
#include "dominoes/genpoly.hpp"
#include "dominoes/partition.hpp"

namespace dominoes {

enum class Backend { paths, tilings };

// Sum of z^diags q^area t^dinv over the families (or tilings) of the shape.
GenPoly3 p_lambda(const Partition& shape, Backend backend = Backend::paths, const EnumerationLimits& limits = {},
                  int jobs = 1);

// (qt)^(n^2 (n-1)/2) times the product of (z + q^i t^j) over i + j < n.
GenPoly3 ad_product(int n);

bool check_symmetry(const GenPoly3& p);

struct ConjectureOutcome {
  bool divisible = false;
  GenPoly3 quotient;  // the partial quotient when a division fails
  bool nonnegative = false;
  std::optional<std::pair<int, int>> failing_factor;  // (i, j) of z + q^i t^j
};

// Divides p successively by z + q^i t^j for all i + j < rank.
ConjectureOutcome conjecture_quotient(const GenPoly3& p, int rank);
ConjectureOutcome conjecture_quotient(const Partition& shape, const EnumerationLimits& limits = {}, int jobs = 1);

}  // namespace dominoes
