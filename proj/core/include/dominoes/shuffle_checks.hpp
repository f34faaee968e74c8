#pragma once

#include <string>
#include <vector>

namespace dominoes {

// Outcome of the exhaustive shuffle checks on the extended Aztec diamond of order n.
struct ShuffleReport {
  int n = 0;
  long long tilings = 0;        // tilings of the extended diamond of order n
  long long odd_deficient = 0;  // distinct odd-deficient tilings
  long long checks = 0;         // individual identities evaluated
  long long failure_count = 0;
  std::vector<std::string> failures;  // first few, each with a serialized witness

  bool ok() const { return failure_count == 0; }
  std::string summary() const;
};

// Checks, for every tiling T of the extended diamond of order n:
//  - the north-east sum table on both extended ASMs,
//  - dinv1 = tp - 1 and dinv2 = tp - [y = 0] per vertical domino (bottom-row
//    forced dominoes need the attached row for the first identity),
// and for every odd-deficient tiling T_o with m holes and T_e = S(T_o):
//  - m + n + 1 even holes, M_e(T_o) = M_o(T_e), diags(T_e) = diags(T_o),
//  - area(T_e) = area(T_o) - diags(T_o) + n(2n+1) - m,
//  - dinv(T_e) = dinv(T_o) + n^2 + n(n+1)/2,
//  - hole levels against horizontal-domino areas,
//  - the multiset {l_j} minus {k_i} = {0..n} and the reading-word pairing,
//  - the generating functions of all completions of T_o and T_e,
// and finally that the completions of all T_e are exactly the tilings of order
// n + 1 with the product recursion between the two orders.
ShuffleReport verify_shuffle(int n, int jobs = 1);

}  // namespace dominoes
