#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dominoes/enumeration.hpp"
#include "dominoes/genpoly.hpp"
#include "dominoes/partition.hpp"
#include "dominoes/schroeder.hpp"

namespace dominoes {

struct NorthStep {
  int path = 0;
  int row = 0;  // the step runs from (x, row) to (x, row + 1)
  int x = 0;
  int diagonal() const { return row - x; }
  friend bool operator==(const NorthStep&, const NorthStep&) = default;
};

// A weakly nested family of Dyck paths: paths may touch and share north steps,
// but never cross, share east steps, or pass through another path's start.
class NestedDyckFamily {
 public:
  // One N/E string per j; empty strings for paths of length zero.
  static NestedDyckFamily from_steps(const Partition& shape, const std::vector<std::string>& steps);

  const Partition& shape() const { return shape_; }
  const StripProfile& profile() const { return profile_; }
  const std::vector<std::string>& steps() const { return steps_; }
  // Ordered by path, then by row.
  const std::vector<NorthStep>& north_steps() const { return north_; }
  int size() const { return static_cast<int>(north_.size()); }

  std::string to_debug_string() const;

 private:
  NestedDyckFamily(Partition shape, StripProfile profile, std::vector<std::string> steps);
  Partition shape_;
  StripProfile profile_;
  std::vector<std::string> steps_;
  std::vector<NorthStep> north_;
};

// Labels aligned with NestedDyckFamily::north_steps().
using Labeling = std::vector<int>;

bool is_valid_labeling(const NestedDyckFamily& family, const Labeling& labels);

// Indices into north_steps() in reading order: diagonals farthest from y = x
// first, top to bottom, and inner paths first on coinciding edges.
std::vector<int> reading_order(const NestedDyckFamily& family);
std::vector<int> reading_word(const NestedDyckFamily& family, const Labeling& labels);
std::string word_to_string(std::span<const int> word, bool commas);

// Replaces the i-th occurrence (left to right) of the smallest value by i, and so on.
std::vector<int> standardize_word(std::span<const int> word);
Labeling standardize(const NestedDyckFamily& family, const Labeling& labels);

int area_labeled(const NestedDyckFamily& family);
int dinv_pairs_labeled(const NestedDyckFamily& family, const Labeling& labels);
int dinv_labeled(const NestedDyckFamily& family, const Labeling& labels, int adj_lambda);

// word must be a permutation of 1..n.
bool is_mu_shuffle(std::span<const int> word, const Partition& mu);
bool is_mu_eta_shuffle(std::span<const int> word, const Partition& mu, const Partition& eta);

void for_each_weak_family(const Partition& shape, const std::function<void(const NestedDyckFamily&)>& visit,
                          const EnumerationLimits& limits = {});
std::vector<NestedDyckFamily> enumerate_weak_families(const Partition& shape, const EnumerationLimits& limits = {});

// Every valid labeling with labels in 1..max_label.
void for_each_labeling(const NestedDyckFamily& family, int max_label,
                       const std::function<void(const Labeling&)>& visit);
void for_each_standard_labeling(const NestedDyckFamily& family, const std::function<void(const Labeling&)>& visit);

// Sum of t^dinv over labelings using label i exactly mu_i times.
GenPoly3 coeff_on_monomial(const NestedDyckFamily& family, const Partition& mu);
// Sum of t^dinv over standard labelings whose reading word is a mu-shuffle.
GenPoly3 shuffle_coefficient(const NestedDyckFamily& family, const Partition& mu);

// The Schroeder family obtained by turning each north step labelled above
// n - d, together with the east step after it, into a diagonal step.
SchroederFamily to_schroeder(const NestedDyckFamily& family, const Labeling& labels, int d);

struct LabeledSchroederCheck {
  bool ok = false;
  GenPoly3 labeled_side;     // z^d times a polynomial in q and t
  GenPoly3 schroeder_side;   // same normalization
  std::string detail;
};

// Compares the shuffle-filtered labeled sum with the Schroeder families having
// d diagonal steps, both as polynomials and through the explicit bijection.
LabeledSchroederCheck labeled_schroeder_check(const Partition& shape, int d, const EnumerationLimits& limits = {});

// Sum over d of z^d times the shuffle-filtered labeled sum.
GenPoly3 labeled_generating_polynomial(const Partition& shape, const EnumerationLimits& limits = {});

struct CheckReport {
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

// Standardization keeps labelings valid, standardizes the reading word and
// preserves dinv, over every labeling with labels up to max_label.
CheckReport check_standardization(const Partition& shape, int max_label, const EnumerationLimits& limits = {});
// coeff_on_monomial agrees with shuffle_coefficient for every family and every
// partition mu of |shape|.
CheckReport check_monomial_coefficients(const Partition& shape, const EnumerationLimits& limits = {});

std::string to_debug_string(const NestedDyckFamily& family, const Labeling& labels);

}  // namespace dominoes
