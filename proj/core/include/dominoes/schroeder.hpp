#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dominoes/enumeration.hpp"
#include "dominoes/genpoly.hpp"
#include "dominoes/partition.hpp"

namespace dominoes {

struct AreaEntry {
  int value = 0;
  bool decorated = false;  // the path takes a diagonal step in this row
  friend bool operator==(const AreaEntry&, const AreaEntry&) = default;
};
using AreaRow = std::vector<AreaEntry>;

// One defined entry of an area array, flattened: row index i, value, decoration.
struct FlatEntry {
  int row = 0;
  int value = 0;
  bool decorated = false;
};

// Raised when steps or an area array do not describe a valid family.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(int path, int x, int y, const std::string& reason);
  int path() const { return path_; }
  std::pair<int, int> point() const { return {x_, y_}; }

 private:
  int path_;
  int x_;
  int y_;
};

struct Statistics {
  int diags = 0;
  int area = 0;
  int dinv = 0;
  Exponent exponent() const { return {diags, area, dinv}; }
  friend bool operator==(const Statistics&, const Statistics&) = default;
};

// A family of non-intersecting Schroeder paths, path j running from (j,j) to
// (j+n_j, j+n_j), stored as its decorated area array.
class SchroederFamily {
 public:
  // rows[j] must be empty exactly when n_j = 0.
  static SchroederFamily from_area_array(const Partition& shape, std::vector<AreaRow> rows);
  // One string of N/E/D per j; empty strings for paths of length zero.
  static SchroederFamily from_steps(const Partition& shape, const std::vector<std::string>& steps);
  static SchroederFamily from_debug_string(const Partition& shape, const std::string& text);

  const Partition& shape() const { return shape_; }
  const StripProfile& profile() const { return profile_; }
  const std::vector<AreaRow>& rows() const { return rows_; }
  std::vector<FlatEntry> entries() const;

  std::vector<std::string> steps() const;
  // Lattice points visited by path j, in order.
  std::vector<std::pair<int, int>> vertices(int j) const;
  std::string to_debug_string() const;

  friend bool operator==(const SchroederFamily& a, const SchroederFamily& b) {
    return a.shape_ == b.shape_ && a.rows_ == b.rows_;
  }

 private:
  SchroederFamily(Partition shape, StripProfile profile, std::vector<AreaRow> rows);
  void validate() const;

  Partition shape_;
  StripProfile profile_;
  std::vector<AreaRow> rows_;
};

int diags(std::span<const FlatEntry> entries);
int area(std::span<const FlatEntry> entries);
int dinv_pairs(std::span<const FlatEntry> entries);

int diags(const SchroederFamily& family);
int area(const SchroederFamily& family);
int dinv(const SchroederFamily& family, int adj_lambda);
Statistics statistics(const SchroederFamily& family);

// Visits the flattened area array of every family of the shape, outermost path
// first. The span stays valid only during the call.
void for_each_family_entries(const Partition& shape,
                             const std::function<void(std::span<const FlatEntry>)>& visit,
                             const EnumerationLimits& limits = {}, WorkSplit split = {});

void for_each_family(const Partition& shape, const std::function<void(const SchroederFamily&)>& visit,
                     const EnumerationLimits& limits = {}, WorkSplit split = {});
std::vector<SchroederFamily> enumerate_families(const Partition& shape, const EnumerationLimits& limits = {});

}  // namespace dominoes
