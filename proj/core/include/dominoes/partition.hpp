#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dominoes {

// An integer partition stored as weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  // Accepts "4,4,3,3,3,1", "4 4 3", "4^4" and mixtures such as "3^2,1".
  static Partition parse(std::string_view text);
  static Partition square(int n);

  std::span<const int> parts() const { return parts_; }
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Lengths n_0..n_k of the border strips, indexed so that strip j has its
// rightmost box in column largest() - j. Zero where no strip ends.
struct StripProfile {
  std::vector<int> lengths;

  int k() const { return static_cast<int>(lengths.size()) - 1; }
  int operator[](int j) const { return lengths[static_cast<std::size_t>(j)]; }
  int count() const { return static_cast<int>(lengths.size()); }
  int total() const;
  int nonzero() const;
  friend bool operator==(const StripProfile&, const StripProfile&) = default;
};

// A border strip as peeled from the diagram; cells are (row, column), 0-based.
struct BorderStrip {
  int rightmost_column = 0;  // 1-based, as in the diagram
  std::vector<std::pair<int, int>> cells;
};

std::vector<BorderStrip> peel_border_strips(const Partition& lambda);
StripProfile border_strips(const Partition& lambda);

int adj(const Partition& lambda);
// Same quantity obtained from the explicit strips: each strip spans from its
// rightmost column back to column 1, so it crosses (rightmost - 1) vertical lines.
int adj_by_crossings(const Partition& lambda);
int sgn(const Partition& lambda);
int durfee_rank(const Partition& lambda);

// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace dominoes
