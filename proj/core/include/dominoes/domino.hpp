#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dominoes/enumeration.hpp"
#include "dominoes/partition.hpp"
#include "dominoes/schroeder.hpp"

namespace dominoes {

// Unit square [x, x+1] x [y, y+1].
struct Cell {
  int x = 0;
  int y = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  // Row-major: bottom row first, left to right.
  friend auto operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

enum class Color : std::uint8_t { white, black };

// Checkerboard: a cell is black when x + y has the given parity.
struct Coloring {
  int black_parity = 1;
  Color color(Cell c) const { return ((c.x + c.y) % 2 + 2) % 2 == black_parity ? Color::black : Color::white; }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

class Region {
 public:
  Region(std::vector<Cell> cells, Coloring coloring, std::optional<Partition> shape = std::nullopt);

  // R_lambda inside the top half of the Aztec diamond of order n_0 + 1, bottom edge on y = 0.
  static Region for_partition(const Partition& shape);
  // The Aztec diamond of order n centred at the origin.
  static Region aztec_diamond(int n);

  bool contains(Cell c) const { return index(c) >= 0; }
  int index(Cell c) const;
  Color color(Cell c) const { return coloring_.color(c); }
  const Coloring& coloring() const { return coloring_; }
  const std::vector<Cell>& cells() const { return cells_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  const std::optional<Partition>& shape() const { return shape_; }
  int min_x() const { return min_x_; }
  int max_x() const { return max_x_; }
  int min_y() const { return min_y_; }
  int max_y() const { return max_y_; }

 private:
  std::vector<Cell> cells_;
  Coloring coloring_;
  std::optional<Partition> shape_;
  int min_x_ = 0, max_x_ = -1, min_y_ = 0, max_y_ = -1;
  std::vector<int> lookup_;
};

enum class Orientation : std::uint8_t { horizontal, vertical };

// V: vertical, black bottom. H: horizontal, black left. Vc, Hc: the other two.
enum class DominoClass : std::uint8_t { V, H, Vc, Hc };

struct Domino {
  Cell anchor;  // lower-left cell
  Orientation orientation = Orientation::horizontal;

  Cell second() const {
    return orientation == Orientation::horizontal ? Cell{anchor.x + 1, anchor.y} : Cell{anchor.x, anchor.y + 1};
  }
  bool covers(Cell c) const { return c == anchor || c == second(); }
  Domino shifted(int dx, int dy) const { return {{anchor.x + dx, anchor.y + dy}, orientation}; }

  friend bool operator==(const Domino&, const Domino&) = default;
  friend auto operator<=>(const Domino& a, const Domino& b) {
    if (auto c = a.anchor <=> b.anchor; c != 0) return c;
    return a.orientation <=> b.orientation;
  }
};

DominoClass classify(const Domino& d, const Coloring& coloring);
Cell black_cell(const Domino& d, const Coloring& coloring);
char class_letter(DominoClass c);

class DominoTiling {
 public:
  // Throws std::invalid_argument unless the dominoes partition the region.
  DominoTiling(std::shared_ptr<const Region> region, std::vector<Domino> dominoes);
  static DominoTiling unchecked(std::shared_ptr<const Region> region, std::vector<Domino> dominoes);

  const Region& region() const { return *region_; }
  const std::shared_ptr<const Region>& region_ptr() const { return region_; }
  // Sorted by anchor.
  const std::vector<Domino>& dominoes() const { return dominoes_; }
  DominoClass classify(const Domino& d) const { return dominoes::classify(d, region_->coloring()); }
  // The domino covering c, if any.
  std::optional<Domino> domino_at(Cell c) const;

  friend bool operator==(const DominoTiling& a, const DominoTiling& b) { return a.dominoes_ == b.dominoes_; }

 private:
  DominoTiling(std::shared_ptr<const Region> region, std::vector<Domino> dominoes, bool);
  std::shared_ptr<const Region> region_;
  std::vector<Domino> dominoes_;
};

// Throws GuardExceeded when the region is larger than limits.max_cells.
void for_each_tiling(const std::shared_ptr<const Region>& region,
                     const std::function<void(std::span<const Domino>)>& visit,
                     const EnumerationLimits& limits = {}, WorkSplit split = {});
std::vector<DominoTiling> enumerate_tilings(const std::shared_ptr<const Region>& region,
                                            const EnumerationLimits& limits = {});
long long count_tilings(const std::shared_ptr<const Region>& region, const EnumerationLimits& limits = {});

// Pair counts of one reference V domino under both template families.
struct PairCounts {
  Domino reference;
  int dinv1 = 0;
  int dinv2 = 0;
};

// Domino pairs for every V domino among references, partners drawn from pool.
std::vector<PairCounts> domino_pair_counts(std::span<const Domino> pool, std::span<const Domino> references,
                                           const Coloring& coloring);
std::vector<PairCounts> domino_pair_counts(std::span<const Domino> dominoes, const Coloring& coloring);

struct DominoStatistics {
  int diags = 0;
  int area = 0;
  int pairs_type1 = 0;
  int pairs_type2 = 0;
};

// Raw counts; no adj offset.
DominoStatistics domino_statistics(std::span<const Domino> dominoes, const Coloring& coloring);

// (diags, area, adj + domino pairs). Throws std::logic_error when the two pair
// counts disagree. adj_lambda defaults to adj of the region's partition.
Statistics tiling_stats(const DominoTiling& tiling, std::optional<int> adj_lambda = std::nullopt);

SchroederFamily tiling_to_paths(const DominoTiling& tiling);
DominoTiling paths_to_tiling(const SchroederFamily& family, const std::shared_ptr<const Region>& region);
DominoTiling paths_to_tiling(const SchroederFamily& family);

// One glyph per unit square: horizontal dominoes draw as "└┘", vertical ones
// as "┌" over "└"; '.' outside the region, '#' for cells listed in holes.
std::string render_ascii(const Region& region, std::span<const Domino> dominoes, std::span<const Cell> holes = {});
std::string render_ascii(const DominoTiling& tiling);
// [[x, y, "H"|"V"], ...]
std::string tiling_to_json(const DominoTiling& tiling);
DominoTiling tiling_from_json(const std::shared_ptr<const Region>& region, const std::string& text);

}  // namespace dominoes
