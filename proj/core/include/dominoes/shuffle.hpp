#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dominoes/asm.hpp"
#include "dominoes/domino.hpp"

namespace dominoes {

// Placement of a triangular array on lattice points: row r (1-based, bottom
// first) has size - r + 1 entries, entry p of row r sitting at
// (x0 + (r - 1) + 2p, y0 + r - 1).
struct TriangleFrame {
  int size = 0;
  int x0 = 0;
  int y0 = 0;
  friend bool operator==(const TriangleFrame&, const TriangleFrame&) = default;
};

struct AsmAddress {
  int level = 1;  // row, counted from the bottom starting at 1
  int pos = 0;    // left to right within the row
  friend bool operator==(const AsmAddress&, const AsmAddress&) = default;
};

// An ASM padded with zero triangles, laid out on the lattice points of an
// extended Aztec diamond.
class ExtendedAsm {
 public:
  ExtendedAsm(TriangleFrame frame, std::vector<std::vector<int>> rows);

  const TriangleFrame& frame() const { return frame_; }
  int levels() const { return frame_.size; }
  int width(int level) const { return frame_.size - level + 1; }
  int at(AsmAddress a) const;
  std::pair<int, int> point(AsmAddress a) const;
  std::optional<AsmAddress> address(int x, int y) const;

  // Sum of entries strictly north-east of a along the diagonal direction.
  int ne(AsmAddress a) const;
  // Sum of all entries in higher rows and of entries to the right in a's row.
  int tp(AsmAddress a) const;
  int level(AsmAddress a) const { return a.level; }

  // Nonzero entries from top to bottom, right to left, with their addresses.
  std::vector<std::pair<AsmAddress, int>> reading_word() const;
  std::string to_text() const;

  friend bool operator==(const ExtendedAsm& a, const ExtendedAsm& b) { return a.rows_ == b.rows_; }

 private:
  void check(AsmAddress a) const;
  TriangleFrame frame_;
  std::vector<std::vector<int>> rows_;  // rows_[0] is level 1
};

TriangleFrame even_frame(int n);  // even points of the extended diamond of order n
TriangleFrame odd_frame(int n);   // odd points of the extended diamond of order n

// Extended ASMs of dominoes covering the extended Aztec diamond of order n.
// Only dominoes inside the central diamond contribute edges; points outside it read 0.
ExtendedAsm extended_me(std::span<const Domino> dominoes, int n);
ExtendedAsm extended_mo(std::span<const Domino> dominoes, int n);

std::shared_ptr<const Region> extended_region(int n);
// The n with R_{(n^n)} equal to the region, or nullopt.
std::optional<int> extended_order(const Region& region);

enum class BlockParity { odd, even };

// A 2x2 square given by its lower-left cell.
struct Block {
  Cell corner;
  std::pair<int, int> center() const { return {corner.x + 1, corner.y + 1}; }
  std::vector<Cell> cells() const;
  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block& a, const Block& b) { return a.corner <=> b.corner; }
};

// Even when the top-right cell is black.
BlockParity block_parity(const Block& b, const Coloring& coloring);

// 2x2 squares made of two parallel dominoes of the tiling, of the given parity.
std::vector<Block> find_blocks(std::span<const Domino> dominoes, const Coloring& coloring, BlockParity parity);
std::vector<Block> find_blocks(const DominoTiling& tiling, BlockParity parity);

// The two dominoes filling a block.
std::vector<Domino> fill_block(const Block& b, Orientation orientation);

// A tiling of an extended Aztec diamond with blocks of one parity removed.
class DeficientTiling {
 public:
  DeficientTiling(std::shared_ptr<const Region> region, BlockParity parity, std::vector<Domino> dominoes,
                  std::vector<Block> holes);

  int order() const { return order_; }
  BlockParity parity() const { return parity_; }
  const Region& region() const { return *region_; }
  const std::shared_ptr<const Region>& region_ptr() const { return region_; }
  const std::vector<Domino>& dominoes() const { return dominoes_; }
  const std::vector<Block>& holes() const { return holes_; }

  // Fills hole i with orientation[i].
  DominoTiling fill(std::span<const Orientation> orientation) const;
  DominoTiling fill_all(Orientation orientation) const;
  std::string render() const;

  friend bool operator==(const DeficientTiling& a, const DeficientTiling& b) {
    return a.parity_ == b.parity_ && a.dominoes_ == b.dominoes_ && a.holes_ == b.holes_;
  }

 private:
  std::shared_ptr<const Region> region_;
  int order_;
  BlockParity parity_;
  std::vector<Domino> dominoes_;
  std::vector<Block> holes_;
};

DeficientTiling make_deficient(const DominoTiling& tiling, BlockParity parity);

// The 2n dominoes attached below the extended diamond of order n before shuffling.
std::vector<Domino> attached_dominoes(int n);

// Domino shuffling of an odd-deficient tiling of order n into an
// even-deficient tiling of order n + 1.
DeficientTiling shuffle(const DeficientTiling& odd, std::shared_ptr<const Region> target = nullptr);

// Statistics of the horizontal completion, diags reduced by the number of holes.
Statistics deficient_stats(const DeficientTiling& tiling);

}  // namespace dominoes
