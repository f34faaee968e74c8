#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "dominoes/domino.hpp"

namespace dominoes {

// Square matrix over {-1, 0, 1}.
class Asm {
 public:
  Asm(int order, std::vector<int> entries);

  int order() const { return order_; }
  int at(int r, int c) const { return entries_[static_cast<std::size_t>(r * order_ + c)]; }
  // Unit row and column sums with alternating nonzero signs.
  bool is_valid() const;
  int count(int value) const;
  std::string to_text() const;

  friend bool operator==(const Asm&, const Asm&) = default;

 private:
  int order_;
  std::vector<int> entries_;
};

std::vector<Asm> all_asms(int order);

// Lattice graph whose edges are unit segments on domino or block boundaries.
class EdgeGraph {
 public:
  void add_rectangle(int x0, int y0, int x1, int y1);
  void add_domino(const Domino& d);
  void add_segment(int x0, int y0, int x1, int y1);  // axis-parallel, any length
  int degree(int x, int y) const;

 private:
  static std::uint64_t key(int x, int y, bool vertical);
  bool has(int x, int y, bool vertical) const { return segments_.count(key(x, y, vertical)) > 0; }
  std::unordered_set<std::uint64_t> segments_;
};

// Whether the unit square lies in the Aztec diamond of order n centred at (cx, cy).
bool in_aztec_core(Cell c, int n, int cx, int cy);

// Edge graph of the dominoes inside the diamond of order n centred at (cx, cy),
// plus the four unit segments sticking out of its tips.
EdgeGraph core_graph(std::span<const Domino> dominoes, int n, int cx, int cy);

// Degree tables: even points 4/3/2 -> 1/0/-1, odd points 2/3/4 -> 1/0/-1.
int even_entry(int degree);
int odd_entry(int degree);

// For a tiling of the centred Aztec diamond of order n.
Asm me_map(const DominoTiling& tiling, int n);
Asm mo_map(const DominoTiling& tiling, int n);

struct TwoEnumeration {
  long long tilings = 0;
  long long plus_side = 0;   // sum over order-n ASMs of 2^(number of 1s)
  long long minus_side = 0;  // sum over order-(n+1) ASMs of 2^(number of -1s)
  // Every ASM B of order n is hit by exactly 2^(ones of B) tilings through
  // mo_map, and every ASM A of order n + 1 by 2^(minus ones of A) through me_map.
  bool fibres_match = false;
  bool ok() const { return tilings == plus_side && tilings == minus_side && fibres_match; }
};

TwoEnumeration two_enumeration_check(int n);

}  // namespace dominoes
