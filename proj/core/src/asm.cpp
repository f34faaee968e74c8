#include "dominoes/asm.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <stdexcept>

namespace dominoes {

Asm::Asm(int order, std::vector<int> entries) : order_(order), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != order_ * order_) throw std::invalid_argument("ASM entry count mismatch");
}

bool Asm::is_valid() const {
  auto line_ok = [this](auto get) {
    int partial = 0;
    for (int k = 0; k < order_; ++k) {
      int v = get(k);
      if (v < -1 || v > 1) return false;
      partial += v;
      if (partial < 0 || partial > 1) return false;
    }
    return partial == 1;
  };
  for (int i = 0; i < order_; ++i) {
    if (!line_ok([&](int k) { return at(i, k); })) return false;
    if (!line_ok([&](int k) { return at(k, i); })) return false;
  }
  return true;
}

int Asm::count(int value) const { return static_cast<int>(std::count(entries_.begin(), entries_.end(), value)); }

std::string Asm::to_text() const {
  std::string out;
  for (int r = 0; r < order_; ++r) {
    for (int c = 0; c < order_; ++c) {
      if (c) out += ' ';
      out += std::to_string(at(r, c));
    }
    out += '\n';
  }
  return out;
}

namespace {

// Row-by-row search keeping every partial row and column sum in {0, 1}.
void asm_rec(int order, int r, int c, int row_sum, std::vector<int>& col_sum, std::vector<int>& cells,
             std::vector<Asm>& out) {
  if (r == order) {
    out.emplace_back(order, cells);
    return;
  }
  if (c == order) {
    if (row_sum == 1) asm_rec(order, r + 1, 0, 0, col_sum, cells, out);
    return;
  }
  const bool last_row = r == order - 1;
  for (int v : {0, 1, -1}) {
    int rs = row_sum + v;
    int cs = col_sum[static_cast<std::size_t>(c)] + v;
    if (rs < 0 || rs > 1 || cs < 0 || cs > 1) continue;
    if (last_row && cs != 1) continue;
    col_sum[static_cast<std::size_t>(c)] = cs;
    cells.push_back(v);
    asm_rec(order, r, c + 1, rs, col_sum, cells, out);
    cells.pop_back();
    col_sum[static_cast<std::size_t>(c)] -= v;
  }
}

}  // namespace

std::vector<Asm> all_asms(int order) {
  std::vector<Asm> out;
  std::vector<int> col_sum(static_cast<std::size_t>(order), 0);
  std::vector<int> cells;
  asm_rec(order, 0, 0, 0, col_sum, cells, out);
  return out;
}

std::uint64_t EdgeGraph::key(int x, int y, bool vertical) {
  auto ux = static_cast<std::uint64_t>(static_cast<std::uint32_t>(x + (1 << 20)));
  auto uy = static_cast<std::uint64_t>(static_cast<std::uint32_t>(y + (1 << 20)));
  return (ux << 32) | (uy << 1) | (vertical ? 1u : 0u);
}

void EdgeGraph::add_segment(int x0, int y0, int x1, int y1) {
  if (x0 != x1 && y0 != y1) throw std::invalid_argument("segment must be axis parallel");
  if (x0 > x1) std::swap(x0, x1);
  if (y0 > y1) std::swap(y0, y1);
  for (int x = x0; x < x1; ++x) segments_.insert(key(x, y0, false));
  for (int y = y0; y < y1; ++y) segments_.insert(key(x0, y, true));
}

void EdgeGraph::add_rectangle(int x0, int y0, int x1, int y1) {
  add_segment(x0, y0, x1, y0);
  add_segment(x0, y1, x1, y1);
  add_segment(x0, y0, x0, y1);
  add_segment(x1, y0, x1, y1);
}

void EdgeGraph::add_domino(const Domino& d) {
  const Cell s = d.second();
  add_rectangle(d.anchor.x, d.anchor.y, s.x + 1, s.y + 1);
}

int EdgeGraph::degree(int x, int y) const {
  return has(x - 1, y, false) + has(x, y, false) + has(x, y - 1, true) + has(x, y, true);
}

bool in_aztec_core(Cell c, int n, int cx, int cy) {
  int a = c.x - cx;
  int b = c.y - cy;
  return std::max(std::abs(a), std::abs(a + 1)) + std::max(std::abs(b), std::abs(b + 1)) <= n + 1;
}

EdgeGraph core_graph(std::span<const Domino> dominoes, int n, int cx, int cy) {
  EdgeGraph g;
  for (const auto& d : dominoes) {
    bool first = in_aztec_core(d.anchor, n, cx, cy);
    bool second = in_aztec_core(d.second(), n, cx, cy);
    if (first != second) throw std::invalid_argument("domino straddles the Aztec diamond boundary");
    if (first) g.add_domino(d);
  }
  g.add_segment(cx, cy + n, cx, cy + n + 1);
  g.add_segment(cx - n - 1, cy, cx - n, cy);
  g.add_segment(cx, cy - n - 1, cx, cy - n);
  g.add_segment(cx + n, cy, cx + n + 1, cy);
  return g;
}

int even_entry(int degree) {
  switch (degree) {
    case 4: return 1;
    case 3: return 0;
    case 2: return -1;
  }
  throw std::logic_error("even point of degree " + std::to_string(degree));
}

int odd_entry(int degree) {
  switch (degree) {
    case 2: return 1;
    case 3: return 0;
    case 4: return -1;
  }
  throw std::logic_error("odd point of degree " + std::to_string(degree));
}

Asm me_map(const DominoTiling& tiling, int n) {
  const EdgeGraph g = core_graph(tiling.dominoes(), n, 0, 0);
  std::vector<int> entries;
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c) entries.push_back(even_entry(g.degree(c - r, n - r - c)));
  return Asm(n + 1, std::move(entries));
}

Asm mo_map(const DominoTiling& tiling, int n) {
  const EdgeGraph g = core_graph(tiling.dominoes(), n, 0, 0);
  std::vector<int> entries;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) entries.push_back(odd_entry(g.degree(c - r, n - 1 - r - c)));
  return Asm(n, std::move(entries));
}

TwoEnumeration two_enumeration_check(int n) {
  TwoEnumeration out;
  auto region = std::make_shared<const Region>(Region::aztec_diamond(n));
  out.tilings = count_tilings(region, {.max_size = 0, .max_cells = 1 << 20});
  for (const auto& m : all_asms(n)) out.plus_side += 1LL << m.count(1);
  for (const auto& m : all_asms(n + 1)) out.minus_side += 1LL << m.count(-1);

  std::map<std::vector<int>, long long> odd_fibres;
  std::map<std::vector<int>, long long> even_fibres;
  auto flat = [](const Asm& a) {
    std::vector<int> v;
    for (int r = 0; r < a.order(); ++r)
      for (int c = 0; c < a.order(); ++c) v.push_back(a.at(r, c));
    return v;
  };
  for_each_tiling(
      region,
      [&](std::span<const Domino> ds) {
        const DominoTiling t = DominoTiling::unchecked(region, std::vector<Domino>(ds.begin(), ds.end()));
        ++odd_fibres[flat(mo_map(t, n))];
        ++even_fibres[flat(me_map(t, n))];
      },
      {.max_size = 0, .max_cells = 1 << 20});
  const auto odd = all_asms(n);
  const auto even = all_asms(n + 1);
  out.fibres_match = odd_fibres.size() == odd.size() && even_fibres.size() == even.size();
  for (const auto& m : odd) {
    auto it = odd_fibres.find(flat(m));
    out.fibres_match = out.fibres_match && it != odd_fibres.end() && it->second == (1LL << m.count(1));
  }
  for (const auto& m : even) {
    auto it = even_fibres.find(flat(m));
    out.fibres_match = out.fibres_match && it != even_fibres.end() && it->second == (1LL << m.count(-1));
  }
  return out;
}

}  // namespace dominoes
