#include "dominoes/shuffle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace dominoes {

ExtendedAsm::ExtendedAsm(TriangleFrame frame, std::vector<std::vector<int>> rows)
    : frame_(frame), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != frame_.size) throw std::invalid_argument("extended ASM row count mismatch");
  for (int r = 1; r <= frame_.size; ++r)
    if (static_cast<int>(rows_[static_cast<std::size_t>(r - 1)].size()) != width(r))
      throw std::invalid_argument("extended ASM row " + std::to_string(r) + " has the wrong width");
}

void ExtendedAsm::check(AsmAddress a) const {
  if (a.level < 1 || a.level > frame_.size || a.pos < 0 || a.pos >= width(a.level))
    throw std::out_of_range("no extended ASM entry at level " + std::to_string(a.level) + ", position " +
                            std::to_string(a.pos));
}

int ExtendedAsm::at(AsmAddress a) const {
  check(a);
  return rows_[static_cast<std::size_t>(a.level - 1)][static_cast<std::size_t>(a.pos)];
}

std::pair<int, int> ExtendedAsm::point(AsmAddress a) const {
  check(a);
  return {frame_.x0 + (a.level - 1) + 2 * a.pos, frame_.y0 + a.level - 1};
}

std::optional<AsmAddress> ExtendedAsm::address(int x, int y) const {
  int level = y - frame_.y0 + 1;
  if (level < 1 || level > frame_.size) return std::nullopt;
  int offset = x - frame_.x0 - (level - 1);
  if (offset < 0 || offset % 2 != 0) return std::nullopt;
  AsmAddress a{level, offset / 2};
  if (a.pos >= width(level)) return std::nullopt;
  return a;
}

int ExtendedAsm::ne(AsmAddress a) const {
  check(a);
  int total = 0;
  // One step north-east keeps the position index and moves up one row.
  for (int level = a.level + 1; level <= frame_.size && a.pos < width(level); ++level)
    total += rows_[static_cast<std::size_t>(level - 1)][static_cast<std::size_t>(a.pos)];
  return total;
}

int ExtendedAsm::tp(AsmAddress a) const {
  check(a);
  int total = 0;
  for (int level = a.level + 1; level <= frame_.size; ++level)
    for (int v : rows_[static_cast<std::size_t>(level - 1)]) total += v;
  const auto& row = rows_[static_cast<std::size_t>(a.level - 1)];
  for (std::size_t p = static_cast<std::size_t>(a.pos) + 1; p < row.size(); ++p) total += row[p];
  return total;
}

std::vector<std::pair<AsmAddress, int>> ExtendedAsm::reading_word() const {
  std::vector<std::pair<AsmAddress, int>> word;
  for (int level = frame_.size; level >= 1; --level) {
    const auto& row = rows_[static_cast<std::size_t>(level - 1)];
    for (int p = static_cast<int>(row.size()) - 1; p >= 0; --p)
      if (row[static_cast<std::size_t>(p)] != 0) word.push_back({{level, p}, row[static_cast<std::size_t>(p)]});
  }
  return word;
}

std::string ExtendedAsm::to_text() const {
  std::string out;
  for (int level = frame_.size; level >= 1; --level) {
    std::string line(static_cast<std::size_t>(3 * (level - 1)), ' ');
    for (int v : rows_[static_cast<std::size_t>(level - 1)]) {
      std::string cell = std::to_string(v);
      line += std::string(3 - cell.size(), ' ') + cell + "   ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

TriangleFrame even_frame(int n) { return {2 * n + 1, -2 * n, 0}; }
TriangleFrame odd_frame(int n) { return {2 * n - 1, -(2 * n - 2), 1}; }

namespace {

ExtendedAsm extended_map(std::span<const Domino> dominoes, int n, TriangleFrame frame, int radius,
                         int (*entry)(int)) {
  const EdgeGraph g = core_graph(dominoes, n, 0, n);
  std::vector<std::vector<int>> rows;
  for (int level = 1; level <= frame.size; ++level) {
    std::vector<int> row;
    for (int p = 0; p < frame.size - level + 1; ++p) {
      int x = frame.x0 + (level - 1) + 2 * p;
      int y = frame.y0 + level - 1;
      row.push_back(std::abs(x) + std::abs(y - n) <= radius ? entry(g.degree(x, y)) : 0);
    }
    rows.push_back(std::move(row));
  }
  return ExtendedAsm(frame, std::move(rows));
}

}  // namespace

ExtendedAsm extended_me(std::span<const Domino> dominoes, int n) {
  return extended_map(dominoes, n, even_frame(n), n, &even_entry);
}

ExtendedAsm extended_mo(std::span<const Domino> dominoes, int n) {
  return extended_map(dominoes, n, odd_frame(n), n - 1, &odd_entry);
}

std::shared_ptr<const Region> extended_region(int n) {
  return std::make_shared<const Region>(Region::for_partition(Partition::square(n)));
}

std::optional<int> extended_order(const Region& region) {
  if (!region.shape()) return std::nullopt;
  const Partition& shape = *region.shape();
  if (shape.empty() || shape != Partition::square(shape.largest())) return std::nullopt;
  return shape.largest();
}

std::vector<Cell> Block::cells() const {
  return {corner, {corner.x + 1, corner.y}, {corner.x, corner.y + 1}, {corner.x + 1, corner.y + 1}};
}

BlockParity block_parity(const Block& b, const Coloring& coloring) {
  return coloring.color({b.corner.x + 1, b.corner.y + 1}) == Color::black ? BlockParity::even : BlockParity::odd;
}

std::vector<Block> find_blocks(std::span<const Domino> dominoes, const Coloring& coloring, BlockParity parity) {
  std::set<Domino> present(dominoes.begin(), dominoes.end());
  std::vector<Block> blocks;
  std::set<Cell> claimed;
  for (const auto& d : dominoes) {
    Domino partner = d.orientation == Orientation::horizontal ? d.shifted(0, 1) : d.shifted(1, 0);
    if (!present.count(partner)) continue;
    Block b{d.anchor};
    if (block_parity(b, coloring) != parity) continue;
    for (Cell c : b.cells())
      if (!claimed.insert(c).second)
        throw std::logic_error("blocks of the same parity overlap at (" + std::to_string(c.x) + "," +
                               std::to_string(c.y) + ")");
    blocks.push_back(b);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::vector<Block> find_blocks(const DominoTiling& tiling, BlockParity parity) {
  return find_blocks(tiling.dominoes(), tiling.region().coloring(), parity);
}

std::vector<Domino> fill_block(const Block& b, Orientation orientation) {
  if (orientation == Orientation::horizontal)
    return {{b.corner, Orientation::horizontal}, {{b.corner.x, b.corner.y + 1}, Orientation::horizontal}};
  return {{b.corner, Orientation::vertical}, {{b.corner.x + 1, b.corner.y}, Orientation::vertical}};
}

DeficientTiling::DeficientTiling(std::shared_ptr<const Region> region, BlockParity parity,
                                 std::vector<Domino> dominoes, std::vector<Block> holes)
    : region_(std::move(region)), order_(0), parity_(parity), dominoes_(std::move(dominoes)),
      holes_(std::move(holes)) {
  auto order = extended_order(*region_);
  if (!order) throw std::invalid_argument("deficient tilings live on extended Aztec diamonds");
  order_ = *order;
  std::sort(dominoes_.begin(), dominoes_.end());
  std::sort(holes_.begin(), holes_.end());
  for (const auto& h : holes_)
    if (block_parity(h, region_->coloring()) != parity_) throw std::invalid_argument("hole has the wrong parity");
  // Validates coverage by completing every hole.
  (void)fill_all(Orientation::horizontal);
}

DominoTiling DeficientTiling::fill(std::span<const Orientation> orientation) const {
  if (orientation.size() != holes_.size()) throw std::invalid_argument("one orientation per hole is required");
  std::vector<Domino> all = dominoes_;
  for (std::size_t i = 0; i < holes_.size(); ++i) {
    auto pair = fill_block(holes_[i], orientation[i]);
    all.insert(all.end(), pair.begin(), pair.end());
  }
  return DominoTiling(region_, std::move(all));
}

DominoTiling DeficientTiling::fill_all(Orientation orientation) const {
  std::vector<Orientation> choice(holes_.size(), orientation);
  return fill(choice);
}

std::string DeficientTiling::render() const {
  std::vector<Cell> cells;
  for (const auto& h : holes_)
    for (Cell c : h.cells()) cells.push_back(c);
  return render_ascii(*region_, dominoes_, cells);
}

DeficientTiling make_deficient(const DominoTiling& tiling, BlockParity parity) {
  auto blocks = find_blocks(tiling, parity);
  std::set<Cell> removed;
  for (const auto& b : blocks)
    for (Cell c : b.cells()) removed.insert(c);
  std::vector<Domino> kept;
  for (const auto& d : tiling.dominoes())
    if (!removed.count(d.anchor)) kept.push_back(d);
  return DeficientTiling(tiling.region_ptr(), parity, std::move(kept), std::move(blocks));
}

std::vector<Domino> attached_dominoes(int n) {
  std::vector<Domino> out;
  for (int k = 0; k < n; ++k) out.push_back({{-2 * n + 2 * k, -1}, Orientation::vertical});
  for (int k = 0; k < n; ++k) out.push_back({{2 * k + 1, -1}, Orientation::vertical});
  return out;
}

DeficientTiling shuffle(const DeficientTiling& odd, std::shared_ptr<const Region> target) {
  if (odd.parity() != BlockParity::odd) throw std::invalid_argument("shuffle expects an odd-deficient tiling");
  const int n = odd.order();
  if (!target) target = extended_region(n + 1);
  if (extended_order(*target) != n + 1) throw std::invalid_argument("shuffle target has the wrong order");
  const Coloring& coloring = odd.region().coloring();

  std::vector<Domino> moving = odd.dominoes();
  for (const auto& d : attached_dominoes(n)) moving.push_back(d);

  std::vector<char> covered(static_cast<std::size_t>(target->cell_count()), 0);
  std::vector<Domino> moved;
  for (const auto& d : moving) {
    Domino m = d;
    switch (classify(d, coloring)) {
      case DominoClass::V: m = d.shifted(-1, 0); break;
      case DominoClass::Vc: m = d.shifted(1, 0); break;
      case DominoClass::H: m = d.shifted(0, -1); break;
      case DominoClass::Hc: m = d.shifted(0, 1); break;
    }
    m = m.shifted(0, 1);
    if (classify(m, target->coloring()) != classify(d, coloring))
      throw std::logic_error("shuffled domino changed colour");
    for (Cell c : {m.anchor, m.second()}) {
      int idx = target->index(c);
      if (idx < 0) throw std::logic_error("shuffled domino leaves the region");
      if (covered[static_cast<std::size_t>(idx)]++) throw std::logic_error("shuffled dominoes collide");
    }
    moved.push_back(m);
  }

  // Group the uncovered cells into 2x2 holes, scanning bottom-left first.
  std::vector<Block> holes;
  for (int i = 0; i < target->cell_count(); ++i) {
    if (covered[static_cast<std::size_t>(i)]) continue;
    Block b{target->cells()[static_cast<std::size_t>(i)]};
    for (Cell c : b.cells()) {
      int idx = target->index(c);
      if (idx < 0 || covered[static_cast<std::size_t>(idx)])
        throw std::logic_error("shuffle leaves a gap that is not a 2x2 block");
      covered[static_cast<std::size_t>(idx)] = 1;
    }
    holes.push_back(b);
  }
  return DeficientTiling(std::move(target), BlockParity::even, std::move(moved), std::move(holes));
}

Statistics deficient_stats(const DeficientTiling& tiling) {
  const DominoTiling completed = tiling.fill_all(Orientation::horizontal);
  Statistics s = tiling_stats(completed);
  s.diags -= static_cast<int>(tiling.holes().size());
  return s;
}

}  // namespace dominoes
