#include "dominoes/domino.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dominoes {

DominoClass classify(const Domino& d, const Coloring& coloring) {
  bool anchor_black = coloring.color(d.anchor) == Color::black;
  if (d.orientation == Orientation::vertical) return anchor_black ? DominoClass::V : DominoClass::Vc;
  return anchor_black ? DominoClass::H : DominoClass::Hc;
}

Cell black_cell(const Domino& d, const Coloring& coloring) {
  return coloring.color(d.anchor) == Color::black ? d.anchor : d.second();
}

char class_letter(DominoClass c) {
  switch (c) {
    case DominoClass::V: return 'V';
    case DominoClass::H: return 'H';
    case DominoClass::Vc: return 'v';
    case DominoClass::Hc: return 'h';
  }
  return '?';
}

DominoTiling::DominoTiling(std::shared_ptr<const Region> region, std::vector<Domino> dominoes, bool)
    : region_(std::move(region)), dominoes_(std::move(dominoes)) {
  std::sort(dominoes_.begin(), dominoes_.end());
}

DominoTiling DominoTiling::unchecked(std::shared_ptr<const Region> region, std::vector<Domino> dominoes) {
  return DominoTiling(std::move(region), std::move(dominoes), true);
}

DominoTiling::DominoTiling(std::shared_ptr<const Region> region, std::vector<Domino> dominoes)
    : DominoTiling(std::move(region), std::move(dominoes), true) {
  std::vector<char> covered(static_cast<std::size_t>(region_->cell_count()), 0);
  for (const auto& d : dominoes_) {
    for (Cell c : {d.anchor, d.second()}) {
      int idx = region_->index(c);
      if (idx < 0)
        throw std::invalid_argument("domino covers cell (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                                    ") outside the region");
      if (covered[static_cast<std::size_t>(idx)]++)
        throw std::invalid_argument("cell (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                                    ") is covered twice");
    }
  }
  if (std::count(covered.begin(), covered.end(), 0) != 0) throw std::invalid_argument("tiling leaves cells uncovered");
}

std::optional<Domino> DominoTiling::domino_at(Cell c) const {
  for (const auto& d : dominoes_)
    if (d.covers(c)) return d;
  return std::nullopt;
}

namespace {

constexpr int kSplitDepth = 6;

class TilingWalker {
 public:
  TilingWalker(const Region& region, const std::function<void(std::span<const Domino>)>& visit, WorkSplit split)
      : region_(region), visit_(visit), split_(split),
        covered_(static_cast<std::size_t>(region.cell_count()), 0) {
    placed_.reserve(static_cast<std::size_t>(region.cell_count() / 2));
  }

  void run() { extend(0); }

 private:
  void extend(std::size_t from) {
    while (from < covered_.size() && covered_[from]) ++from;
    if (from == covered_.size()) {
      // Tilings finished above the split level belong to worker 0 alone.
      if (placed_.size() > kSplitDepth || split_.worker == 0 || split_.jobs <= 1) visit_(placed_);
      return;
    }
    if (placed_.size() == kSplitDepth && !split_.keeps(counter_++)) return;
    const Cell c = region_.cells()[from];
    for (auto orientation : {Orientation::horizontal, Orientation::vertical}) {
      Domino d{c, orientation};
      int other = region_.index(d.second());
      if (other < 0 || covered_[static_cast<std::size_t>(other)]) continue;
      covered_[from] = covered_[static_cast<std::size_t>(other)] = 1;
      placed_.push_back(d);
      extend(from + 1);
      placed_.pop_back();
      covered_[from] = covered_[static_cast<std::size_t>(other)] = 0;
    }
  }

  const Region& region_;
  const std::function<void(std::span<const Domino>)>& visit_;
  WorkSplit split_;
  std::vector<char> covered_;
  std::vector<Domino> placed_;
  long long counter_ = 0;
};

}  // namespace

void for_each_tiling(const std::shared_ptr<const Region>& region,
                     const std::function<void(std::span<const Domino>)>& visit, const EnumerationLimits& limits,
                     WorkSplit split) {
  if (region->cell_count() > limits.max_cells)
    throw GuardExceeded("region has " + std::to_string(region->cell_count()) + " cells, above the tiling bound " +
                        std::to_string(limits.max_cells));
  TilingWalker(*region, visit, split).run();
}

std::vector<DominoTiling> enumerate_tilings(const std::shared_ptr<const Region>& region,
                                            const EnumerationLimits& limits) {
  std::vector<DominoTiling> out;
  for_each_tiling(
      region,
      [&](std::span<const Domino> ds) {
        out.push_back(DominoTiling::unchecked(region, std::vector<Domino>(ds.begin(), ds.end())));
      },
      limits);
  return out;
}

long long count_tilings(const std::shared_ptr<const Region>& region, const EnumerationLimits& limits) {
  long long count = 0;
  for_each_tiling(region, [&count](std::span<const Domino>) { ++count; }, limits);
  return count;
}

namespace {

// Sorted black-cell x positions of V and H dominoes, bucketed by row.
class RowIndex {
 public:
  RowIndex(std::span<const Domino> pool, const Coloring& coloring) {
    if (pool.empty()) return;
    lo_ = hi_ = pool.front().anchor.y;
    for (const auto& d : pool) {
      lo_ = std::min(lo_, d.anchor.y);
      hi_ = std::max(hi_, d.anchor.y);
    }
    v_.resize(static_cast<std::size_t>(hi_ - lo_ + 1));
    h_.resize(v_.size());
    for (const auto& d : pool) {
      auto cls = classify(d, coloring);
      if (cls == DominoClass::V) v_[static_cast<std::size_t>(d.anchor.y - lo_)].push_back(d.anchor.x);
      if (cls == DominoClass::H) h_[static_cast<std::size_t>(d.anchor.y - lo_)].push_back(d.anchor.x);
    }
    for (auto& r : v_) std::sort(r.begin(), r.end());
    for (auto& r : h_) std::sort(r.begin(), r.end());
  }

  int v_left(int row, int x) const { return left(v_, row, x); }
  int v_right(int row, int x) const { return right(v_, row, x); }
  int h_left(int row, int x) const { return left(h_, row, x); }
  int h_right(int row, int x) const { return right(h_, row, x); }

 private:
  const std::vector<int>* bucket(const std::vector<std::vector<int>>& rows, int row) const {
    if (rows.empty() || row < lo_ || row > hi_) return nullptr;
    return &rows[static_cast<std::size_t>(row - lo_)];
  }
  int left(const std::vector<std::vector<int>>& rows, int row, int x) const {
    const auto* b = bucket(rows, row);
    return b ? static_cast<int>(std::lower_bound(b->begin(), b->end(), x) - b->begin()) : 0;
  }
  int right(const std::vector<std::vector<int>>& rows, int row, int x) const {
    const auto* b = bucket(rows, row);
    return b ? static_cast<int>(b->end() - std::upper_bound(b->begin(), b->end(), x)) : 0;
  }

  int lo_ = 0, hi_ = -1;
  std::vector<std::vector<int>> v_, h_;
};

PairCounts count_for(const RowIndex& index, const Domino& ref) {
  // Reference V has its black cell at (a, r); partners are located by their black cells.
  const int a = ref.anchor.x;
  const int r = ref.anchor.y;
  PairCounts pc{ref, 0, 0};
  pc.dinv1 = index.h_left(r + 1, a) + index.v_left(r, a) + index.h_right(r, a) + index.v_right(r - 1, a);
  pc.dinv2 = index.h_left(r + 1, a) + index.v_left(r + 1, a) + index.h_right(r, a) + index.v_right(r, a);
  return pc;
}

}  // namespace

std::vector<PairCounts> domino_pair_counts(std::span<const Domino> pool, std::span<const Domino> references,
                                           const Coloring& coloring) {
  RowIndex index(pool, coloring);
  std::vector<PairCounts> out;
  for (const auto& d : references) {
    if (classify(d, coloring) != DominoClass::V) throw std::invalid_argument("pair reference must be a V domino");
    out.push_back(count_for(index, d));
  }
  return out;
}

std::vector<PairCounts> domino_pair_counts(std::span<const Domino> dominoes, const Coloring& coloring) {
  RowIndex index(dominoes, coloring);
  std::vector<PairCounts> out;
  for (const auto& d : dominoes)
    if (classify(d, coloring) == DominoClass::V) out.push_back(count_for(index, d));
  return out;
}

DominoStatistics domino_statistics(std::span<const Domino> dominoes, const Coloring& coloring) {
  DominoStatistics s;
  RowIndex index(dominoes, coloring);
  for (const auto& d : dominoes) {
    auto cls = classify(d, coloring);
    if (cls == DominoClass::H) ++s.diags;
    if (cls == DominoClass::H || cls == DominoClass::V) s.area += d.anchor.y;
    if (cls == DominoClass::V) {
      auto pc = count_for(index, d);
      s.pairs_type1 += pc.dinv1;
      s.pairs_type2 += pc.dinv2;
    }
  }
  return s;
}

Statistics tiling_stats(const DominoTiling& tiling, std::optional<int> adj_lambda) {
  int offset = 0;
  if (adj_lambda) {
    offset = *adj_lambda;
  } else if (tiling.region().shape()) {
    offset = adj(*tiling.region().shape());
  }
  auto s = domino_statistics(tiling.dominoes(), tiling.region().coloring());
  if (s.pairs_type1 != s.pairs_type2)
    throw std::logic_error("domino pair counts disagree: " + std::to_string(s.pairs_type1) + " vs " +
                           std::to_string(s.pairs_type2));
  return {s.diags, s.area, offset + s.pairs_type1};
}

namespace {

// Lattice point of path coordinates for a black cell, and back.
struct PathFrame {
  int n0;
  std::pair<int, int> point(Cell black) const { return {(black.x + n0 - black.y) / 2, (black.x + n0 + black.y) / 2}; }
  Cell cell(int X, int Y) const { return {X + Y - n0, Y - X}; }
};

}  // namespace

SchroederFamily tiling_to_paths(const DominoTiling& tiling) {
  const auto& region = tiling.region();
  if (!region.shape()) throw std::invalid_argument("tiling is not of a partition region");
  const Partition& shape = *region.shape();
  const StripProfile profile = border_strips(shape);
  const PathFrame frame{profile[0]};

  std::map<std::pair<int, int>, char> step_at;
  for (const auto& d : tiling.dominoes()) {
    auto cls = tiling.classify(d);
    if (cls == DominoClass::Hc) continue;
    char step = cls == DominoClass::V ? 'N' : (cls == DominoClass::Vc ? 'E' : 'D');
    step_at.emplace(frame.point(black_cell(d, region.coloring())), step);
  }
  std::vector<std::string> steps(static_cast<std::size_t>(profile.count()));
  std::size_t used = 0;
  for (int j = 0; j < profile.count(); ++j) {
    int x = j, y = j;
    const int end = j + profile[j];
    while (x != end || y != end) {
      auto it = step_at.find({x, y});
      if (it == step_at.end()) throw std::logic_error("tiling path breaks at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      steps[static_cast<std::size_t>(j)] += it->second;
      ++used;
      x += it->second == 'N' ? 0 : 1;
      y += it->second == 'E' ? 0 : 1;
      if (y > end) throw std::logic_error("tiling path overshoots");
    }
  }
  if (used != step_at.size()) throw std::logic_error("tiling has steps off every path");
  return SchroederFamily::from_steps(shape, steps);
}

DominoTiling paths_to_tiling(const SchroederFamily& family, const std::shared_ptr<const Region>& region) {
  const PathFrame frame{family.profile()[0]};
  const auto& coloring = region->coloring();
  std::vector<Domino> dominoes;
  std::vector<char> used(static_cast<std::size_t>(region->cell_count()), 0);
  auto take = [&](Domino d) {
    for (Cell c : {d.anchor, d.second()}) {
      int idx = region->index(c);
      if (idx < 0 || used[static_cast<std::size_t>(idx)]) throw std::logic_error("path step has no room in the region");
      used[static_cast<std::size_t>(idx)] = 1;
    }
    dominoes.push_back(d);
  };
  const auto steps = family.steps();
  for (std::size_t j = 0; j < steps.size(); ++j) {
    int x = static_cast<int>(j), y = static_cast<int>(j);
    for (char s : steps[j]) {
      Cell black = frame.cell(x, y);
      if (s == 'N') take({black, Orientation::vertical});
      if (s == 'E') take({{black.x, black.y - 1}, Orientation::vertical});
      if (s == 'D') take({black, Orientation::horizontal});
      x += s == 'N' ? 0 : 1;
      y += s == 'E' ? 0 : 1;
    }
  }
  for (int i = 0; i < region->cell_count(); ++i) {
    Cell c = region->cells()[static_cast<std::size_t>(i)];
    if (used[static_cast<std::size_t>(i)] || coloring.color(c) != Color::black) continue;
    take({{c.x - 1, c.y}, Orientation::horizontal});
  }
  return DominoTiling(region, std::move(dominoes));
}

DominoTiling paths_to_tiling(const SchroederFamily& family) {
  return paths_to_tiling(family, std::make_shared<const Region>(Region::for_partition(family.shape())));
}

std::string render_ascii(const Region& region, std::span<const Domino> dominoes, std::span<const Cell> holes) {
  if (region.cell_count() == 0) return "";
  const int width = region.max_x() - region.min_x() + 1;
  const int height = region.max_y() - region.min_y() + 1;
  std::vector<std::string> grid(static_cast<std::size_t>(width * height), ".");
  auto at = [&](Cell c) -> std::string& {
    return grid[static_cast<std::size_t>((c.y - region.min_y()) * width + c.x - region.min_x())];
  };
  for (const auto& c : region.cells()) at(c) = " ";
  for (const auto& c : holes)
    if (region.contains(c)) at(c) = "#";
  for (const auto& d : dominoes) {
    if (!region.contains(d.anchor) || !region.contains(d.second())) continue;
    if (d.orientation == Orientation::horizontal) {
      at(d.anchor) = "└";
      at(d.second()) = "┘";
    } else {
      at(d.anchor) = "└";
      at(d.second()) = "┌";
    }
  }
  std::string out;
  for (int y = region.max_y(); y >= region.min_y(); --y) {
    for (int x = region.min_x(); x <= region.max_x(); ++x) out += at({x, y});
    out += '\n';
  }
  return out;
}

std::string render_ascii(const DominoTiling& tiling) { return render_ascii(tiling.region(), tiling.dominoes()); }

std::string tiling_to_json(const DominoTiling& tiling) {
  auto arr = nlohmann::json::array();
  for (const auto& d : tiling.dominoes())
    arr.push_back({d.anchor.x, d.anchor.y, d.orientation == Orientation::horizontal ? "H" : "V"});
  return arr.dump();
}

DominoTiling tiling_from_json(const std::shared_ptr<const Region>& region, const std::string& text) {
  std::vector<Domino> dominoes;
  for (const auto& item : nlohmann::json::parse(text)) {
    const auto kind = item.at(2).get<std::string>();
    if (kind != "H" && kind != "V") throw std::invalid_argument("domino orientation must be \"H\" or \"V\"");
    dominoes.push_back({{item.at(0).get<int>(), item.at(1).get<int>()},
                        kind == "H" ? Orientation::horizontal : Orientation::vertical});
  }
  return DominoTiling(region, std::move(dominoes));
}

}  // namespace dominoes
