#include "dominoes/domino.hpp"

#include <algorithm>
#include <stdexcept>

namespace dominoes {

Region::Region(std::vector<Cell> cells, Coloring coloring, std::optional<Partition> shape)
    : cells_(std::move(cells)), coloring_(coloring), shape_(std::move(shape)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  if (cells_.empty()) return;
  min_x_ = max_x_ = cells_.front().x;
  min_y_ = cells_.front().y;
  max_y_ = cells_.back().y;
  for (const auto& c : cells_) {
    min_x_ = std::min(min_x_, c.x);
    max_x_ = std::max(max_x_, c.x);
  }
  const int width = max_x_ - min_x_ + 1;
  lookup_.assign(static_cast<std::size_t>(width * (max_y_ - min_y_ + 1)), -1);
  for (std::size_t i = 0; i < cells_.size(); ++i)
    lookup_[static_cast<std::size_t>((cells_[i].y - min_y_) * width + cells_[i].x - min_x_)] = static_cast<int>(i);
}

int Region::index(Cell c) const {
  if (cells_.empty() || c.x < min_x_ || c.x > max_x_ || c.y < min_y_ || c.y > max_y_) return -1;
  return lookup_[static_cast<std::size_t>((c.y - min_y_) * (max_x_ - min_x_ + 1) + c.x - min_x_)];
}

Region Region::for_partition(const Partition& shape) {
  if (shape.empty()) throw std::invalid_argument("R_lambda needs a nonempty partition");
  const StripProfile profile = border_strips(shape);
  const int order = profile[0] + 1;
  // Bottom row box with label L: white at x = 2L - order, black just right of it.
  std::vector<bool> removed(static_cast<std::size_t>(2 * order), false);
  for (int j = 0; j < profile.count(); ++j) {
    removed[static_cast<std::size_t>(2 * j)] = true;
    removed[static_cast<std::size_t>(2 * (j + profile[j]) + 1)] = true;
  }
  std::vector<Cell> cells;
  for (int b = 0; b < order; ++b) {
    for (int a = -(order - b); a <= order - b - 1; ++a) {
      if (b == 0 && removed[static_cast<std::size_t>(a + order)]) continue;
      cells.push_back({a, b});
    }
  }
  return Region(std::move(cells), Coloring{((order - 1) % 2 + 2) % 2}, shape);
}

Region Region::aztec_diamond(int n) {
  if (n < 1) throw std::invalid_argument("Aztec diamond order must be positive");
  std::vector<Cell> cells;
  for (int b = -n; b < n; ++b) {
    int half = b >= 0 ? n - b : n + b + 1;  // cells per side in this row
    for (int a = -half; a < half; ++a) cells.push_back({a, b});
  }
  return Region(std::move(cells), Coloring{((n - 1) % 2 + 2) % 2});
}

}  // namespace dominoes
