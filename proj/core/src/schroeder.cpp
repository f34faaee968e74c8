#include "dominoes/schroeder.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dominoes {

ValidationError::ValidationError(int path, int x, int y, const std::string& reason)
    : std::invalid_argument("path " + std::to_string(path) + " at (" + std::to_string(x) + "," +
                            std::to_string(y) + "): " + reason),
      path_(path), x_(x), y_(y) {}

SchroederFamily::SchroederFamily(Partition shape, StripProfile profile, std::vector<AreaRow> rows)
    : shape_(std::move(shape)), profile_(std::move(profile)), rows_(std::move(rows)) {}

SchroederFamily SchroederFamily::from_area_array(const Partition& shape, std::vector<AreaRow> rows) {
  StripProfile profile = border_strips(shape);
  if (static_cast<int>(rows.size()) != profile.count())
    throw std::invalid_argument("area array has " + std::to_string(rows.size()) + " rows, expected " +
                                std::to_string(profile.count()));
  SchroederFamily family(shape, std::move(profile), std::move(rows));
  family.validate();
  return family;
}

SchroederFamily SchroederFamily::from_steps(const Partition& shape, const std::vector<std::string>& steps) {
  StripProfile profile = border_strips(shape);
  if (static_cast<int>(steps.size()) != profile.count())
    throw std::invalid_argument("expected " + std::to_string(profile.count()) + " step sequences");
  std::vector<AreaRow> rows(steps.size());
  for (int j = 0; j < profile.count(); ++j) {
    const int end = j + profile[j];
    int x = j;
    int y = j;
    for (char s : steps[static_cast<std::size_t>(j)]) {
      if (s != 'N' && s != 'E' && s != 'D') throw ValidationError(j, x, y, std::string("unknown step '") + s + "'");
      if (s != 'E') rows[static_cast<std::size_t>(j)].push_back({y - x, s == 'D'});
      x += s == 'N' ? 0 : 1;
      y += s == 'E' ? 0 : 1;
      if (x > y) throw ValidationError(j, x, y, "path goes below the diagonal");
      if (y > end) throw ValidationError(j, x, y, "path overshoots its endpoint");
    }
    if (x != end || y != end) throw ValidationError(j, x, y, "path does not end at its endpoint");
  }
  SchroederFamily family(shape, std::move(profile), std::move(rows));
  family.validate();
  return family;
}

SchroederFamily SchroederFamily::from_debug_string(const Partition& shape, const std::string& text) {
  std::vector<AreaRow> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(' ') == std::string::npos) continue;
    AreaRow row;
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      if (token == ".") continue;
      bool decorated = token.back() == '~';
      if (decorated) token.pop_back();
      row.push_back({std::stoi(token), decorated});
    }
    rows.push_back(std::move(row));
  }
  return from_area_array(shape, std::move(rows));
}

std::vector<FlatEntry> SchroederFamily::entries() const {
  std::vector<FlatEntry> out;
  for (std::size_t j = 0; j < rows_.size(); ++j)
    for (std::size_t off = 0; off < rows_[j].size(); ++off)
      out.push_back({static_cast<int>(j + off), rows_[j][off].value, rows_[j][off].decorated});
  return out;
}

std::vector<std::pair<int, int>> SchroederFamily::vertices(int j) const {
  std::vector<std::pair<int, int>> pts{{j, j}};
  const auto& row = rows_[static_cast<std::size_t>(j)];
  int x = j;
  for (std::size_t off = 0; off < row.size(); ++off) {
    int i = j + static_cast<int>(off);
    int start = i - row[off].value;
    for (; x < start; ++x) pts.emplace_back(x + 1, i);
    x = start + (row[off].decorated ? 1 : 0);
    pts.emplace_back(x, i + 1);
  }
  int end = j + profile_[j];
  for (; x < end; ++x) pts.emplace_back(x + 1, end);
  return pts;
}

std::vector<std::string> SchroederFamily::steps() const {
  std::vector<std::string> out(rows_.size());
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const auto pts = vertices(static_cast<int>(j));
    for (std::size_t p = 1; p < pts.size(); ++p) {
      int dx = pts[p].first - pts[p - 1].first;
      int dy = pts[p].second - pts[p - 1].second;
      out[j] += dx && dy ? 'D' : (dy ? 'N' : 'E');
    }
  }
  return out;
}

void SchroederFamily::validate() const {
  std::set<std::pair<int, int>> reserved;
  for (int j = 0; j < profile_.count(); ++j) {
    reserved.emplace(j, j);
    reserved.emplace(j + profile_[j], j + profile_[j]);
  }
  std::set<std::pair<int, int>> used;
  for (int j = 0; j < profile_.count(); ++j) {
    const auto& row = rows_[static_cast<std::size_t>(j)];
    if (static_cast<int>(row.size()) != profile_[j])
      throw ValidationError(j, j, j, "row has " + std::to_string(row.size()) + " entries, expected " +
                                         std::to_string(profile_[j]));
    int x = j;  // x reached after the previous row's step
    for (std::size_t off = 0; off < row.size(); ++off) {
      int i = j + static_cast<int>(off);
      int start = i - row[off].value;
      if (row[off].value < 0) throw ValidationError(j, start, i, "negative area entry");
      if (start < x) throw ValidationError(j, start, i, "step starts left of the path's position");
      x = start + (row[off].decorated ? 1 : 0);
    }
    const auto pts = vertices(j);
    for (const auto& p : pts) {
      bool own_end = p == std::pair{j, j} || p == std::pair{j + profile_[j], j + profile_[j]};
      if (!own_end && reserved.count(p))
        throw ValidationError(j, p.first, p.second, "path meets another path's endpoint");
      if (!used.insert(p).second) throw ValidationError(j, p.first, p.second, "paths intersect");
    }
  }
}

std::string SchroederFamily::to_debug_string() const {
  const int width = profile_.count() ? profile_[0] : 0;
  std::string out;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    std::string line;
    for (int i = 0; i < width; ++i) {
      if (!line.empty()) line += ' ';
      int off = i - static_cast<int>(j);
      if (off < 0 || off >= static_cast<int>(rows_[j].size())) {
        line += '.';
      } else {
        line += std::to_string(rows_[j][static_cast<std::size_t>(off)].value);
        if (rows_[j][static_cast<std::size_t>(off)].decorated) line += '~';
      }
    }
    out += line + '\n';
  }
  return out;
}

int diags(std::span<const FlatEntry> entries) {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const FlatEntry& e) { return e.decorated; }));
}

int area(std::span<const FlatEntry> entries) {
  int total = 0;
  for (const auto& e : entries) total += e.value;
  return total;
}

int dinv_pairs(std::span<const FlatEntry> entries) {
  int pairs = 0;
  for (const auto& b : entries) {
    for (const auto& c : entries) {
      if (&b == &c) continue;
      if (b.value == c.value && b.row < c.row && !b.decorated) ++pairs;
      if (b.value == c.value + 1 && b.row <= c.row && !c.decorated) ++pairs;
    }
  }
  return pairs;
}

int diags(const SchroederFamily& family) { return diags(family.entries()); }
int area(const SchroederFamily& family) { return area(family.entries()); }
int dinv(const SchroederFamily& family, int adj_lambda) { return adj_lambda + dinv_pairs(family.entries()); }

Statistics statistics(const SchroederFamily& family) {
  const auto e = family.entries();
  return {diags(e), area(e), adj(family.shape()) + dinv_pairs(e)};
}

namespace {

void check_guard(const Partition& shape, const EnumerationLimits& limits) {
  if (shape.size() > limits.max_size)
    throw GuardExceeded("|lambda| = " + std::to_string(shape.size()) + " exceeds the path enumeration bound " +
                        std::to_string(limits.max_size));
}

// Depth-first generation of strictly nested paths, outermost first.
class FamilyWalker {
 public:
  FamilyWalker(const Partition& shape, const std::function<void(std::span<const FlatEntry>)>& visit,
               WorkSplit split)
      : profile_(border_strips(shape)), visit_(visit), split_(split) {
    for (int j = 0; j < profile_.count(); ++j) {
      if (profile_[j] > 0) paths_.push_back(j);
      side_ = std::max(side_, j + profile_[j] + 1);
    }
    grid_.assign(static_cast<std::size_t>(side_ * side_), 0);
    for (int j = 0; j < profile_.count(); ++j) {
      mark(j, j, 1);
      mark(j + profile_[j], j + profile_[j], 1);
    }
  }

  void run() { next_path(0); }

 private:
  char& at(int x, int y) { return grid_[static_cast<std::size_t>(y * side_ + x)]; }
  void mark(int x, int y, char v) { at(x, y) = v; }

  void next_path(std::size_t idx) {
    if (idx == paths_.size()) {
      if (paths_.empty() && split_.worker != 0 && split_.jobs > 1) return;
      visit_(entries_);
      return;
    }
    int j = paths_[idx];
    walk(idx, j, j, j + profile_[j]);
  }

  void walk(std::size_t idx, int x, int y, int end) {
    if (x == end && y == end) {
      if (idx == 0 && !split_.keeps(first_path_counter_++)) return;
      next_path(idx + 1);
      return;
    }
    // North, east, diagonal.
    if (y + 1 <= end) step(idx, x, y + 1, end, false, true, x, y);
    if (x + 1 <= y) step(idx, x + 1, y, end, false, false, x, y);
    if (y + 1 <= end) step(idx, x + 1, y + 1, end, true, true, x, y);
  }

  void step(std::size_t idx, int nx, int ny, int end, bool diagonal, bool rises, int x, int y) {
    bool target = nx == end && ny == end;
    if (!target && at(nx, ny)) return;
    if (rises) entries_.push_back({y, y - x, diagonal});
    if (!target) mark(nx, ny, 1);
    walk(idx, nx, ny, end);
    if (!target) mark(nx, ny, 0);
    if (rises) entries_.pop_back();
  }

  StripProfile profile_;
  const std::function<void(std::span<const FlatEntry>)>& visit_;
  WorkSplit split_;
  std::vector<int> paths_;
  int side_ = 1;
  std::vector<char> grid_;
  std::vector<FlatEntry> entries_;
  long long first_path_counter_ = 0;
};

}  // namespace

void for_each_family_entries(const Partition& shape, const std::function<void(std::span<const FlatEntry>)>& visit,
                             const EnumerationLimits& limits, WorkSplit split) {
  check_guard(shape, limits);
  FamilyWalker(shape, visit, split).run();
}

void for_each_family(const Partition& shape, const std::function<void(const SchroederFamily&)>& visit,
                     const EnumerationLimits& limits, WorkSplit split) {
  const StripProfile profile = border_strips(shape);
  for_each_family_entries(
      shape,
      [&](std::span<const FlatEntry> flat) {
        // Entries arrive path by path, each path contributing n_j consecutive rows.
        std::vector<AreaRow> rows(static_cast<std::size_t>(profile.count()));
        std::size_t pos = 0;
        for (int j = 0; j < profile.count(); ++j)
          for (int r = 0; r < profile[j]; ++r, ++pos) rows[static_cast<std::size_t>(j)].push_back({flat[pos].value, flat[pos].decorated});
        visit(SchroederFamily::from_area_array(shape, std::move(rows)));
      },
      limits, split);
}

std::vector<SchroederFamily> enumerate_families(const Partition& shape, const EnumerationLimits& limits) {
  std::vector<SchroederFamily> out;
  for_each_family(shape, [&out](const SchroederFamily& f) { out.push_back(f); }, limits);
  return out;
}

}  // namespace dominoes
