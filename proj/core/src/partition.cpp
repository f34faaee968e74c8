#include "dominoes/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace dominoes {

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
    throw std::invalid_argument("cannot parse partition '" + std::string(whole) + "'");
  return value;
}

void partitions_rec(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, cap); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = text.find_first_of(", ", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      int part = parse_int(token.substr(0, caret), text);
      int times = parse_int(token.substr(caret + 1), text);
      if (times < 0) throw std::invalid_argument("negative exponent in '" + std::string(text) + "'");
      parts.insert(parts.end(), static_cast<std::size_t>(times), part);
    } else {
      parts.push_back(parse_int(token, text));
    }
    pos = end;
  }
  // A lone "0" denotes the empty partition.
  if (parts.size() == 1 && parts[0] == 0) parts.clear();
  return Partition(std::move(parts));
}

Partition Partition::square(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(n), n));
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int c = 1; c <= largest(); ++c) {
    int height = static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [c](int p) { return p >= c; }));
    conj.push_back(height);
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

int StripProfile::total() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }

int StripProfile::nonzero() const {
  return static_cast<int>(std::count_if(lengths.begin(), lengths.end(), [](int v) { return v > 0; }));
}

std::vector<BorderStrip> peel_border_strips(const Partition& lambda) {
  std::vector<int> rows(lambda.parts().begin(), lambda.parts().end());
  std::vector<BorderStrip> strips;
  while (!rows.empty()) {
    BorderStrip strip;
    strip.rightmost_column = rows.front();
    std::vector<int> inner(rows.size());
    // Box (i, c) belongs to the rim iff (i+1, c+1) is not in the diagram.
    for (std::size_t i = 0; i < rows.size(); ++i) {
      int below = i + 1 < rows.size() ? rows[i + 1] : 0;
      inner[i] = std::max(below - 1, 0);
      for (int c = rows[i] - 1; c >= inner[i]; --c)
        strip.cells.emplace_back(static_cast<int>(i), c);
    }
    strips.push_back(std::move(strip));
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    rows = std::move(inner);
  }
  return strips;
}

StripProfile border_strips(const Partition& lambda) {
  StripProfile profile;
  profile.lengths.assign(static_cast<std::size_t>(lambda.largest()), 0);
  for (const auto& strip : peel_border_strips(lambda)) {
    int j = lambda.largest() - strip.rightmost_column;
    profile.lengths[static_cast<std::size_t>(j)] = static_cast<int>(strip.cells.size());
  }
  return profile;
}

int adj(const Partition& lambda) {
  StripProfile profile = border_strips(lambda);
  int total = 0;
  for (int j = 0; j < profile.count(); ++j)
    if (profile[j] > 0) total += lambda.largest() - 1 - j;
  return total;
}

int adj_by_crossings(const Partition& lambda) {
  int total = 0;
  for (const auto& strip : peel_border_strips(lambda)) {
    auto [lo, hi] = std::minmax_element(strip.cells.begin(), strip.cells.end(),
                                        [](const auto& a, const auto& b) { return a.second < b.second; });
    total += hi->second - lo->second;
  }
  return total;
}

int sgn(const Partition& lambda) { return adj(lambda) % 2 == 0 ? 1 : -1; }

int durfee_rank(const Partition& lambda) {
  int r = 0;
  while (r < lambda.length() && lambda.part(r) >= r + 1) ++r;
  return r;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

}  // namespace dominoes
