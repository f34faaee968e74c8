#include "dominoes/labeled.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dominoes {

namespace {

// Horizontal extent of a path at each height it visits.
struct PathShape {
  int start = 0;
  int end = 0;
  std::vector<int> left;   // smallest x at height start + i
  std::vector<int> right;  // largest x at height start + i
  std::vector<int> diagonal_touches;

  int lo(int y) const { return left[static_cast<std::size_t>(y - start)]; }
  int hi(int y) const { return right[static_cast<std::size_t>(y - start)]; }
};

PathShape trace(int j, int length, const std::string& steps) {
  PathShape p{j, j + length, {j}, {}, {}};
  int x = j;
  int y = j;
  for (char s : steps) {
    if (s == 'E') {
      ++x;
    } else if (s == 'N') {
      p.right.push_back(x);
      ++y;
      p.left.push_back(x);
    } else {
      throw ValidationError(j, x, y, std::string("unknown step '") + s + "'");
    }
    if (x > y) throw ValidationError(j, x, y, "path goes below the diagonal");
    if (y > p.end) throw ValidationError(j, x, y, "path overshoots its endpoint");
    if (x == y) p.diagonal_touches.push_back(x);
  }
  if (x != p.end || y != p.end) throw ValidationError(j, x, y, "path does not end at its endpoint");
  p.right.push_back(x);
  return p;
}

// Empty when outer and inner are compatible, otherwise the violated condition.
std::string conflict(const PathShape& outer, const PathShape& inner) {
  const int from = std::max(outer.start, inner.start);
  const int to = std::min(outer.end, inner.end);
  for (int y = from; y <= to; ++y) {
    if (inner.lo(y) < outer.lo(y) || inner.hi(y) < outer.hi(y)) return "paths cross";
    if (std::min(outer.hi(y), inner.hi(y)) > std::max(outer.lo(y), inner.lo(y))) return "paths share an east step";
  }
  return {};
}

std::string touches_foreign_start(const PathShape& p, int j, int k) {
  for (int m : p.diagonal_touches)
    if (m != j && m <= k) return "path meets the start of path " + std::to_string(m);
  return {};
}

std::vector<std::string> dyck_words(int length) {
  std::vector<std::string> out;
  std::string word;
  auto rec = [&](auto&& self, int up, int down) -> void {
    if (up == length && down == length) {
      out.push_back(word);
      return;
    }
    if (up < length) {
      word.push_back('N');
      self(self, up + 1, down);
      word.pop_back();
    }
    if (down < up) {
      word.push_back('E');
      self(self, up, down + 1);
      word.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

void check_guard(const Partition& shape, const EnumerationLimits& limits) {
  if (shape.size() > limits.max_size)
    throw GuardExceeded("|lambda| = " + std::to_string(shape.size()) + " exceeds the path enumeration bound " +
                        std::to_string(limits.max_size));
}

// Pairwise constraints on labels: first < second (strict) or first <= second.
struct LabelConstraints {
  std::vector<std::pair<int, int>> strict;
  std::vector<std::pair<int, int>> weak;
};

LabelConstraints constraints_of(const NestedDyckFamily& family) {
  LabelConstraints c;
  const auto& steps = family.north_steps();
  for (std::size_t a = 0; a < steps.size(); ++a)
    for (std::size_t b = 0; b < steps.size(); ++b) {
      const NorthStep& lower = steps[a];
      const NorthStep& upper = steps[b];
      if (upper.row != lower.row + 1 || upper.x != lower.x) continue;
      if (upper.path == lower.path) c.strict.emplace_back(static_cast<int>(a), static_cast<int>(b));
      else if (upper.path < lower.path) c.weak.emplace_back(static_cast<int>(b), static_cast<int>(a));
    }
  return c;
}

// Depth-first search over labelings; remaining[v-1] < 0 means label v is unbounded.
void search_labelings(const NestedDyckFamily& family, std::vector<int> remaining,
                      const std::function<void(const Labeling&)>& visit) {
  const int m = family.size();
  const LabelConstraints c = constraints_of(family);
  std::vector<std::vector<std::pair<int, int>>> strict_at(static_cast<std::size_t>(m));
  std::vector<std::vector<std::pair<int, int>>> weak_at(static_cast<std::size_t>(m));
  for (auto [a, b] : c.strict) strict_at[static_cast<std::size_t>(std::max(a, b))].emplace_back(a, b);
  for (auto [a, b] : c.weak) weak_at[static_cast<std::size_t>(std::max(a, b))].emplace_back(a, b);
  Labeling labels(static_cast<std::size_t>(m), 0);
  const int max_label = static_cast<int>(remaining.size());
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      visit(labels);
      return;
    }
    for (int v = 1; v <= max_label; ++v) {
      int& left = remaining[static_cast<std::size_t>(v - 1)];
      if (left == 0) continue;
      labels[static_cast<std::size_t>(i)] = v;
      bool ok = true;
      for (auto [a, b] : strict_at[static_cast<std::size_t>(i)])
        ok = ok && labels[static_cast<std::size_t>(a)] < labels[static_cast<std::size_t>(b)];
      for (auto [a, b] : weak_at[static_cast<std::size_t>(i)])
        ok = ok && labels[static_cast<std::size_t>(a)] <= labels[static_cast<std::size_t>(b)];
      if (!ok) continue;
      if (left > 0) --left;
      self(self, i + 1);
      if (left >= 0) ++left;
    }
    labels[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0);
}

void require_permutation(std::span<const int> word) {
  std::vector<bool> seen(word.size() + 1, false);
  for (int v : word) {
    if (v < 1 || v > static_cast<int>(word.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("word is not a permutation of 1.." + std::to_string(word.size()));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

// Values first..first+len-1 appear in increasing (or decreasing) positional order.
bool block_in_order(const std::vector<int>& position, int first, int len, bool increasing) {
  for (int v = first; v + 1 < first + len; ++v) {
    bool forward = position[static_cast<std::size_t>(v)] < position[static_cast<std::size_t>(v + 1)];
    if (forward != increasing) return false;
  }
  return true;
}

std::vector<int> positions(std::span<const int> word) {
  std::vector<int> pos(word.size() + 1, 0);
  for (std::size_t i = 0; i < word.size(); ++i) pos[static_cast<std::size_t>(word[i])] = static_cast<int>(i);
  return pos;
}

bool shares_north_step(const NestedDyckFamily& family) {
  const auto& steps = family.north_steps();
  for (std::size_t a = 0; a < steps.size(); ++a)
    for (std::size_t b = a + 1; b < steps.size(); ++b)
      if (steps[a].row == steps[b].row && steps[a].x == steps[b].x) return true;
  return false;
}

Partition shuffle_pair_mu(int d) { return d > 0 ? Partition({d}) : Partition(); }
Partition shuffle_pair_eta(int n, int d) { return n - d > 0 ? Partition({n - d}) : Partition(); }

struct LabeledSides {
  std::vector<PolyAccumulator> labeled;    // indexed by d
  std::vector<std::vector<std::string>> images;  // Schroeder images by d, as debug strings
  std::vector<std::string> problems;
};

LabeledSides collect_labeled_sides(const Partition& shape, const EnumerationLimits& limits, bool with_images) {
  const int n = shape.size();
  const int a = adj(shape);
  LabeledSides sides;
  sides.labeled.resize(static_cast<std::size_t>(n + 1));
  sides.images.resize(static_cast<std::size_t>(n + 1));
  for_each_weak_family(
      shape,
      [&](const NestedDyckFamily& family) {
        const int ar = area_labeled(family);
        const bool shared = shares_north_step(family);
        for_each_standard_labeling(family, [&](const Labeling& w) {
          const std::vector<int> word = reading_word(family, w);
          const int dv = dinv_labeled(family, w, a);
          for (int d = 0; d <= n; ++d) {
            if (!is_mu_eta_shuffle(word, shuffle_pair_mu(d), shuffle_pair_eta(n, d))) continue;
            if (shared && sides.problems.size() < 20)
              sides.problems.push_back("shuffle-filtered labeling on a family sharing a north step:\n" +
                                       to_debug_string(family, w));
            sides.labeled[static_cast<std::size_t>(d)].add({d, ar, dv});
            if (!with_images) continue;
            try {
              SchroederFamily image = to_schroeder(family, w, d);
              Statistics st = statistics(image);
              if (st != Statistics{d, ar, dv} && sides.problems.size() < 20)
                sides.problems.push_back("statistics change under the bijection:\n" + to_debug_string(family, w));
              sides.images[static_cast<std::size_t>(d)].push_back(image.to_debug_string());
            } catch (const std::exception& e) {
              if (sides.problems.size() < 20)
                sides.problems.push_back(std::string("bijection image invalid (") + e.what() + "):\n" +
                                         to_debug_string(family, w));
            }
          }
        });
      },
      limits);
  return sides;
}

}  // namespace

NestedDyckFamily::NestedDyckFamily(Partition shape, StripProfile profile, std::vector<std::string> steps)
    : shape_(std::move(shape)), profile_(std::move(profile)), steps_(std::move(steps)) {
  for (int j = 0; j < profile_.count(); ++j) {
    int x = j;
    int y = j;
    for (char s : steps_[static_cast<std::size_t>(j)]) {
      if (s == 'N') north_.push_back({j, y++, x});
      else ++x;
    }
  }
}

NestedDyckFamily NestedDyckFamily::from_steps(const Partition& shape, const std::vector<std::string>& steps) {
  StripProfile profile = border_strips(shape);
  if (static_cast<int>(steps.size()) != profile.count())
    throw std::invalid_argument("expected " + std::to_string(profile.count()) + " step sequences");
  std::vector<PathShape> shapes;
  const int k = profile.k();
  for (int j = 0; j <= k; ++j) {
    shapes.push_back(trace(j, profile[j], steps[static_cast<std::size_t>(j)]));
    if (auto why = touches_foreign_start(shapes.back(), j, k); !why.empty()) throw ValidationError(j, j, j, why);
    for (int i = 0; i < j; ++i)
      if (auto why = conflict(shapes[static_cast<std::size_t>(i)], shapes.back()); !why.empty())
        throw ValidationError(j, j, j, why + " with path " + std::to_string(i));
  }
  return NestedDyckFamily(shape, std::move(profile), steps);
}

std::string NestedDyckFamily::to_debug_string() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < steps_.size(); ++j) out << j << ": " << (steps_[j].empty() ? "-" : steps_[j]) << '\n';
  return out.str();
}

std::string to_debug_string(const NestedDyckFamily& family, const Labeling& labels) {
  return family.to_debug_string() + "read: " + word_to_string(reading_word(family, labels), true) + '\n';
}

bool is_valid_labeling(const NestedDyckFamily& family, const Labeling& labels) {
  if (static_cast<int>(labels.size()) != family.size()) return false;
  if (std::any_of(labels.begin(), labels.end(), [](int v) { return v < 1; })) return false;
  const LabelConstraints c = constraints_of(family);
  for (auto [a, b] : c.strict)
    if (labels[static_cast<std::size_t>(a)] >= labels[static_cast<std::size_t>(b)]) return false;
  for (auto [a, b] : c.weak)
    if (labels[static_cast<std::size_t>(a)] > labels[static_cast<std::size_t>(b)]) return false;
  return true;
}

std::vector<int> reading_order(const NestedDyckFamily& family) {
  const auto& steps = family.north_steps();
  std::vector<int> order(steps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const NorthStep& s = steps[static_cast<std::size_t>(a)];
    const NorthStep& t = steps[static_cast<std::size_t>(b)];
    return std::tuple(-s.diagonal(), -s.row, -s.path) < std::tuple(-t.diagonal(), -t.row, -t.path);
  });
  return order;
}

std::vector<int> reading_word(const NestedDyckFamily& family, const Labeling& labels) {
  std::vector<int> word;
  for (int i : reading_order(family)) word.push_back(labels[static_cast<std::size_t>(i)]);
  return word;
}

std::string word_to_string(std::span<const int> word, bool commas) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (commas && i > 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

std::vector<int> standardize_word(std::span<const int> word) {
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return word[static_cast<std::size_t>(a)] < word[static_cast<std::size_t>(b)];
  });
  std::vector<int> out(word.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) out[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank) + 1;
  return out;
}

Labeling standardize(const NestedDyckFamily& family, const Labeling& labels) {
  const std::vector<int> order = reading_order(family);
  const std::vector<int> word = standardize_word(reading_word(family, labels));
  Labeling out(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) out[static_cast<std::size_t>(order[i])] = word[i];
  return out;
}

int area_labeled(const NestedDyckFamily& family) {
  int total = 0;
  for (const NorthStep& s : family.north_steps()) total += s.diagonal();
  return total;
}

int dinv_pairs_labeled(const NestedDyckFamily& family, const Labeling& labels) {
  const auto& steps = family.north_steps();
  int count = 0;
  for (std::size_t a = 0; a < steps.size(); ++a)
    for (std::size_t b = 0; b < steps.size(); ++b) {
      if (labels[a] >= labels[b]) continue;
      const NorthStep& small = steps[a];
      const NorthStep& big = steps[b];
      if (small.diagonal() == big.diagonal() && small.x <= big.x && a != b) ++count;
      else if (big.diagonal() == small.diagonal() + 1 && big.x < small.x) ++count;
    }
  return count;
}

int dinv_labeled(const NestedDyckFamily& family, const Labeling& labels, int adj_lambda) {
  return adj_lambda + dinv_pairs_labeled(family, labels);
}

bool is_mu_shuffle(std::span<const int> word, const Partition& mu) {
  require_permutation(word);
  if (mu.size() != static_cast<int>(word.size())) throw std::invalid_argument("|mu| differs from the word length");
  const std::vector<int> pos = positions(word);
  int first = 1;
  for (int part : mu.parts()) {
    if (!block_in_order(pos, first, part, true)) return false;
    first += part;
  }
  return true;
}

bool is_mu_eta_shuffle(std::span<const int> word, const Partition& mu, const Partition& eta) {
  require_permutation(word);
  if (mu.size() + eta.size() != static_cast<int>(word.size()))
    throw std::invalid_argument("|mu| + |eta| differs from the word length");
  const std::vector<int> pos = positions(word);
  int first = 1;
  for (int part : eta.parts()) {
    if (!block_in_order(pos, first, part, false)) return false;
    first += part;
  }
  for (int part : mu.parts()) {
    if (!block_in_order(pos, first, part, true)) return false;
    first += part;
  }
  return true;
}

void for_each_weak_family(const Partition& shape, const std::function<void(const NestedDyckFamily&)>& visit,
                          const EnumerationLimits& limits) {
  check_guard(shape, limits);
  const StripProfile profile = border_strips(shape);
  const int k = profile.k();
  std::vector<std::vector<std::pair<std::string, PathShape>>> options(static_cast<std::size_t>(k + 1));
  for (int j = 0; j <= k; ++j)
    for (std::string& w : dyck_words(profile[j])) {
      PathShape p = trace(j, profile[j], w);
      if (touches_foreign_start(p, j, k).empty()) options[static_cast<std::size_t>(j)].emplace_back(std::move(w), p);
    }
  std::vector<const PathShape*> chosen;
  std::vector<std::string> steps;
  auto rec = [&](auto&& self, int j) -> void {
    if (j > k) {
      visit(NestedDyckFamily::from_steps(shape, steps));
      return;
    }
    for (const auto& [word, p] : options[static_cast<std::size_t>(j)]) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const PathShape* o) { return conflict(*o, p).empty(); });
      if (!ok) continue;
      chosen.push_back(&p);
      steps.push_back(word);
      self(self, j + 1);
      chosen.pop_back();
      steps.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<NestedDyckFamily> enumerate_weak_families(const Partition& shape, const EnumerationLimits& limits) {
  std::vector<NestedDyckFamily> out;
  for_each_weak_family(shape, [&](const NestedDyckFamily& f) { out.push_back(f); }, limits);
  return out;
}

void for_each_labeling(const NestedDyckFamily& family, int max_label,
                       const std::function<void(const Labeling&)>& visit) {
  search_labelings(family, std::vector<int>(static_cast<std::size_t>(std::max(max_label, 0)), -1), visit);
}

void for_each_standard_labeling(const NestedDyckFamily& family, const std::function<void(const Labeling&)>& visit) {
  search_labelings(family, std::vector<int>(static_cast<std::size_t>(family.size()), 1), visit);
}

GenPoly3 coeff_on_monomial(const NestedDyckFamily& family, const Partition& mu) {
  if (mu.size() != family.size()) throw std::invalid_argument("|mu| differs from |lambda|");
  const int a = adj(family.shape());
  PolyAccumulator acc;
  search_labelings(family, std::vector<int>(mu.parts().begin(), mu.parts().end()),
                   [&](const Labeling& w) { acc.add({0, 0, dinv_labeled(family, w, a)}); });
  return acc.to_poly();
}

GenPoly3 shuffle_coefficient(const NestedDyckFamily& family, const Partition& mu) {
  if (mu.size() != family.size()) throw std::invalid_argument("|mu| differs from |lambda|");
  const int a = adj(family.shape());
  PolyAccumulator acc;
  for_each_standard_labeling(family, [&](const Labeling& w) {
    if (is_mu_shuffle(reading_word(family, w), mu)) acc.add({0, 0, dinv_labeled(family, w, a)});
  });
  return acc.to_poly();
}

SchroederFamily to_schroeder(const NestedDyckFamily& family, const Labeling& labels, int d) {
  const int threshold = family.size() - d;
  std::vector<std::string> steps;
  std::size_t index = 0;
  for (const std::string& path : family.steps()) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i] == 'E') {
        out += 'E';
        continue;
      }
      const int label = labels[index++];
      if (label <= threshold) {
        out += 'N';
        continue;
      }
      if (i + 1 == path.size() || path[i + 1] != 'E')
        throw std::invalid_argument("north step labelled " + std::to_string(label) + " is not followed by an east step");
      out += 'D';
      ++i;
    }
    steps.push_back(std::move(out));
  }
  return SchroederFamily::from_steps(family.shape(), steps);
}

LabeledSchroederCheck labeled_schroeder_check(const Partition& shape, int d, const EnumerationLimits& limits) {
  const int n = shape.size();
  if (d < 0 || d > n) throw std::invalid_argument("d must lie in 0.." + std::to_string(n));
  LabeledSides sides = collect_labeled_sides(shape, limits, true);
  LabeledSchroederCheck result;
  result.labeled_side = sides.labeled[static_cast<std::size_t>(d)].to_poly();
  PolyAccumulator schroeder;
  std::set<std::string> targets;
  for_each_family(
      shape,
      [&](const SchroederFamily& f) {
        Statistics st = statistics(f);
        if (st.diags != d) return;
        schroeder.add(st.exponent());
        targets.insert(f.to_debug_string());
      },
      limits);
  result.schroeder_side = schroeder.to_poly();
  std::ostringstream detail;
  for (const std::string& p : sides.problems) detail << p;
  std::vector<std::string>& images = sides.images[static_cast<std::size_t>(d)];
  std::sort(images.begin(), images.end());
  const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  const bool onto = std::set<std::string>(images.begin(), images.end()) == targets;
  if (!injective) detail << "bijection is not injective\n";
  if (!onto) detail << "bijection image differs from the Schroeder families with " << d << " diagonal steps\n";
  const bool equal = result.labeled_side == result.schroeder_side;
  if (!equal)
    detail << "labeled side: " << result.labeled_side.to_text() << "\nschroeder side: " << result.schroeder_side.to_text()
           << '\n';
  result.ok = equal && injective && onto && sides.problems.empty();
  result.detail = detail.str();
  return result;
}

GenPoly3 labeled_generating_polynomial(const Partition& shape, const EnumerationLimits& limits) {
  LabeledSides sides = collect_labeled_sides(shape, limits, false);
  if (!sides.problems.empty()) throw std::logic_error(sides.problems.front());
  PolyAccumulator total;
  for (const PolyAccumulator& acc : sides.labeled) total.merge(acc);
  return total.to_poly();
}

CheckReport check_standardization(const Partition& shape, int max_label, const EnumerationLimits& limits) {
  CheckReport report;
  const int a = adj(shape);
  for_each_weak_family(
      shape,
      [&](const NestedDyckFamily& family) {
        for_each_labeling(family, max_label, [&](const Labeling& w) {
          ++report.cases;
          const Labeling s = standardize(family, w);
          const bool ok = is_valid_labeling(family, s) &&
                          reading_word(family, s) == standardize_word(reading_word(family, w)) &&
                          dinv_labeled(family, s, a) == dinv_labeled(family, w, a);
          if (ok) return;
          if (report.failures++ == 0) report.first_failure = to_debug_string(family, w);
        });
      },
      limits);
  return report;
}

CheckReport check_monomial_coefficients(const Partition& shape, const EnumerationLimits& limits) {
  CheckReport report;
  const std::vector<Partition> weights = partitions_of(shape.size());
  for_each_weak_family(
      shape,
      [&](const NestedDyckFamily& family) {
        for (const Partition& mu : weights) {
          ++report.cases;
          GenPoly3 lhs = coeff_on_monomial(family, mu);
          GenPoly3 rhs = shuffle_coefficient(family, mu);
          if (lhs == rhs) continue;
          if (report.failures++ == 0)
            report.first_failure = family.to_debug_string() + "mu = " + mu.to_string() + "\nweight side: " +
                                   lhs.to_text() + "\nshuffle side: " + rhs.to_text() + '\n';
        }
      },
      limits);
  return report;
}

}  // namespace dominoes
