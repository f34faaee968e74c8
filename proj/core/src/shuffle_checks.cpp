#include "dominoes/shuffle_checks.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "dominoes/generating.hpp"
#include "dominoes/parallel.hpp"
#include "dominoes/shuffle.hpp"

namespace dominoes {

std::string ShuffleReport::summary() const {
  std::ostringstream out;
  out << "order " << n << ": " << tilings << " tilings, " << odd_deficient << " odd-deficient tilings, " << checks
      << " checks, " << failure_count << " failures";
  return out.str();
}

namespace {

constexpr std::size_t kMaxRecorded = 20;

class Recorder {
 public:
  explicit Recorder(ShuffleReport& report) : report_(report) {}

  void expect(bool condition, const std::string& what, const std::string& witness) {
    ++report_.checks;
    if (condition) return;
    ++report_.failure_count;
    if (report_.failures.size() < kMaxRecorded) report_.failures.push_back(what + " | witness " + witness);
  }

 private:
  ShuffleReport& report_;
};

std::pair<int, int> midpoint(const Domino& d, bool even) {
  std::pair<int, int> a, b;
  if (d.orientation == Orientation::vertical) {
    a = {d.anchor.x, d.anchor.y + 1};
    b = {d.anchor.x + 1, d.anchor.y + 1};
  } else {
    a = {d.anchor.x + 1, d.anchor.y};
    b = {d.anchor.x + 1, d.anchor.y + 1};
  }
  bool a_even = ((a.first + a.second) % 2 + 2) % 2 == 0;
  return a_even == even ? a : b;
}

// The V domino of a block filled vertically.
Domino vertical_v(const Block& b, const Coloring& coloring) {
  for (const auto& d : fill_block(b, Orientation::vertical))
    if (classify(d, coloring) == DominoClass::V) return d;
  throw std::logic_error("block without a V domino");
}

Domino horizontal_h(const Block& b, const Coloring& coloring) {
  for (const auto& d : fill_block(b, Orientation::horizontal))
    if (classify(d, coloring) == DominoClass::H) return d;
  throw std::logic_error("block without an H domino");
}

GenPoly3 completion_weights(const DeficientTiling& deficient) {
  const std::size_t holes = deficient.holes().size();
  PolyAccumulator acc;
  std::vector<Orientation> choice(holes);
  for (unsigned long mask = 0; mask < (1ul << holes); ++mask) {
    for (std::size_t i = 0; i < holes; ++i)
      choice[i] = (mask >> i) & 1u ? Orientation::vertical : Orientation::horizontal;
    acc.add(tiling_stats(deficient.fill(choice)).exponent());
  }
  return acc.to_poly();
}

int pair_count_of(const std::vector<PairCounts>& counts, const Domino& d, bool first) {
  for (const auto& pc : counts)
    if (pc.reference == d) return first ? pc.dinv1 : pc.dinv2;
  throw std::logic_error("no pair counts for domino");
}

void check_tiling(const DominoTiling& tiling, int n, Recorder& rec) {
  const std::string witness = tiling_to_json(tiling);
  const auto& coloring = tiling.region().coloring();
  const auto me = extended_me(tiling.dominoes(), n);
  const auto mo = extended_mo(tiling.dominoes(), n);

  for (const ExtendedAsm* m : {&me, &mo}) {
    for (int level = 1; level <= m->levels(); ++level) {
      for (int p = 0; p < m->width(level); ++p) {
        AsmAddress a{level, p};
        if (m->at(a) == 1) rec.expect(m->ne(a) == 0, "ne of a 1 entry is 0", witness);
        if (m->at(a) == -1) rec.expect(m->ne(a) == 1, "ne of a -1 entry is 1", witness);
      }
    }
  }
  for (const auto& d : tiling.dominoes()) {
    auto cls = tiling.classify(d);
    bool paired_kind = cls == DominoClass::V || cls == DominoClass::H;
    for (bool even : {true, false}) {
      const ExtendedAsm& m = even ? me : mo;
      auto [x, y] = midpoint(d, even);
      auto a = m.address(x, y);
      if (!a || m.at(*a) != 0) continue;
      rec.expect(m.ne(*a) == (paired_kind ? 1 : 0), even ? "ne table on M_e" : "ne table on M_o", witness);
    }
  }

  const auto counts = domino_pair_counts(tiling.dominoes(), coloring);
  std::vector<Domino> augmented = tiling.dominoes();
  for (const auto& d : attached_dominoes(n)) augmented.push_back(d);
  for (const auto& pc : counts) {
    const Domino& d = pc.reference;
    const bool ground = d.anchor.y == 0 && !in_aztec_core(d.anchor, n, 0, n);
    auto [ex, ey] = midpoint(d, true);
    auto [ox, oy] = midpoint(d, false);
    auto xa = me.address(ex, ey);
    auto ya = mo.address(ox, oy);
    rec.expect(xa.has_value() && ya.has_value(), "vertical domino has associated entries", witness);
    if (!xa || !ya) continue;
    const int y_value = mo.at(*ya);
    rec.expect(pc.dinv2 == mo.tp(*ya) - (y_value == 0 ? 1 : 0), "dinv2 = tp(y) - [y = 0]", witness);
    if (!ground) {
      rec.expect(pc.dinv1 == me.tp(*xa) - 1, "dinv1 = tp(x) - 1", witness);
    } else {
      const Domino refs[] = {d};
      int with_attached = domino_pair_counts(augmented, refs, coloring).front().dinv1;
      rec.expect(with_attached == me.tp(*xa) - 1, "dinv1 = tp(x) - 1 with attached row", witness);
      rec.expect(pc.dinv1 < me.tp(*xa) - 1, "dinv1 < tp(x) - 1 on the ground", witness);
    }
  }
}

struct RepresentativeResult {
  GenPoly3 odd_weights;
  GenPoly3 even_weights;
  std::vector<std::vector<Domino>> even_completions;
};

RepresentativeResult check_representative(const DominoTiling& tiling, int n,
                                          const std::shared_ptr<const Region>& next_region, Recorder& rec) {
  const std::string witness = tiling_to_json(tiling);
  const DeficientTiling odd = make_deficient(tiling, BlockParity::odd);
  const int m = static_cast<int>(odd.holes().size());
  const DeficientTiling even = shuffle(odd, next_region);
  const Coloring& odd_colors = odd.region().coloring();
  const Coloring& even_colors = even.region().coloring();

  rec.expect(static_cast<int>(even.holes().size()) == m + n + 1, "shuffle leaves m + n + 1 even holes", witness);
  for (const auto& h : even.holes())
    rec.expect(block_parity(h, even_colors) == BlockParity::even, "shuffle holes are even", witness);

  const DominoTiling odd_hat = odd.fill_all(Orientation::horizontal);
  const DominoTiling even_hat = even.fill_all(Orientation::horizontal);
  const ExtendedAsm me = extended_me(odd_hat.dominoes(), n);
  const ExtendedAsm mo = extended_mo(even_hat.dominoes(), n + 1);
  rec.expect(me == mo, "M_e(T_o) = M_o(S(T_o))", witness);

  const Statistics so = deficient_stats(odd);
  const Statistics se = deficient_stats(even);
  rec.expect(se.diags == so.diags, "diags(T_e) = diags(T_o)", witness);
  rec.expect(se.area == so.area - so.diags + n * (2 * n + 1) - m, "area recursion", witness);
  rec.expect(se.dinv == so.dinv + n * n + n * (n + 1) / 2, "dinv recursion", witness);

  for (const auto& h : odd.holes()) {
    auto [cx, cy] = h.center();
    auto a = me.address(cx, cy);
    rec.expect(a && me.at(*a) == -1, "odd hole centre reads -1", witness);
    if (a) rec.expect(me.level(*a) - 1 == horizontal_h(h, odd_colors).anchor.y, "odd hole level", witness);
  }
  for (const auto& h : even.holes()) {
    auto [cx, cy] = h.center();
    auto a = mo.address(cx, cy);
    rec.expect(a && mo.at(*a) == 1, "even hole centre reads 1", witness);
    if (a) rec.expect(mo.level(*a) - 1 == horizontal_h(h, even_colors).anchor.y, "even hole level", witness);
  }

  // Block dinv values with every hole filled vertically.
  const DominoTiling odd_vert = odd.fill_all(Orientation::vertical);
  const DominoTiling even_vert = even.fill_all(Orientation::vertical);
  const auto odd_counts = domino_pair_counts(odd_vert.dominoes(), odd_colors);
  const auto even_counts = domino_pair_counts(even_vert.dominoes(), even_colors);
  std::vector<int> ks, ls;
  std::map<std::pair<int, int>, int> k_at, l_at;
  for (const auto& h : odd.holes()) {
    int k = pair_count_of(odd_counts, vertical_v(h, odd_colors), true);
    ks.push_back(k);
    k_at[h.center()] = k;
  }
  for (const auto& h : even.holes()) {
    int l = pair_count_of(even_counts, vertical_v(h, even_colors), false);
    ls.push_back(l);
    auto [cx, cy] = h.center();
    l_at[{cx, cy - 1}] = l;  // same lattice position as the order-n array
  }
  std::multiset<int> remaining(ls.begin(), ls.end());
  bool contained = true;
  for (int k : ks) {
    auto it = remaining.find(k);
    if (it == remaining.end()) {
      contained = false;
      break;
    }
    remaining.erase(it);
  }
  std::multiset<int> expected;
  for (int i = 0; i <= n; ++i) expected.insert(i);
  rec.expect(contained && remaining == expected, "{l} minus {k} = {0..n}", witness);

  // Reading word pairing on the shared extended ASM.
  const auto word = me.reading_word();
  std::vector<int> open;  // indices of unpaired 1s
  std::vector<int> prefix(word.size() + 1, 0);
  for (std::size_t i = 0; i < word.size(); ++i) prefix[i + 1] = prefix[i] + word[i].second;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto& [addr, value] = word[i];
    rec.expect(me.tp(addr) == prefix[i], "tp is the reading-word prefix sum", witness);
    auto pt = me.point(addr);
    if (value == 1) {
      open.push_back(static_cast<int>(i));
      auto it = l_at.find(pt);
      rec.expect(it != l_at.end() && it->second == prefix[i], "l_j = tp of its 1 entry", witness);
    } else {
      auto it = k_at.find(pt);
      rec.expect(it != k_at.end() && it->second == prefix[i] - 1, "k_i = tp of its -1 entry minus 1", witness);
      rec.expect(!open.empty(), "every -1 pairs with an earlier 1", witness);
      if (!open.empty()) open.pop_back();
    }
  }
  std::vector<int> unpaired_tp;
  for (int i : open) unpaired_tp.push_back(prefix[static_cast<std::size_t>(i)]);
  std::vector<int> zero_to_n(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) zero_to_n[static_cast<std::size_t>(i)] = i;
  rec.expect(unpaired_tp == zero_to_n, "unpaired 1s have tp 0..n", witness);

  // Generating functions of all completions.
  RepresentativeResult out;
  out.odd_weights = completion_weights(odd);
  out.even_weights = completion_weights(even);
  GenPoly3 odd_formula = GenPoly3::monomial(so.exponent());
  for (int k : ks) {
    GenPoly3 factor = GenPoly3::z();
    factor.add_term({0, -1, k}, 1);
    odd_formula *= factor;
  }
  GenPoly3 even_formula = GenPoly3::monomial(se.exponent());
  for (int l : ls) even_formula *= GenPoly3::linear(0, l);
  rec.expect(out.odd_weights == odd_formula, "odd completion weights", witness);
  rec.expect(out.even_weights == even_formula, "even completion weights", witness);

  GenPoly3 chain = out.odd_weights.scale_z(-1, 0) *
                   GenPoly3::monomial({0, n * (2 * n + 1), n * n + n * (n + 1) / 2});
  for (int i = 0; i <= n; ++i) chain *= GenPoly3::linear(0, i);
  rec.expect(out.even_weights == chain, "completion weights step from order n to n + 1", witness);

  std::vector<Orientation> choice(even.holes().size());
  for (unsigned long mask = 0; mask < (1ul << choice.size()); ++mask) {
    for (std::size_t i = 0; i < choice.size(); ++i)
      choice[i] = (mask >> i) & 1u ? Orientation::vertical : Orientation::horizontal;
    out.even_completions.push_back(even.fill(choice).dominoes());
  }
  return out;
}

bool is_representative(const DominoTiling& tiling) {
  // Every odd block filled with horizontal dominoes.
  for (const auto& b : find_blocks(tiling, BlockParity::odd))
    if (!tiling.domino_at(b.corner) || tiling.domino_at(b.corner)->orientation != Orientation::horizontal) return false;
  return true;
}

}  // namespace

ShuffleReport verify_shuffle(int n, int jobs) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  ShuffleReport report;
  report.n = n;
  auto region = extended_region(n);
  auto next_region = extended_region(n + 1);
  const EnumerationLimits unlimited{.max_size = 0, .max_cells = 1 << 20};
  const auto tilings = enumerate_tilings(region, unlimited);
  report.tilings = static_cast<long long>(tilings.size());

  std::vector<ShuffleReport> partial(static_cast<std::size_t>(std::max(jobs, 1)));
  std::vector<GenPoly3> odd_total(partial.size()), even_total(partial.size());
  std::vector<std::vector<std::vector<Domino>>> completions(partial.size());
  std::vector<long long> reps(partial.size(), 0);
  run_workers(jobs, [&](int w) {
    auto& part = partial[static_cast<std::size_t>(w)];
    Recorder rec(part);
    for (std::size_t i = static_cast<std::size_t>(w); i < tilings.size(); i += static_cast<std::size_t>(std::max(jobs, 1))) {
      const auto& t = tilings[i];
      check_tiling(t, n, rec);
      if (!is_representative(t)) continue;
      ++reps[static_cast<std::size_t>(w)];
      auto res = check_representative(t, n, next_region, rec);
      odd_total[static_cast<std::size_t>(w)] += res.odd_weights;
      even_total[static_cast<std::size_t>(w)] += res.even_weights;
      auto& bucket = completions[static_cast<std::size_t>(w)];
      for (auto& c : res.even_completions) bucket.push_back(std::move(c));
    }
  });

  Recorder rec(report);
  GenPoly3 odd_sum, even_sum;
  std::set<std::vector<Domino>> seen;
  long long completion_count = 0;
  for (std::size_t w = 0; w < partial.size(); ++w) {
    report.checks += partial[w].checks;
    report.failure_count += partial[w].failure_count;
    for (auto& f : partial[w].failures)
      if (report.failures.size() < kMaxRecorded) report.failures.push_back(std::move(f));
    report.odd_deficient += reps[w];
    odd_sum += odd_total[w];
    even_sum += even_total[w];
    for (auto& c : completions[w]) {
      ++completion_count;
      seen.insert(std::move(c));
    }
  }

  const long long next_count = count_tilings(next_region, unlimited);
  rec.expect(completion_count == next_count && static_cast<long long>(seen.size()) == next_count,
             "completions of shuffled tilings are exactly the tilings of order n + 1",
             std::to_string(completion_count) + " completions, " + std::to_string(seen.size()) + " distinct, " +
                 std::to_string(next_count) + " tilings");
  rec.expect(odd_sum == p_lambda(Partition::square(n), Backend::tilings, unlimited),
             "completions of odd-deficient tilings sum to the order-n polynomial", "order " + std::to_string(n));
  GenPoly3 step = odd_sum.scale_z(-1, 0) * GenPoly3::monomial({0, n * (2 * n + 1), n * n + n * (n + 1) / 2});
  for (int i = 0; i <= n; ++i) step *= GenPoly3::linear(0, i);
  rec.expect(even_sum == step, "order n + 1 polynomial from the order n polynomial", "order " + std::to_string(n));
  return report;
}

}  // namespace dominoes
