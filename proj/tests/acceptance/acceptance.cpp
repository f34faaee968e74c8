// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance              run criteria 1..10
//   acceptance --only K     run criterion K
//   acceptance --extended   also run the long variants (order 6 diamonds, size 9 shapes)

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dominoes/asm.hpp"
#include "dominoes/domino.hpp"
#include "dominoes/generating.hpp"
#include "dominoes/labeled.hpp"
#include "dominoes/parallel.hpp"
#include "dominoes/schroeder.hpp"
#include "dominoes/shuffle_checks.hpp"

namespace {

using namespace dominoes;

// Collects mismatches for one criterion.
class Outcome {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) notes_.push_back(what);
  }
  bool ok() const { return notes_.empty(); }
  long long checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  long long checks_ = 0;
  std::vector<std::string> notes_;
};

struct Context {
  bool extended = false;
  int jobs = 1;
};

std::vector<Partition> partitions_up_to(int size) {
  std::vector<Partition> out;
  for (int m = 1; m <= size; ++m)
    for (Partition& p : partitions_of(m)) out.push_back(std::move(p));
  return out;
}

void base_cases(const Context&, Outcome& out) {
  out.expect(p_lambda(Partition({1})) == GenPoly3::z() + GenPoly3::constant(1), "P_(1) differs from z + 1");
  const GenPoly3 expected = GenPoly3::monomial({0, 2, 2}) * GenPoly3::linear(0, 0) * GenPoly3::linear(1, 0) *
                            GenPoly3::linear(0, 1);
  const GenPoly3 got = p_lambda(Partition({2, 2}));
  out.expect(got == expected, "P_(2,2) = " + got.to_text());

  auto region = std::make_shared<const Region>(Region::for_partition(Partition({2, 2})));
  std::multiset<std::tuple<int, int, int>> weights;
  for (const DominoTiling& t : enumerate_tilings(region)) {
    Statistics s = tiling_stats(t);
    weights.emplace(s.diags, s.area, s.dinv);
  }
  const std::multiset<std::tuple<int, int, int>> table{{3, 2, 2}, {2, 2, 3}, {2, 2, 2}, {1, 2, 3},
                                                       {2, 3, 2}, {1, 3, 2}, {1, 3, 3}, {0, 3, 3}};
  out.expect(weights == table, "tiling weights of R_(2,2) differ from the table");
}

void product_formula(const Context& ctx, Outcome& out) {
  const int top = ctx.extended ? 6 : 5;
  const EnumerationLimits limits{.max_size = top * top, .max_cells = 1 << 20};
  for (int n = 1; n <= top; ++n) {
    const GenPoly3 got = p_lambda(Partition::square(n), Backend::tilings, limits, ctx.jobs);
    out.expect(got == ad_product(n), "n = " + std::to_string(n) + ": tiling sum differs from the product");
  }
}

void counting(const Context&, Outcome& out) {
  const EnumerationLimits limits{.max_size = 25, .max_cells = 1 << 20};
  for (int n = 1; n <= 5; ++n) {
    auto region = std::make_shared<const Region>(Region::for_partition(Partition::square(n)));
    const long long got = count_tilings(region, limits);
    out.expect(got == (1LL << (n * (n + 1) / 2)), "n = " + std::to_string(n) + ": " + std::to_string(got) + " tilings");
  }
  const std::size_t schroeder[] = {2, 6, 22, 90};
  for (int n = 1; n <= 4; ++n) {
    const auto got = enumerate_families(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))).size();
    out.expect(got == schroeder[n - 1], "(1^" + std::to_string(n) + "): " + std::to_string(got) + " families");
  }
}

void bijection(const Context&, Outcome& out) {
  for (const Partition& p : partitions_up_to(7)) {
    auto region = std::make_shared<const Region>(Region::for_partition(p));
    long long tilings = 0;
    bool round_trips = true;
    bool stats_agree = true;
    bool pairs_agree = true;
    std::set<std::string> images;
    for_each_tiling(region, [&](std::span<const Domino> ds) {
      ++tilings;
      const DominoTiling t = DominoTiling::unchecked(region, std::vector<Domino>(ds.begin(), ds.end()));
      const DominoStatistics raw = domino_statistics(ds, region->coloring());
      pairs_agree = pairs_agree && raw.pairs_type1 == raw.pairs_type2;
      const SchroederFamily f = tiling_to_paths(t);
      round_trips = round_trips && paths_to_tiling(f, region) == t;
      const Statistics paths = statistics(f);
      stats_agree = stats_agree && paths == Statistics{raw.diags, raw.area, adj(p) + raw.pairs_type1};
      images.insert(f.to_debug_string());
    });
    long long families = 0;
    for_each_family(p, [&](const SchroederFamily& f) {
      ++families;
      round_trips = round_trips && tiling_to_paths(paths_to_tiling(f, region)) == f;
    });
    const std::string name = p.to_string();
    out.expect(round_trips, name + ": a round trip is not the identity");
    out.expect(stats_agree, name + ": statistics differ across the bijection");
    out.expect(pairs_agree, name + ": the two domino pair counts differ");
    out.expect(tilings == families && static_cast<long long>(images.size()) == families,
               name + ": " + std::to_string(tilings) + " tilings, " + std::to_string(families) + " families");
  }
}

void symmetry(const Context& ctx, Outcome& out) {
  for (const Partition& p : partitions_up_to(8)) {
    const GenPoly3 poly = p_lambda(p, Backend::paths, {}, ctx.jobs);
    out.expect(poly.swap_qt() == poly, p.to_string() + " is not symmetric in q and t");
  }
}

void linear_factors(const Context& ctx, Outcome& out) {
  const int top = ctx.extended ? 9 : 8;
  for (const Partition& p : partitions_up_to(top)) {
    const ConjectureOutcome c = conjecture_quotient(p, {}, ctx.jobs);
    std::string why = p.to_string();
    if (!c.divisible && c.failing_factor)
      why += ": not divisible by z + q^" + std::to_string(c.failing_factor->first) + " t^" +
             std::to_string(c.failing_factor->second);
    else if (!c.nonnegative)
      why += ": negative coefficient in the quotient";
    out.expect(c.divisible && c.nonnegative, why);
  }
}

void shuffling(const Context& ctx, Outcome& out) {
  for (int n = 1; n <= 4; ++n) {
    const ShuffleReport r = verify_shuffle(n, ctx.jobs);
    out.expect(r.ok() && r.tilings == (1LL << (n * (n + 1) / 2)),
               r.summary() + (r.failures.empty() ? "" : "\n    " + r.failures.front()));
  }
}

void two_enumeration(const Context&, Outcome& out) {
  for (int n = 1; n <= 4; ++n) {
    const TwoEnumeration t = two_enumeration_check(n);
    out.expect(t.ok(), "n = " + std::to_string(n) + ": " + std::to_string(t.tilings) + " tilings, " +
                           std::to_string(t.plus_side) + " and " + std::to_string(t.minus_side) +
                           (t.fibres_match ? "" : ", fibre sizes differ"));
  }
  const std::size_t robbins[] = {1, 2, 7, 42, 429};
  for (int n = 1; n <= 5; ++n)
    out.expect(all_asms(n).size() == robbins[n - 1], "ASM count of order " + std::to_string(n));
}

void labeled_families(const Context&, Outcome& out) {
  for (const Partition& p : partitions_up_to(4)) {
    const CheckReport s = check_standardization(p, p.size());
    out.expect(s.ok() && s.cases > 0, p.to_string() + ": standardization changes dinv\n" + s.first_failure);
    const CheckReport m = check_monomial_coefficients(p);
    out.expect(m.ok(), p.to_string() + ": monomial coefficient differs from the shuffle count\n" + m.first_failure);
  }
  for (const Partition& p : partitions_up_to(5))
    for (int d = 0; d <= p.size(); ++d) {
      const LabeledSchroederCheck c = labeled_schroeder_check(p, d);
      out.expect(c.ok, p.to_string() + " d = " + std::to_string(d) + "\n" + c.detail);
    }
  for (const Partition& p : partitions_up_to(6))
    out.expect(labeled_generating_polynomial(p) == p_lambda(p),
               p.to_string() + ": labeled sum over d differs from the family polynomial");
}

void worked_examples(const Context&, Outcome& out) {
  const Partition running({4, 4, 3, 3, 3, 1});
  const std::string displayed =
      "0 1 2 3 4 5 5~ 4 3~\n"
      ". 0 1 2 3~ 3 2~ . .\n"
      ". . . . . . . . .\n"
      ". . . 0 0 0~ . . .\n";
  const SchroederFamily family = SchroederFamily::from_debug_string(running, displayed);
  out.expect(family.to_debug_string() == displayed, "area array does not round trip");
  const Statistics paths = statistics(family);
  const Statistics tiles = tiling_stats(paths_to_tiling(family));
  out.expect(paths == tiles, "path and tiling statistics differ on the running example");
  out.expect(paths == Statistics{5, 38, 34}, "running example: expected (diags, area, dinv) = (5, 38, 34), got (" +
                                                 std::to_string(paths.diags) + ", " + std::to_string(paths.area) +
                                                 ", " + std::to_string(paths.dinv) + ")");

  const Partition shape({5, 3, 3, 2});
  const NestedDyckFamily labeled = NestedDyckFamily::from_steps(shape, {"NNENNEENNNEEENEE", "", "", "NNNEEENE", "NE"});
  const Labeling w{3, 7, 1, 2, 1, 2, 4, 1, 2, 3, 4, 3, 5};
  out.expect(is_valid_labeling(labeled, w), "labeled example is not a valid labeling");
  out.expect(area_labeled(labeled) == 14, "labeled example: area " + std::to_string(area_labeled(labeled)));
  const int dinv = dinv_labeled(labeled, w, adj(shape));
  out.expect(dinv == 19, "labeled example: dinv " + std::to_string(dinv));
  const std::string read = word_to_string(reading_word(labeled, w), false);
  out.expect(read == "4422131173523", "labeled example: reading word " + read);
  const std::string standard = word_to_string(reading_word(labeled, standardize(labeled, w)), true);
  out.expect(standard == "10,11,4,5,1,7,2,3,13,8,12,6,9", "labeled example: standardized word " + standard);
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(const Context&, Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "base cases P_(1), P_(2,2) and the R_(2,2) weight table", base_cases},
      {2, "tiling sum of R_(n^n) equals the linear-factor product", product_formula},
      {3, "tiling counts of squares and Schroeder counts of columns", counting},
      {4, "tiling/path bijection and statistics for |lambda| <= 7", bijection},
      {5, "q,t-symmetry for |lambda| <= 8", symmetry},
      {6, "divisibility by z + q^i t^j below the Durfee rank", linear_factors},
      {7, "domino shuffling identities for extended diamonds, n <= 4", shuffling},
      {8, "2-enumeration of Aztec diamonds through both ASM maps", two_enumeration},
      {9, "labeled Dyck families: standardization, monomials, shuffle bijection", labeled_families},
      {10, "worked examples: running family and labeled family", worked_examples},
  };
  return list;
}

int usage(const char* argv0) {
  std::cerr << "usage: " << argv0 << " [--only K] [--extended] [--jobs N]\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  Context ctx;
  ctx.jobs = default_jobs();
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--extended") ctx.extended = true;
    else if (arg == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    else if (arg == "--jobs" && i + 1 < argc) ctx.jobs = std::max(1, std::atoi(argv[++i]));
    else return usage(argv[0]);
  }
  if (only < 0 || only > static_cast<int>(criteria().size())) return usage(argv[0]);

  int failed = 0;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(ctx, out);
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (out.ok() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << out.checks()
         << " checks, " << seconds << " s)";
    std::cout << line.str() << '\n';
    for (const std::string& note : out.notes()) std::cout << "    " << note << '\n';
    failed += out.ok() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
