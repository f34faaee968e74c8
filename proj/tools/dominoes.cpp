// Command line front end: polynomials, counts, pictures and exhaustive checks.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dominoes/asm.hpp"
#include "dominoes/domino.hpp"
#include "dominoes/generating.hpp"
#include "dominoes/labeled.hpp"
#include "dominoes/parallel.hpp"
#include "dominoes/partition.hpp"
#include "dominoes/schroeder.hpp"
#include "dominoes/shuffle_checks.hpp"

namespace {

using namespace dominoes;
using nlohmann::json;

enum ExitCode { verified = 0, falsified = 1, usage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string partition;
  std::string backend = "paths";
  std::string target;
  bool json = false;
  bool all = false;
  bool stats_only = false;
  bool allow_slow = false;
  int max_size = 0;  // 0: per-command default
  int n = 0;         // 0: per-command default
  int jobs = 0;      // 0: DOMINOES_JOBS or 1
  long long index = 0;
};

int jobs_of(const Options& o) { return o.jobs > 0 ? o.jobs : default_jobs(); }

EnumerationLimits limits_of(const Options& o) {
  EnumerationLimits limits;
  if (o.max_size > 0) limits.max_size = o.max_size;
  return limits;
}

Partition parse_partition(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

int bounded(int value, int fallback, int fast_limit, const Options& o, const char* flag) {
  const int v = value > 0 ? value : fallback;
  if (v > fast_limit && !o.allow_slow)
    throw UsageError(std::string(flag) + " " + std::to_string(v) + " is above " + std::to_string(fast_limit) +
                     "; pass --allow-slow to run it anyway");
  return v;
}

json statistics_json(const Statistics& s) { return {{"diags", s.diags}, {"area", s.area}, {"dinv", s.dinv}}; }

std::string statistics_text(const Statistics& s) {
  return "diags=" + std::to_string(s.diags) + " area=" + std::to_string(s.area) + " dinv=" + std::to_string(s.dinv);
}

int cmd_poly(const Options& o) {
  const Partition shape = parse_partition(o.partition);
  const Backend backend = o.backend == "tilings" ? Backend::tilings : Backend::paths;
  const GenPoly3 p = p_lambda(shape, backend, limits_of(o), jobs_of(o));
  std::cout << (o.json ? p.to_json() : p.to_text()) << '\n';
  return verified;
}

int cmd_count(const Options& o) {
  const Partition shape = parse_partition(o.partition);
  auto region = std::make_shared<const Region>(Region::for_partition(shape));
  const long long count = count_tilings(region, limits_of(o));
  if (o.json) std::cout << json{{"partition", shape.to_string()}, {"count", count}}.dump() << '\n';
  else std::cout << count << '\n';
  return verified;
}

int cmd_render(const Options& o) {
  const Partition shape = parse_partition(o.partition);
  auto region = std::make_shared<const Region>(Region::for_partition(shape));
  if (!o.all && o.index < 0) throw UsageError("--index must be nonnegative");
  json out = json::array();
  long long counter = 0;
  bool found = false;
  for_each_tiling(
      region,
      [&](std::span<const Domino> ds) {
        const long long here = counter++;
        if (!o.all && here != o.index) return;
        found = true;
        const DominoTiling tiling = DominoTiling::unchecked(region, std::vector<Domino>(ds.begin(), ds.end()));
        const Statistics stats = tiling_stats(tiling);
        const SchroederFamily family = tiling_to_paths(tiling);
        if (o.json) {
          json item = statistics_json(stats);
          item["index"] = here;
          if (!o.stats_only) {
            item["dominoes"] = json::parse(tiling_to_json(tiling));
            item["paths"] = family.steps();
          }
          out.push_back(std::move(item));
          return;
        }
        if (o.stats_only) {
          std::cout << statistics_text(stats) << '\n';
          return;
        }
        std::cout << "tiling " << here << ": " << statistics_text(stats) << '\n'
                  << render_ascii(tiling) << "paths:\n";
        const auto steps = family.steps();
        for (std::size_t j = 0; j < steps.size(); ++j)
          std::cout << "  " << j << ": " << (steps[j].empty() ? "-" : steps[j]) << '\n';
        std::cout << '\n';
      },
      limits_of(o));
  if (!found) throw UsageError("index " + std::to_string(o.index) + " out of range; the shape has " +
                               std::to_string(counter) + " tilings");
  if (o.json) std::cout << (o.all ? out : out.front()).dump() << '\n';
  return verified;
}

// Shared bookkeeping of a verification run.
class Verdict {
 public:
  explicit Verdict(bool json) : json_(json) {}

  void record(const std::string& instance, bool ok, const std::string& witness = {}) {
    std::cerr << (ok ? "ok   " : "FAIL ") << instance << '\n';
    ++checked_;
    if (ok) return;
    ++failed_;
    failures_.push_back({{"instance", instance}, {"witness", witness}});
    if (!json_) std::cout << "counterexample: " << instance << '\n' << witness << (witness.empty() ? "" : "\n");
  }

  int finish(const std::string& target) const {
    if (json_)
      std::cout << json{{"target", target}, {"checked", checked_}, {"failed", failed_}, {"failures", failures_}}.dump()
                << '\n';
    else
      std::cout << target << ": " << checked_ << " instances, " << failed_ << " failed\n";
    return failed_ == 0 ? verified : falsified;
  }

 private:
  bool json_;
  long long checked_ = 0;
  long long failed_ = 0;
  json failures_ = json::array();
};

std::vector<Partition> partitions_up_to(int size) {
  std::vector<Partition> out;
  for (int m = 1; m <= size; ++m)
    for (Partition& p : partitions_of(m)) out.push_back(std::move(p));
  return out;
}

int verify_product(const Options& o, Verdict& v) {
  const int n_max = bounded(o.n, 4, 5, o, "--n");
  const EnumerationLimits limits{.max_size = n_max * n_max, .max_cells = 1 << 20};
  for (int n = 1; n <= n_max; ++n) {
    const GenPoly3 lhs = p_lambda(Partition::square(n), Backend::tilings, limits, jobs_of(o));
    const GenPoly3 rhs = ad_product(n);
    v.record("n=" + std::to_string(n), lhs == rhs, "tilings: " + lhs.to_text() + "\nproduct: " + rhs.to_text());
  }
  return v.finish("product");
}

int verify_symmetry(const Options& o, Verdict& v) {
  const int size = bounded(o.max_size, 7, 8, o, "--max-size");
  const EnumerationLimits limits{.max_size = size};
  for (const Partition& shape : partitions_up_to(size)) {
    const GenPoly3 p = p_lambda(shape, Backend::paths, limits, jobs_of(o));
    v.record(shape.to_string(), check_symmetry(p), p.to_text());
  }
  return v.finish("symmetry");
}

int verify_conjecture(const Options& o, Verdict& v) {
  const int size = bounded(o.max_size, 8, 8, o, "--max-size");
  const EnumerationLimits limits{.max_size = size};
  for (const Partition& shape : partitions_up_to(size)) {
    const ConjectureOutcome c = conjecture_quotient(shape, limits, jobs_of(o));
    std::string witness;
    if (!c.divisible && c.failing_factor)
      witness = "not divisible by z + q^" + std::to_string(c.failing_factor->first) + " t^" +
                std::to_string(c.failing_factor->second) + "; partial quotient " + c.quotient.to_text();
    else if (!c.nonnegative)
      witness = "quotient has a negative coefficient: " + c.quotient.to_text();
    v.record(shape.to_string(), c.divisible && c.nonnegative, witness);
  }
  return v.finish("conjecture");
}

int verify_shuffling(const Options& o, Verdict& v) {
  const int n_max = bounded(o.n, 4, 4, o, "--n");
  for (int n = 1; n <= n_max; ++n) {
    const ShuffleReport r = verify_shuffle(n, jobs_of(o));
    std::string witness;
    for (const std::string& f : r.failures) witness += f + '\n';
    v.record(r.summary(), r.ok(), witness);
  }
  return v.finish("section4");
}

int verify_labeled_schroeder(const Options& o, Verdict& v) {
  const int size = bounded(o.max_size, 5, 6, o, "--max-size");
  const EnumerationLimits limits{.max_size = size};
  for (const Partition& shape : partitions_up_to(size)) {
    for (int d = 0; d <= shape.size(); ++d) {
      const LabeledSchroederCheck c = labeled_schroeder_check(shape, d, limits);
      v.record(shape.to_string() + " d=" + std::to_string(d), c.ok, c.detail);
    }
    const GenPoly3 labeled = labeled_generating_polynomial(shape, limits);
    const GenPoly3 direct = p_lambda(shape, Backend::paths, limits, jobs_of(o));
    v.record(shape.to_string() + " sum over d", labeled == direct,
             "labeled: " + labeled.to_text() + "\nfamilies: " + direct.to_text());
  }
  return v.finish("theorem1");
}

int verify_two_enum(const Options& o, Verdict& v) {
  const int n_max = bounded(o.n, 4, 5, o, "--n");
  for (int n = 1; n <= n_max; ++n) {
    const TwoEnumeration t = two_enumeration_check(n);
    v.record("n=" + std::to_string(n), t.ok(),
             "tilings " + std::to_string(t.tilings) + ", weighted by ones " + std::to_string(t.plus_side) +
                 ", weighted by minus ones " + std::to_string(t.minus_side));
  }
  return v.finish("two-enum");
}

int cmd_verify(const Options& o) {
  Verdict v(o.json);
  if (o.target == "product") return verify_product(o, v);
  if (o.target == "symmetry") return verify_symmetry(o, v);
  if (o.target == "conjecture") return verify_conjecture(o, v);
  if (o.target == "section4") return verify_shuffling(o, v);
  if (o.target == "theorem1") return verify_labeled_schroeder(o, v);
  if (o.target == "two-enum") return verify_two_enum(o, v);
  throw UsageError("unknown verification target '" + o.target + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domino tilings, Schroeder path families and their generating polynomials"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.json, "Machine-readable output");
    cmd->add_option("--max-size", o.max_size, "Largest partition size to enumerate")->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", o.jobs, "Worker threads (default: DOMINOES_JOBS or 1)")->check(CLI::PositiveNumber);
  };

  auto* poly = app.add_subcommand("poly", "Print the generating polynomial of a partition");
  poly->add_option("partition", o.partition, "Partition such as 4,4,3 or 3^2,1")->required();
  poly->add_option("--backend", o.backend, "Enumerate path families or tilings")
      ->check(CLI::IsMember({"paths", "tilings"}));
  add_common(poly);

  auto* count = app.add_subcommand("count", "Count the domino tilings of the region of a partition");
  count->add_option("partition", o.partition, "Partition")->required();
  add_common(count);

  auto* render = app.add_subcommand("render", "Draw tilings with their path families");
  render->add_option("partition", o.partition, "Partition")->required();
  auto* index = render->add_option("--index", o.index, "Tiling index in enumeration order");
  render->add_flag("--all", o.all, "Draw every tiling")->excludes(index);
  render->add_flag("--stats-only", o.stats_only, "Print only diags, area and dinv");
  add_common(render);

  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification");
  verify->add_option("target", o.target, "What to verify")
      ->required()
      ->check(CLI::IsMember({"product", "symmetry", "conjecture", "section4", "theorem1", "two-enum"}));
  verify->add_option("--n", o.n, "Largest diamond order")->check(CLI::PositiveNumber);
  verify->add_flag("--allow-slow", o.allow_slow, "Accept bounds beyond the quick defaults");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? verified : usage;
  }

  try {
    if (poly->parsed()) return cmd_poly(o);
    if (count->parsed()) return cmd_count(o);
    if (render->parsed()) return cmd_render(o);
    return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return falsified;
  }
}
