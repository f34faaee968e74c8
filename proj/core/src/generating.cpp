#include "dominoes/generating.hpp"

#include <memory>
#include <mutex>

#include "dominoes/domino.hpp"
#include "dominoes/parallel.hpp"
#include "dominoes/schroeder.hpp"

namespace dominoes {

GenPoly3 p_lambda(const Partition& shape, Backend backend, const EnumerationLimits& limits, int jobs) {
  if (shape.empty()) return GenPoly3::constant(1);
  const int offset = adj(shape);
  std::vector<PolyAccumulator> partial(static_cast<std::size_t>(std::max(jobs, 1)));

  if (backend == Backend::paths) {
    run_workers(jobs, [&](int w) {
      auto& acc = partial[static_cast<std::size_t>(w)];
      for_each_family_entries(
          shape,
          [&](std::span<const FlatEntry> e) { acc.add({diags(e), area(e), offset + dinv_pairs(e)}); },
          limits, {w, jobs});
    });
  } else {
    auto region = std::make_shared<const Region>(Region::for_partition(shape));
    const Coloring coloring = region->coloring();
    run_workers(jobs, [&](int w) {
      auto& acc = partial[static_cast<std::size_t>(w)];
      for_each_tiling(
          region,
          [&](std::span<const Domino> ds) {
            auto s = domino_statistics(ds, coloring);
            if (s.pairs_type1 != s.pairs_type2) throw std::logic_error("domino pair counts disagree");
            acc.add({s.diags, s.area, offset + s.pairs_type1});
          },
          limits, {w, jobs});
    });
  }
  for (std::size_t w = 1; w < partial.size(); ++w) partial[0].merge(partial[w]);
  return partial[0].to_poly();
}

GenPoly3 ad_product(int n) {
  const int e = n * n * (n - 1) / 2;
  GenPoly3 p = GenPoly3::monomial({0, e, e});
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) p *= GenPoly3::linear(i, j);
  return p;
}

bool check_symmetry(const GenPoly3& p) { return p.swap_qt() == p; }

ConjectureOutcome conjecture_quotient(const GenPoly3& p, int rank) {
  ConjectureOutcome out;
  out.quotient = p;
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; i + j < rank; ++j) {
      auto q = out.quotient.try_divide_linear(i, j);
      if (!q) {
        out.failing_factor = std::pair{i, j};
        return out;
      }
      out.quotient = std::move(*q);
    }
  }
  out.divisible = true;
  out.nonnegative = out.quotient.nonnegative();
  return out;
}

ConjectureOutcome conjecture_quotient(const Partition& shape, const EnumerationLimits& limits, int jobs) {
  return conjecture_quotient(p_lambda(shape, Backend::paths, limits, jobs), durfee_rank(shape));
}

}  // namespace dominoes
