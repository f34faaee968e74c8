#include <gtest/gtest.h>

#include <set>

#include "dominoes/domino.hpp"
#include "dominoes/schroeder.hpp"

using namespace dominoes;

namespace {

std::shared_ptr<const Region> region_of(const Partition& p) {
  return std::make_shared<const Region>(Region::for_partition(p));
}

}  // namespace

TEST(Region, SmallestShape) {
  Region r = Region::for_partition(Partition({1}));
  EXPECT_EQ(r.cell_count(), 4);
  EXPECT_EQ(r.min_y(), 0);
  EXPECT_EQ(r.max_y(), 1);
}

TEST(Region, CellCountsMatchTheDiamondMinusDeletions) {
  for (int m = 1; m <= 7; ++m)
    for (const Partition& p : partitions_of(m)) {
      StripProfile s = border_strips(p);
      const int big = s[0] + 1;
      const int deletions = 2 * s.count();  // one white and one black bottom box per strip index
      EXPECT_EQ(Region::for_partition(p).cell_count(), big * (big + 1) - deletions) << p.to_string();
    }
}

TEST(Region, AztecDiamondCells) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(Region::aztec_diamond(n).cell_count(), 2 * n * (n + 1));
}

TEST(Tiling, CountsOfAztecDiamonds) {
  for (int n = 1; n <= 5; ++n) {
    auto r = std::make_shared<const Region>(Region::aztec_diamond(n));
    EXPECT_EQ(count_tilings(r), 1LL << (n * (n + 1) / 2));
  }
}

TEST(Tiling, ValidatingConstructor) {
  auto r = region_of(Partition({1}));
  auto tilings = enumerate_tilings(r);
  ASSERT_EQ(tilings.size(), 2u);
  auto ds = tilings[0].dominoes();
  EXPECT_NO_THROW(DominoTiling(r, ds));
  ds.pop_back();
  EXPECT_THROW(DominoTiling(r, ds), std::invalid_argument);
  ds.push_back(ds.front());
  EXPECT_THROW(DominoTiling(r, ds), std::invalid_argument);
}

TEST(Tiling, ClassesFollowColors) {
  Coloring c{1};
  Domino h{{0, 1}, Orientation::horizontal};  // (0,1) black
  Domino v{{0, 1}, Orientation::vertical};
  EXPECT_EQ(classify(h, c), DominoClass::H);
  EXPECT_EQ(classify(v, c), DominoClass::V);
  EXPECT_EQ(classify(h.shifted(1, 0), c), DominoClass::Hc);
  EXPECT_EQ(classify(v.shifted(1, 0), c), DominoClass::Vc);
  EXPECT_EQ(black_cell(v.shifted(1, 0), c), (Cell{1, 2}));
  EXPECT_EQ(class_letter(DominoClass::Vc), 'v');
}

TEST(Tiling, BijectionWithPathFamilies) {
  for (int m = 1; m <= 6; ++m)
    for (const Partition& p : partitions_of(m)) {
      auto r = region_of(p);
      auto tilings = enumerate_tilings(r);
      auto families = enumerate_families(p);
      ASSERT_EQ(tilings.size(), families.size()) << p.to_string();
      std::set<std::string> images;
      for (const DominoTiling& t : tilings) {
        SchroederFamily f = tiling_to_paths(t);
        EXPECT_EQ(paths_to_tiling(f, r), t);
        EXPECT_EQ(tiling_stats(t), statistics(f)) << p.to_string();
        images.insert(f.to_debug_string());
      }
      EXPECT_EQ(images.size(), families.size());
      for (const SchroederFamily& f : families) EXPECT_EQ(tiling_to_paths(paths_to_tiling(f)), f);
    }
}

TEST(Tiling, BothPairTemplatesAgree) {
  for (int m = 1; m <= 6; ++m)
    for (const Partition& p : partitions_of(m)) {
      auto r = region_of(p);
      for_each_tiling(r, [&](std::span<const Domino> ds) {
        DominoStatistics s = domino_statistics(ds, r->coloring());
        EXPECT_EQ(s.pairs_type1, s.pairs_type2);
        int sum1 = 0, sum2 = 0;
        for (const PairCounts& c : domino_pair_counts(ds, r->coloring())) {
          sum1 += c.dinv1;
          sum2 += c.dinv2;
        }
        EXPECT_EQ(sum1, s.pairs_type1);
        EXPECT_EQ(sum2, s.pairs_type2);
      });
    }
}

TEST(Tiling, JsonRoundTrip) {
  auto r = region_of(Partition({2, 2}));
  for (const DominoTiling& t : enumerate_tilings(r)) EXPECT_EQ(tiling_from_json(r, tiling_to_json(t)), t);
  EXPECT_THROW(tiling_from_json(r, R"([[0,0,"X"]])"), std::invalid_argument);
}

TEST(Tiling, AsciiRendering) {
  auto r = region_of(Partition({1}));
  std::set<std::string> pictures;
  for (const DominoTiling& t : enumerate_tilings(r)) pictures.insert(render_ascii(t));
  EXPECT_EQ(pictures, (std::set<std::string>{"└┘\n└┘\n", "┌┌\n└└\n"}));
}

TEST(Tiling, WorkSplitPartitionsTheEnumeration) {
  auto r = std::make_shared<const Region>(Region::aztec_diamond(4));
  long long total = 0;
  for (int w = 0; w < 4; ++w) for_each_tiling(r, [&](std::span<const Domino>) { ++total; }, {}, {w, 4});
  EXPECT_EQ(total, 1024);
}

TEST(Tiling, GuardStopsLargeRegions) {
  auto r = std::make_shared<const Region>(Region::aztec_diamond(8));
  EXPECT_THROW(count_tilings(r, {.max_size = 10, .max_cells = 100}), GuardExceeded);
}
