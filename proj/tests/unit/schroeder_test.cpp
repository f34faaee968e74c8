#include <gtest/gtest.h>

#include <set>

#include "dominoes/schroeder.hpp"

using namespace dominoes;

namespace {

AreaRow row(std::initializer_list<std::pair<int, bool>> entries) {
  AreaRow r;
  for (auto [v, d] : entries) r.push_back({v, d});
  return r;
}

const Partition kRunning({4, 4, 3, 3, 3, 1});

SchroederFamily running_example() {
  return SchroederFamily::from_area_array(
      kRunning, {row({{0, false}, {1, false}, {2, false}, {3, false}, {4, false}, {5, false}, {5, true}, {4, false},
                      {3, true}}),
                 row({{0, false}, {1, false}, {2, false}, {3, true}, {3, false}, {2, true}}),
                 {},
                 row({{0, false}, {0, false}, {0, true}})});
}

int catalan(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return static_cast<int>(c);
}

}  // namespace

TEST(Schroeder, RunningExampleArea) {
  SchroederFamily f = running_example();
  EXPECT_EQ(diags(f), 5);
  EXPECT_EQ(area(f), 38);
  EXPECT_EQ(f.to_debug_string(),
            "0 1 2 3 4 5 5~ 4 3~\n"
            ". 0 1 2 3~ 3 2~ . .\n"
            ". . . . . . . . .\n"
            ". . . 0 0 0~ . . .\n");
}

TEST(Schroeder, DebugStringRoundTrip) {
  SchroederFamily f = running_example();
  EXPECT_EQ(SchroederFamily::from_debug_string(kRunning, f.to_debug_string()), f);
  EXPECT_EQ(SchroederFamily::from_steps(kRunning, f.steps()), f);
}

TEST(Schroeder, StepsAndVertices) {
  SchroederFamily f = running_example();
  auto steps = f.steps();
  ASSERT_EQ(steps.size(), 4u);
  EXPECT_TRUE(steps[2].empty());
  auto v = f.vertices(3);
  EXPECT_EQ(v.front(), std::make_pair(3, 3));
  EXPECT_EQ(v.back(), std::make_pair(6, 6));
}

TEST(Schroeder, ValidationPinpointsProblems) {
  Partition p({2, 2});  // strips 3 and 1
  EXPECT_NO_THROW(SchroederFamily::from_steps(p, {"NNNEEE", "D"}));
  try {
    SchroederFamily::from_steps(p, {"NEENNE", "D"});
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.path(), 0);
    EXPECT_EQ(e.point(), std::make_pair(2, 1));
  }
  EXPECT_THROW(SchroederFamily::from_steps(p, {"DDD", "D"}), ValidationError);   // passes through (1,1)
  EXPECT_THROW(SchroederFamily::from_steps(p, {"NNNEEE", "NX"}), ValidationError);
  EXPECT_THROW(SchroederFamily::from_steps(p, {"NNNEE", "D"}), ValidationError);
  EXPECT_THROW(SchroederFamily::from_steps(p, {"NNNEEE"}), std::invalid_argument);
}

TEST(Schroeder, SinglePathCountsAreLargeSchroederNumbers) {
  const int expected[] = {1, 2, 6, 22, 90, 394, 1806};
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(static_cast<int>(enumerate_families(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))).size()),
              expected[n]);
}

TEST(Schroeder, DiagonalFreeFamiliesOfAColumnAreDyckPaths) {
  for (int n = 1; n <= 6; ++n) {
    int count = 0;
    std::set<int> areas;
    for_each_family(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), [&](const SchroederFamily& f) {
      if (diags(f) != 0) return;
      ++count;
      areas.insert(area(f));
    });
    EXPECT_EQ(count, catalan(n));
    EXPECT_EQ(*areas.rbegin(), n * (n - 1) / 2);
  }
}

TEST(Schroeder, EnumerationVisitsDistinctValidFamilies) {
  for (int m = 1; m <= 6; ++m)
    for (const Partition& p : partitions_of(m)) {
      std::set<std::string> seen;
      for_each_family(p, [&](const SchroederFamily& f) {
        EXPECT_TRUE(seen.insert(f.to_debug_string()).second);
        EXPECT_EQ(SchroederFamily::from_steps(p, f.steps()), f);
      });
    }
}

TEST(Schroeder, WorkSplitPartitionsTheEnumeration) {
  const Partition p({3, 3, 2, 1});
  const auto all = enumerate_families(p);
  std::size_t total = 0;
  for (int w = 0; w < 3; ++w) {
    std::size_t part = 0;
    for_each_family(p, [&](const SchroederFamily&) { ++part; }, {}, {w, 3});
    total += part;
  }
  EXPECT_EQ(total, all.size());
}

TEST(Schroeder, GuardStopsLargeShapes) {
  EXPECT_THROW(enumerate_families(Partition::square(4), {.max_size = 10}), GuardExceeded);
}

TEST(Schroeder, DinvPairRules) {
  // Equal values, earlier row undecorated: one pair.
  std::vector<FlatEntry> same{{0, 1, false}, {1, 1, false}};
  EXPECT_EQ(dinv_pairs(same), 1);
  // Earlier row decorated: no pair from the first case.
  std::vector<FlatEntry> decorated{{0, 1, true}, {1, 1, false}};
  EXPECT_EQ(dinv_pairs(decorated), 0);
  // Value one larger in an earlier or equal row, later entry undecorated.
  std::vector<FlatEntry> offset{{0, 2, false}, {1, 1, false}};
  EXPECT_EQ(dinv_pairs(offset), 1);
  std::vector<FlatEntry> offset_decorated{{0, 2, false}, {1, 1, true}};
  EXPECT_EQ(dinv_pairs(offset_decorated), 0);
}

TEST(Schroeder, StatisticsOfTheSmallestShapes) {
  auto fams = enumerate_families(Partition({1}));
  ASSERT_EQ(fams.size(), 2u);
  std::multiset<std::tuple<int, int, int>> got;
  for (const auto& f : fams) {
    Statistics s = statistics(f);
    got.emplace(s.diags, s.area, s.dinv);
  }
  EXPECT_EQ(got, (std::multiset<std::tuple<int, int, int>>{{1, 0, 0}, {0, 0, 0}}));
}
