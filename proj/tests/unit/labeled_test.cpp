#include <gtest/gtest.h>

#include <set>

#include "dominoes/generating.hpp"
#include "dominoes/labeled.hpp"

using namespace dominoes;

namespace {

const Partition kShape({5, 3, 3, 2});

NestedDyckFamily labeled_example() {
  return NestedDyckFamily::from_steps(kShape, {"NNENNEENNNEEENEE", "", "", "NNNEEENE", "NE"});
}

const Labeling kLabels{3, 7, 1, 2, 1, 2, 4, 1, 2, 3, 4, 3, 5};

int catalan(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return static_cast<int>(c);
}

}  // namespace

TEST(Labeled, ExampleStatistics) {
  NestedDyckFamily f = labeled_example();
  ASSERT_EQ(f.size(), 13);
  EXPECT_TRUE(is_valid_labeling(f, kLabels));
  EXPECT_EQ(area_labeled(f), 14);
  EXPECT_EQ(dinv_pairs_labeled(f, kLabels), 14);
  EXPECT_EQ(dinv_labeled(f, kLabels, adj(kShape)), 19);
}

TEST(Labeled, ExampleReadingWords) {
  NestedDyckFamily f = labeled_example();
  EXPECT_EQ(word_to_string(reading_word(f, kLabels), false), "4422131173523");
  Labeling s = standardize(f, kLabels);
  EXPECT_TRUE(is_valid_labeling(f, s));
  EXPECT_EQ(word_to_string(reading_word(f, s), true), "10,11,4,5,1,7,2,3,13,8,12,6,9");
  EXPECT_EQ(dinv_labeled(f, s, 5), 19);
  EXPECT_EQ(standardize(f, s), s);
}

TEST(Labeled, FamilyConditions) {
  const Partition two({2, 2});  // strips 3 and 1
  EXPECT_NO_THROW(NestedDyckFamily::from_steps(two, {"NNNEEE", "NE"}));
  // Touches the inner path at (1,2) without sharing a step.
  EXPECT_NO_THROW(NestedDyckFamily::from_steps(two, {"NNENEE", "NE"}));
  // Shares the east step from (1,2) to (2,2) with the inner path.
  EXPECT_THROW(NestedDyckFamily::from_steps(two, {"NNEENE", "NE"}), ValidationError);
  // Touches the diagonal at (1,1), the start of the inner path.
  EXPECT_THROW(NestedDyckFamily::from_steps(two, {"NENNEE", "NE"}), ValidationError);
  const Partition three({3, 3, 3});  // strips 5, 3, 1
  EXPECT_NO_THROW(NestedDyckFamily::from_steps(three, {"NNNNNEEEEE", "NNNEEE", "NE"}));
  // The two outer paths share the north steps above (1,2).
  const auto shared = NestedDyckFamily::from_steps(three, {"NNENNNEEEE", "NNNEEE", "NE"});
  EXPECT_EQ(shared.size(), 9);
  // Crosses the middle path.
  EXPECT_THROW(NestedDyckFamily::from_steps(three, {"NNENENNEEE", "NNNEEE", "NE"}), ValidationError);
  // The middle path touches (2,2), where the innermost path starts.
  EXPECT_THROW(NestedDyckFamily::from_steps(three, {"NNNNNEEEEE", "NENNEE", "NE"}), ValidationError);
  EXPECT_THROW(NestedDyckFamily::from_steps(two, {"NNNEEE", "NX"}), ValidationError);
}

TEST(Labeled, WeakFamiliesOfAColumnAreDyckPaths) {
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(static_cast<int>(enumerate_weak_families(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))).size()),
              catalan(n));
  EXPECT_EQ(enumerate_weak_families(Partition({1})).size(), 1u);
}

TEST(Labeled, ExampleFamilyIsEnumerated) {
  const NestedDyckFamily target = labeled_example();
  int hits = 0;
  for_each_weak_family(kShape, [&](const NestedDyckFamily& f) { hits += f.steps() == target.steps(); },
                       {.max_size = 13});
  EXPECT_EQ(hits, 1);
}

TEST(Labeled, LabelingRules) {
  const NestedDyckFamily column = NestedDyckFamily::from_steps(Partition({1, 1}), {"NNEE"});
  EXPECT_TRUE(is_valid_labeling(column, {1, 2}));
  EXPECT_FALSE(is_valid_labeling(column, {2, 2}));
  EXPECT_FALSE(is_valid_labeling(column, {2, 1}));
  EXPECT_FALSE(is_valid_labeling(column, {1}));
  EXPECT_FALSE(is_valid_labeling(column, {0, 1}));
  // A step of an inner path directly below a step of an outer path.
  const NestedDyckFamily f = labeled_example();
  Labeling w = kLabels;
  w[6] = 5;  // outer step starting at (3,6), above the inner step labelled 4
  EXPECT_FALSE(is_valid_labeling(f, w));
  w[6] = 4;
  EXPECT_TRUE(is_valid_labeling(f, w));
}

TEST(Labeled, ReadingOrderOfASingleColumn) {
  const NestedDyckFamily column = NestedDyckFamily::from_steps(Partition({1, 1, 1}), {"NNNEEE"});
  EXPECT_EQ(reading_word(column, {1, 2, 3}), (std::vector<int>{3, 2, 1}));
}

TEST(Labeled, StandardizeWord) {
  std::vector<int> w{4, 4, 2, 2, 1, 3};
  EXPECT_EQ(standardize_word(w), (std::vector<int>{5, 6, 2, 3, 1, 4}));
}

TEST(Labeled, ShufflePredicates) {
  EXPECT_TRUE(is_mu_shuffle(std::vector<int>{1, 2, 3}, Partition({3})));
  EXPECT_FALSE(is_mu_shuffle(std::vector<int>{2, 1, 3}, Partition({3})));
  EXPECT_TRUE(is_mu_shuffle(std::vector<int>{3, 1, 2}, Partition({2, 1})));
  EXPECT_TRUE(is_mu_eta_shuffle(std::vector<int>{2, 3, 1}, Partition({1}), Partition({2})));
  EXPECT_FALSE(is_mu_eta_shuffle(std::vector<int>{1, 3, 2}, Partition({1}), Partition({2})));
  EXPECT_THROW(is_mu_shuffle(std::vector<int>{1, 1, 2}, Partition({3})), std::invalid_argument);
  EXPECT_THROW(is_mu_shuffle(std::vector<int>{1, 2}, Partition({3})), std::invalid_argument);
}

TEST(Labeled, EveryPermutationIsAShuffleOfOnes) {
  const NestedDyckFamily f = NestedDyckFamily::from_steps(Partition({1, 1, 1}), {"NENNEE"});
  GenPoly3 all;
  int count = 0;
  for_each_standard_labeling(f, [&](const Labeling& w) {
    all += GenPoly3::monomial({0, 0, dinv_labeled(f, w, 0)});
    ++count;
  });
  EXPECT_EQ(count, 3);
  EXPECT_EQ(shuffle_coefficient(f, Partition({1, 1, 1})), all);
}

TEST(Labeled, EqualLabelsInAColumnAreForbidden) {
  const NestedDyckFamily column = NestedDyckFamily::from_steps(Partition({1, 1}), {"NNEE"});
  EXPECT_TRUE(coeff_on_monomial(column, Partition({2})).is_zero());
  const NestedDyckFamily flat = NestedDyckFamily::from_steps(Partition({1, 1}), {"NENE"});
  EXPECT_EQ(coeff_on_monomial(flat, Partition({2})), GenPoly3::constant(1));
  EXPECT_EQ(coeff_on_monomial(flat, Partition({1, 1})), GenPoly3::constant(1) + GenPoly3::t());
}

TEST(Labeled, StandardizationPreservesDinv) {
  for (int m = 1; m <= 3; ++m)
    for (const Partition& p : partitions_of(m)) {
      CheckReport r = check_standardization(p, m);
      EXPECT_TRUE(r.ok()) << r.first_failure;
      EXPECT_GT(r.cases, 0);
    }
}

TEST(Labeled, MonomialCoefficientsMatchShuffles) {
  for (int m = 1; m <= 3; ++m)
    for (const Partition& p : partitions_of(m)) {
      CheckReport r = check_monomial_coefficients(p);
      EXPECT_TRUE(r.ok()) << r.first_failure;
    }
}

TEST(Labeled, TheoremOneSidesAgree) {
  for (const char* text : {"1", "1,1", "2,2", "3,1", "2,1,1"}) {
    const Partition p = Partition::parse(text);
    for (int d = 0; d <= p.size(); ++d) {
      LabeledSchroederCheck c = labeled_schroeder_check(p, d);
      EXPECT_TRUE(c.ok) << text << " d=" << d << "\n" << c.detail;
    }
    EXPECT_EQ(labeled_generating_polynomial(p), p_lambda(p)) << text;
  }
}

TEST(Labeled, DiagonalMapTurnsMarkedNorthStepsIntoDiagonals) {
  const NestedDyckFamily f = NestedDyckFamily::from_steps(Partition({1, 1}), {"NENE"});
  SchroederFamily s = to_schroeder(f, {1, 2}, 1);
  EXPECT_EQ(s.steps(), (std::vector<std::string>{"NED"}));
  EXPECT_THROW(to_schroeder(NestedDyckFamily::from_steps(Partition({1, 1}), {"NNEE"}), {2, 1}, 1),
               std::invalid_argument);
}
