#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lexcover/errors.hpp"
#include "lexcover/lexorder.hpp"
#include "lexcover/oracle.hpp"

using namespace lexcover;

namespace {
Machine split_c1() { return split_multiplicities(testkit::c1()).machine; }
}  // namespace

TEST(TransitionOrder, FileOrderClasses) {
  const Machine t = testkit::t2();
  const auto order = default_order(t);
  EXPECT_EQ(order.sorted_class(t, 0, 'a'), (std::vector<TransId>{0, 1}));
  EXPECT_TRUE(order.precedes(t, 0, 1));
  EXPECT_FALSE(order.precedes(t, 1, 0));
  EXPECT_FALSE(order.precedes(t, 0, 2));
}

TEST(TransitionOrder, SingletonClasses) {
  Machine m = testkit::t2();
  m.transitions.erase(m.transitions.begin());
  const auto order = default_order(m);
  for (TransId e = 0; e < m.num_transitions(); ++e) EXPECT_EQ(order.rank(e), 0u);
}

TEST(TransitionOrder, ParallelCopiesById) {
  const Machine m = split_c1();
  const auto order = default_order(m);
  EXPECT_EQ(order.sorted_class(m, 1, 'a'), (std::vector<TransId>{3, 4}));
}

TEST(TransitionOrder, ReverseAndPermutation) {
  const Machine m = split_c1();
  EXPECT_EQ(reverse_order(m).sorted_class(m, 0, 'b'), (std::vector<TransId>{2, 1}));
  const auto perm = parse_order(m, "perm:0,2,1,3,4,5,6");
  EXPECT_EQ(perm.sorted_class(m, 0, 'b'), (std::vector<TransId>{2, 1}));
  EXPECT_EQ(parse_order(m, "file").sorted_class(m, 0, 'b'),
            (std::vector<TransId>{1, 2}));
  EXPECT_THROW(parse_order(m, "perm:0,1"), InvalidArgument);
  EXPECT_THROW(parse_order(m, "sideways"), InvalidArgument);
}

TEST(LexCompare, ChainOnThreeLetters) {
  const Machine m = split_c1();
  const auto order = default_order(m);
  const auto runs = oracle::enumerate_from(m, 0, "bbb", order);
  ASSERT_EQ(runs.size(), 8u);
  EXPECT_EQ(runs.front().transitions, (std::vector<TransId>{1, 1, 1}));
  EXPECT_EQ(runs[1].transitions, (std::vector<TransId>{1, 1, 2}));
  std::size_t successful = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (is_successful(m, runs[i])) ++successful;
    for (std::size_t j = i + 1; j < runs.size(); ++j) {
      EXPECT_EQ(lex_compare(m, order, runs[i], runs[j]), LexResult::Less);
      EXPECT_EQ(lex_compare(m, order, runs[j], runs[i]), LexResult::Greater);
    }
  }
  EXPECT_EQ(successful, 7u);
}

TEST(LexCompare, EqualAndIncomparable) {
  const Machine m = split_c1();
  const auto order = default_order(m);
  const Computation ab{0, {0, 1}};
  const Computation ba{0, {1, 0}};
  EXPECT_EQ(lex_compare(m, order, ab, ab), LexResult::Equal);
  EXPECT_EQ(lex_compare(m, order, ab, ba), LexResult::Incomparable);
  EXPECT_THROW(lex_compare(m, order, Computation{0, {5}}, ab), InvalidArgument);
}

TEST(LexCompare, InitialOrderDecidesDistinctOrigins) {
  Machine m = testkit::t2();
  m.initials = {1, 0};
  const auto order = default_order(m);
  const Computation from_q{1, {2}};
  const Computation from_p{0, {0}};
  EXPECT_EQ(lex_compare(m, order, from_q, from_p), LexResult::Less);
}
