#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "lexcover/errors.hpp"
#include "lexcover/oracle.hpp"

using namespace lexcover;
using namespace lexcover::oracle;

TEST(Enumerate, EmptyWordOnCounter) {
  const Machine m = split_multiplicities(testkit::c1()).machine;
  EXPECT_TRUE(enumerate_successful(m, "", default_order(m)).empty());
  EXPECT_EQ(enumerate_all(m, "", default_order(m)).size(), 1u);
}

// Both states are final: loop.loop, loop.edge and edge.return all succeed.
TEST(Enumerate, ThreeComputationsOnAA) {
  const Machine t = testkit::t2();
  const auto runs = enumerate_successful(t, "aa", default_order(t));
  ASSERT_EQ(runs.size(), 3u);
  EXPECT_EQ(output_label(t, runs[0]), "bb");
  EXPECT_EQ(output_label(t, runs[1]), "bbb");
  EXPECT_EQ(output_label(t, runs[2]), "bb");
}

TEST(Enumerate, CapOverflow) {
  const Machine t = testkit::t2();
  EXPECT_THROW(enumerate_all(t, std::string(20, 'a'), default_order(t), 100),
               CapOverflow);
}

TEST(Series, BinaryValue) {
  const Machine m = testkit::c1();
  EXPECT_EQ(eval_series(m, "ba"), 2u);
  EXPECT_EQ(eval_series(m, ""), 0u);
  EXPECT_EQ(eval_series(m, "bb"), 3u);
}

TEST(Relation, TwoValued) {
  const Machine t = testkit::t2();
  EXPECT_EQ(eval_relation(t, "aaa"), (std::set<Word>{"bbb", "bbbb"}));
  EXPECT_EQ(eval_relation(t, ""), (std::set<Word>{""}));
  EXPECT_EQ(eval_relation(t, "a"), (std::set<Word>{"b", "bb"}));
}

TEST(Valuedness, TwoWithWitnessA) {
  const auto r = valuedness_up_to(testkit::t2(), 8);
  EXPECT_EQ(r.value, 2u);
  EXPECT_EQ(r.witness, "a");
}

TEST(Ambiguity, FibonacciGrowth) {
  const Machine a = underlying_input_automaton(testkit::t2()).automaton;
  const auto r = ambiguity_up_to(a, 5);
  EXPECT_EQ(r.per_length, (std::vector<std::uint64_t>{1, 2, 3, 5, 8, 13}));
  EXPECT_TRUE(r.growing);
}

TEST(Ambiguity, UnambiguousIsOne) {
  const Machine t = testkit::t2();
  Machine m = t;
  m.transitions.erase(m.transitions.begin() + 1);
  EXPECT_EQ(ambiguity_up_to(m, 6).value, 1u);
}

TEST(SkimValue, Examples) {
  const Machine m = testkit::c1();
  EXPECT_EQ(skim_value(m, 3, "bb"), 0u);
  EXPECT_EQ(skim_value(m, 3, "baa"), 1u);
  EXPECT_EQ(skim_value(m, 3, "aaa"), 0u);
}

TEST(Equivalence, RemovedFinalDiffersOnA) {
  const Machine t = testkit::t2();
  Machine u = t;
  u.finals[1] = false;
  const auto r = equivalent_up_to(t, u, 2);
  EXPECT_FALSE(r.equivalent);
  EXPECT_EQ(r.counterexample, Word("a"));
  EXPECT_TRUE(equivalent_up_to(t, t, 6).equivalent);
}

TEST(Words, LengthLexicographic) {
  EXPECT_EQ(words_up_to("ba", 2),
            (std::vector<Word>{"", "b", "a", "bb", "ba", "ab", "aa"}));
}

TEST(Sweep, SerialMatchesParallel) {
  std::mt19937_64 rng(7);
  testkit::RandomShape shape;
  for (int i = 0; i < 20; ++i) {
    const Machine t = testkit::random_transducer(rng, shape);
    const auto s = valuedness_up_to(t, 6, Execution::Serial);
    const auto p = valuedness_up_to(t, 6, Execution::Parallel);
    EXPECT_EQ(s.value, p.value);
    EXPECT_EQ(s.witness, p.witness);
    EXPECT_EQ(s.per_length, p.per_length);
    const Machine a = testkit::random_nautomaton(rng, shape);
    const auto sa = ambiguity_up_to(a, 6, Execution::Serial);
    const auto pa = ambiguity_up_to(a, 6, Execution::Parallel);
    EXPECT_EQ(sa.value, pa.value);
    EXPECT_EQ(sa.witness, pa.witness);
    Machine b = a;
    if (!b.finals.empty()) b.finals[0] = !b.finals[0];
    const auto se = equivalent_up_to(a, b, 6, Execution::Serial);
    const auto pe = equivalent_up_to(a, b, 6, Execution::Parallel);
    EXPECT_EQ(se.equivalent, pe.equivalent);
    EXPECT_EQ(se.counterexample, pe.counterexample);
  }
}

TEST(Sweep, ParallelPropagatesExceptions) {
  EXPECT_THROW(sweep_max(
                   "ab", 6,
                   [](const Word& u) -> std::uint64_t {
                     if (u == "abab") throw std::runtime_error("boom");
                     return u.size();
                   },
                   Execution::Parallel),
               std::runtime_error);
}
