#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lexcover/core.hpp"
#include "lexcover/errors.hpp"
#include "lexcover/multiskim.hpp"
#include "lexcover/oracle.hpp"

using namespace lexcover;
using lexcover::testkit::c1;
using lexcover::testkit::t2;

TEST(Validate, AcceptsTwoValuedTransducer) { EXPECT_TRUE(validate(t2()).empty()); }

TEST(Validate, FlagsUndeclaredState) {
  Machine m = make_machine(MachineKind::Automaton, "A", "a");
  m.add_state("p", true);
  m.initials.push_back(0);
  m.transitions.push_back({0, 'a', 7, {}, 1});
  EXPECT_EQ(validate(m).size(), 1u);
}

TEST(Validate, FlagsEmptyInput) {
  Machine m = t2();
  m.transitions.push_back({0, kNoLetter, 1, "b", 1});
  EXPECT_EQ(validate(m).size(), 1u);
}

TEST(Trim, KeepsUsefulStates) {
  const Machine t = t2();
  EXPECT_EQ(trim(t).machine, t);
}

TEST(Trim, DropsIsolatedState) {
  Machine m = t2();
  m.add_state("x");
  const auto r = trim(m);
  EXPECT_EQ(r.machine.num_states(), 2u);
  EXPECT_EQ(r.machine.num_transitions(), 3u);
  EXPECT_TRUE(verify_morphism(r.machine, m, r.embedding, MorphismKind::Morphism));
}

TEST(Split, ParallelCopies) {
  const auto r = split_multiplicities(c1());
  ASSERT_EQ(r.machine.num_transitions(), 7u);
  EXPECT_TRUE(r.machine.is_characteristic());
  EXPECT_EQ(r.machine.transitions[3], r.machine.transitions[4]);
  EXPECT_EQ(r.projection.trans_map[3], 3u);
  EXPECT_EQ(r.projection.trans_map[4], 3u);
  EXPECT_EQ(r.projection.trans_map[6], 4u);
}

TEST(Split, AllOnesIsIsomorphic) {
  Machine m = split_multiplicities(c1()).machine;
  EXPECT_EQ(split_multiplicities(m).machine.transitions, m.transitions);
}

TEST(Split, PreservesSeries) {
  Machine m = make_machine(MachineKind::NAutomaton, "M", "ab");
  m.add_state("p", true);
  m.initials.push_back(0);
  m.add_transition({0, 'a', 0, {}, 3});
  m.add_transition({0, 'b', 0, {}, 1});
  const Machine split = split_multiplicities(m).machine;
  EXPECT_EQ(split.num_transitions(), 4u);
  for (const Word u : {"", "a", "ab", "aab", "bbaa"})
    EXPECT_EQ(oracle::eval_series(split, u), oracle::eval_series(m, u)) << u;
}

TEST(InputAutomaton, ForgetsOutputs) {
  const auto r = underlying_input_automaton(t2());
  EXPECT_EQ(r.automaton.kind, MachineKind::Automaton);
  EXPECT_EQ(r.automaton.num_transitions(), 3u);
  for (const auto& e : r.automaton.transitions) EXPECT_TRUE(e.output.empty());
  EXPECT_EQ(r.transition_map, (std::vector<TransId>{0, 1, 2}));
}

TEST(InputAutomaton, EmptyTransducer) {
  Machine m = make_machine(MachineKind::Transducer, "E", "a", "b");
  m.add_state("p", true);
  m.initials.push_back(0);
  EXPECT_EQ(underlying_input_automaton(m).automaton.num_transitions(), 0u);
}

TEST(Matrices, CounterRepresentation) {
  const Machine m = c1();
  const auto a = count_matrix(m, 'a');
  const auto b = count_matrix(m, 'b');
  EXPECT_EQ(a(0, 0), 1u);
  EXPECT_EQ(a(0, 1), 0u);
  EXPECT_EQ(a(1, 0), 0u);
  EXPECT_EQ(a(1, 1), 2u);
  EXPECT_EQ(b(0, 0), 1u);
  EXPECT_EQ(b(0, 1), 1u);
  EXPECT_EQ(b(1, 1), 2u);
}

TEST(Matrices, TransducerOutputs) {
  const auto a = output_matrix(t2(), 'a');
  EXPECT_EQ(a(0, 0), std::set<Word>{"b"});
  EXPECT_EQ(a(0, 1), std::set<Word>{"bb"});
  EXPECT_EQ(a(1, 0), std::set<Word>{""});
  EXPECT_TRUE(a(1, 1).empty());
}

TEST(Morphisms, IdentityIsEverything) {
  const Machine m = t2();
  const Morphism id = identity_morphism(m);
  EXPECT_TRUE(verify_morphism(m, m, id, MorphismKind::Morphism));
  EXPECT_TRUE(verify_morphism(m, m, id, MorphismKind::Covering));
  auto c = complete_immersion(m, m, id);
  ASSERT_TRUE(c);
  Morphism imm = id;
  imm.completion = std::make_shared<Completion>(std::move(*c));
  EXPECT_TRUE(verify_morphism(m, m, imm, MorphismKind::Immersion));
}

TEST(Morphisms, ImmersionWithoutCompletionIsUnverifiable) {
  const Machine m = t2();
  EXPECT_THROW(check_morphism(m, m, identity_morphism(m), MorphismKind::Immersion),
               Unverifiable);
}

TEST(Morphisms, DroppedTransitionIsNotCovering) {
  const Machine t = t2();
  Machine sub = t;
  sub.transitions.pop_back();
  Morphism phi = identity_morphism(sub);
  EXPECT_TRUE(verify_morphism(sub, t, phi, MorphismKind::Morphism));
  EXPECT_FALSE(verify_morphism(sub, t, phi, MorphismKind::Covering));
  auto c = complete_immersion(sub, t, phi);
  ASSERT_TRUE(c);
  phi.completion = std::make_shared<Completion>(std::move(*c));
  EXPECT_TRUE(verify_morphism(sub, t, phi, MorphismKind::Immersion));
}

TEST(Morphisms, SkimProjectionIsCovering) {
  const Machine base = split_multiplicities(c1()).machine;
  const auto skim = multi_skim(base, default_order(base), 3);
  EXPECT_TRUE(verify_morphism(skim.covering, base, skim.projection,
                              MorphismKind::Covering));
}

TEST(OutputMorphism, MergesLetters) {
  const auto r = apply_output_morphism(testkit::s2(), testkit::theta());
  EXPECT_EQ(r.transducer.transitions, t2().transitions);
  EXPECT_EQ(r.transducer.out_alphabet, "b");
}

TEST(OutputMorphism, IdentityIsIsomorphic) {
  const Machine t = t2();
  EXPECT_EQ(apply_output_morphism(t, {{'b', "b"}}).transducer.transitions,
            t.transitions);
}

TEST(OutputMorphism, ErasingLetter) {
  const auto r = apply_output_morphism(t2(), {{'b', ""}});
  for (const auto& e : r.transducer.transitions) EXPECT_TRUE(e.output.empty());
}

TEST(Computations, LabelsAndSuccess) {
  const Machine t = t2();
  const Computation c{0, {1, 2, 0}};
  EXPECT_TRUE(is_chained(t, c));
  EXPECT_EQ(input_label(t, c), "aaa");
  EXPECT_EQ(output_label(t, c), "bbb");
  EXPECT_EQ(output_sequence(t, c), (std::vector<Word>{"bb", "", "b"}));
  EXPECT_TRUE(is_successful(t, c));
  EXPECT_FALSE(is_chained(t, Computation{0, {2}}));
}
