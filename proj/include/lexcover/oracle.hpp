#pragma once

// Brute-force ground truth. Everything here is computed either by explicit
// enumeration of computations or by the matrix representation evaluated
// word by word; none of it goes through the covering constructions.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "lexcover/core.hpp"
#include "lexcover/lexorder.hpp"

namespace lexcover::oracle {

inline constexpr std::size_t kDefaultComputationCap = std::size_t{1} << 20;

// All computations from `origin` whose (input) label is u, in lex order.
std::vector<Computation> enumerate_from(
    const Machine& m, StateId origin, const Word& u,
    const TransitionOrder& order,
    std::size_t cap = kDefaultComputationCap);

// All computations from the initial states labelled u, in lex order
// (initial order first). Not filtered on finality.
std::vector<Computation> enumerate_all(
    const Machine& m, const Word& u, const TransitionOrder& order,
    std::size_t cap = kDefaultComputationCap);

std::vector<Computation> enumerate_successful(
    const Machine& m, const Word& u, const TransitionOrder& order,
    std::size_t cap = kDefaultComputationCap);

// Sum over successful computations of the product of multiplicities.
std::uint64_t eval_series(const Machine& m, const Word& u);

// Number of successful computations (multiplicities ignored).
std::uint64_t count_successful(const Machine& m, const Word& u);

bool accepts(const Machine& m, const Word& u);

std::set<Word> eval_relation(const Machine& transducer, const Word& u);

// s(u) - k if s(u) > k, else 0.
std::uint64_t skim_value(const Machine& m, std::uint64_t k, const Word& u);

// All words of length <= max_len over `alphabet`, short first, then
// lexicographic in alphabet declaration order.
std::vector<Word> words_up_to(const std::string& alphabet,
                              std::size_t max_len);

enum class Execution { Serial, Parallel };

struct WordMax {
  std::uint64_t value = 0;
  Word witness;                  // first word attaining the maximum
  std::vector<std::uint64_t> per_length;  // max per length 0..max_len
  // The per-length maximum increased over the last three lengths.
  bool growing = false;
};

WordMax valuedness_up_to(const Machine& transducer, std::size_t max_len,
                         Execution exec = Execution::Parallel);

WordMax ambiguity_up_to(const Machine& m, std::size_t max_len,
                        Execution exec = Execution::Parallel);

struct Equivalence {
  bool equivalent = true;
  std::optional<Word> counterexample;  // first differing word
};

// Automata compare acceptance, N-automata series, transducers images.
Equivalence equivalent_up_to(const Machine& a, const Machine& b,
                             std::size_t max_len,
                             Execution exec = Execution::Parallel);

// Relation of a union of transducers.
std::set<Word> eval_union(const std::vector<Machine>& transducers,
                          const Word& u);

Equivalence union_equivalent_up_to(const std::vector<Machine>& parts,
                                   const Machine& whole, std::size_t max_len,
                                   Execution exec = Execution::Parallel);

// Generic kernels; exposed so the serial and OpenMP paths can be compared.
// value_of(word) -> uint64.
template <typename F>
WordMax sweep_max(const std::string& alphabet, std::size_t max_len,
                  F&& value_of, Execution exec);

// same(word) -> bool; returns the first word (in sweep order) that fails.
template <typename F>
std::optional<Word> sweep_first_failure(const std::string& alphabet,
                                        std::size_t max_len, F&& same,
                                        Execution exec);

}  // namespace lexcover::oracle

#include "lexcover/oracle_sweep.ipp"
