#pragma once

// Lexicographic ordering of computations. Transitions are comparable iff
// they share origin and (input) label; each such class carries a total
// order. Initial states are ordered too, which orders computations that
// start at distinct initial states as if a hidden initial state fed them.

#include <string_view>
#include <vector>

#include "lexcover/core.hpp"

namespace lexcover {

enum class LexResult { Less, Equal, Greater, Incomparable };

class TransitionOrder {
 public:
  TransitionOrder() = default;

  // `rank[e]` is the position of e inside its (origin, label) class. Ranks
  // inside a class must be a permutation of 0..size-1.
  TransitionOrder(const Machine& m, std::vector<std::uint32_t> rank,
                  std::vector<StateId> initial_order);

  std::size_t num_transitions() const { return rank_.size(); }
  std::uint32_t rank(TransId e) const { return rank_[e]; }
  const std::vector<StateId>& initial_order() const { return initial_order_; }
  // Position among the initial states, or npos for a non-initial state.
  std::size_t initial_rank(StateId s) const;

  // e strictly precedes f (same class, smaller rank).
  bool precedes(const Machine& m, TransId e, TransId f) const;

  // Transitions of one class, smallest first.
  std::vector<TransId> sorted_class(const Machine& m, StateId origin,
                                    Letter label) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint32_t> rank_;
  std::vector<StateId> initial_order_;
  std::vector<std::size_t> initial_rank_;
  // (origin, label) -> transitions sorted by rank, kept for enumeration.
  std::vector<std::vector<TransId>> by_origin_;
};

// Declaration order within each class.
TransitionOrder default_order(const Machine& m);

// Reversed declaration order within each class; initial order unchanged.
TransitionOrder reverse_order(const Machine& m);

// `ids` lists every transition id once; earlier means smaller.
TransitionOrder permutation_order(const Machine& m,
                                  const std::vector<TransId>& ids);

// Parses `file`, `reverse` or `perm:<id>,<id>,...`.
TransitionOrder parse_order(const Machine& m, std::string_view spec);

// Throws InvalidArgument if either computation is not well chained.
LexResult lex_compare(const Machine& m, const TransitionOrder& order,
                      const Computation& c, const Computation& d);

}  // namespace lexcover
