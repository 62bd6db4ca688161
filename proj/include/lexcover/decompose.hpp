#pragma once

// Decomposition pipelines.
//
//   T --lag_sep_covering--> T_psc --select_psi, trim--> V
//     --underlying_input_automaton--> A --multi_skim--> B_k --skim_layers-->
//     layer i --lift_outputs, trim--> component i
//
// Each component is an unambiguous functional transducer; their union
// realizes T. The morphic variant relabels a transducer S through an output
// morphism, decomposes the image, glues every computation of the image back
// onto a component through the Lead or Delay product, and relabels the
// result with the outputs of S.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lexcover/core.hpp"
#include "lexcover/freegroup.hpp"
#include "lexcover/lagsep.hpp"
#include "lexcover/lexorder.hpp"
#include "lexcover/multiskim.hpp"
#include "lexcover/oracle.hpp"

namespace lexcover {

inline constexpr std::size_t kDefaultCheckLength = 8;

// Layer transitions take the outputs of their images in `transducer`;
// `immersion` maps the layer into the transducer's underlying input
// automaton, whose transition ids coincide with the transducer's.
Machine lift_outputs(const Machine& layer, const Morphism& immersion,
                     const Machine& transducer);

struct StageMetric {
  std::string stage;
  std::size_t states = 0;
  std::size_t transitions = 0;
};

struct Component {
  Machine transducer;
  Morphism immersion;  // -> the decomposed transducer, with completion
};

struct DecompositionOptions {
  std::optional<std::size_t> N;
  std::optional<TransitionOrder> transducer_order;
  std::optional<TransitionOrder> skim_order;  // on the input automaton of V
  std::size_t check_length = kDefaultCheckLength;
  std::size_t state_cap = kDefaultStateCap;
  oracle::Execution exec = oracle::Execution::Parallel;
};

struct Verdicts {
  bool immersions = true;
  bool unambiguous = true;
  bool functional = true;
  bool union_equivalent = true;
  std::optional<Word> counterexample;

  bool all() const {
    return immersions && unambiguous && functional && union_equivalent;
  }
};

struct DecompositionResult {
  std::size_t k = 0;
  std::size_t N = 0;
  std::vector<Component> components;
  std::vector<StageMetric> metrics;
  Verdicts verdicts;
  // Kept for inspection and for the morphic pipeline.
  Machine selected;   // trimmed T_psi
  Morphism selected_to_source;
};

// Throws NotKValued if some input of length <= check_length has more than
// k images.
DecompositionResult decompose_k_valued(const Machine& transducer,
                                       std::size_t k,
                                       const DecompositionOptions& opts = {});

// Cartesian power: states Q^m, one transition per m-tuple of transitions
// reading the same letter. The automaton reads the common input; the tuple
// of component transitions carries the m outputs.
struct CartesianPower {
  std::size_t m = 0;
  Machine automaton;
  std::vector<std::vector<StateId>> state_tuples;
  std::vector<std::vector<TransId>> transition_tuples;

  // Per-coordinate computations of the base transducer.
  std::vector<Computation> project(const Computation& c) const;
};

CartesianPower cartesian_power(const Machine& transducer, std::size_t m);

struct LDProduct {
  Machine transducer;  // outputs of the left factor
  std::vector<TransId> left_provenance;
  std::vector<TransId> right_provenance;
  std::vector<DeltaElem> state_lead;  // Lead or Delay per product state
  Morphism to_left;                   // a morphism onto the left factor
};

// Pairs of same-input computations of `left` and `right` whose Lead or
// Delay stays in Delta_K; final iff both sides are final and the Lead or
// Delay is epsilon.
LDProduct ld_product(const Machine& left, const Machine& right, std::size_t K,
                     std::size_t cap = kDefaultStateCap);

struct MorphicOptions {
  DecompositionOptions decomposition;
  std::optional<std::size_t> K;  // defaults to 2(k+1)N with N = n^(k+1)L
};

struct MorphicResult {
  std::size_t K = 0;
  DecompositionResult image_decomposition;
  std::vector<Machine> components;  // transducers over the outputs of S
  std::vector<Morphism> to_source;  // morphisms into S
  std::vector<StageMetric> metrics;
  bool functional_after_theta = true;
  bool union_equivalent = true;
  std::optional<Word> counterexample;
};

MorphicResult morphic_decompose(const Machine& source,
                                const OutputMorphism& theta, std::size_t k,
                                const MorphicOptions& opts = {});

}  // namespace lexcover
