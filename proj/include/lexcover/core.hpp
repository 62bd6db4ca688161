#pragma once

// Machines (classical automata, real-time transducers, N-automata) share one
// labelled-multigraph representation. Parallel transitions with identical
// (origin, label, end) are distinct objects; a transition's id is its index.

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lexcover {

using StateId = std::uint32_t;
using TransId = std::uint32_t;
using Letter = char;
using Word = std::string;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();
inline constexpr TransId kNoTrans = std::numeric_limits<TransId>::max();

// Marks a transition without an input letter. Only used to represent invalid
// (non real-time) input so that validate() can report it.
inline constexpr Letter kNoLetter = '\0';

enum class MachineKind { Automaton, Transducer, NAutomaton };

std::string_view kind_name(MachineKind kind);

struct Transition {
  StateId origin = 0;
  Letter label = kNoLetter;
  StateId end = 0;
  Word output;                    // transducers only
  std::uint32_t multiplicity = 1; // N-automata only

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct Machine {
  MachineKind kind = MachineKind::Automaton;
  std::string name;
  std::string alphabet;      // declared input letters, in declaration order
  std::string out_alphabet;  // transducers only
  std::vector<std::string> state_names;
  std::vector<Transition> transitions;
  std::vector<StateId> initials;  // ordered; the order feeds lexorder
  std::vector<bool> finals;       // indexed by state

  std::size_t num_states() const { return state_names.size(); }
  std::size_t num_transitions() const { return transitions.size(); }
  bool is_transducer() const { return kind == MachineKind::Transducer; }
  bool is_final(StateId s) const { return s < finals.size() && finals[s]; }
  bool is_initial(StateId s) const;
  bool has_letter(Letter a) const;

  StateId add_state(std::string state_name, bool final_state = false);
  TransId add_transition(Transition t);

  // All multiplicities equal to one.
  bool is_characteristic() const;

  friend bool operator==(const Machine&, const Machine&) = default;
};

Machine make_machine(MachineKind kind, std::string name, std::string alphabet,
                     std::string out_alphabet = {});

// Per-state outgoing transition lists, in id order.
class Adjacency {
 public:
  explicit Adjacency(const Machine& m);
  const std::vector<TransId>& out(StateId s) const { return out_[s]; }
  const std::vector<TransId>& in(StateId s) const { return in_[s]; }

 private:
  std::vector<std::vector<TransId>> out_;
  std::vector<std::vector<TransId>> in_;
};

// A sequence of chained transitions starting at `origin`.
struct Computation {
  StateId origin = 0;
  std::vector<TransId> transitions;

  std::size_t length() const { return transitions.size(); }
  friend bool operator==(const Computation&, const Computation&) = default;
};

bool is_chained(const Machine& m, const Computation& c);
StateId computation_end(const Machine& m, const Computation& c);
Word input_label(const Machine& m, const Computation& c);
Word output_label(const Machine& m, const Computation& c);
std::vector<Word> output_sequence(const Machine& m, const Computation& c);
bool is_successful(const Machine& m, const Computation& c);

struct Completion;

// A pair of maps source -> target. `completion`, when present, witnesses
// that the morphism is an immersion: the source embeds into a machine that
// covers the target.
struct Morphism {
  std::vector<StateId> state_map;
  std::vector<TransId> trans_map;
  std::shared_ptr<const Completion> completion;
};

struct Completion {
  Machine covering;
  Morphism to_target;  // covering -> target, must verify as a covering
  std::vector<StateId> state_embed;  // source -> covering
  std::vector<TransId> trans_embed;
};

enum class MorphismKind { Morphism, Covering, Immersion };

Morphism identity_morphism(const Machine& m);

// first: A -> B, second: B -> C. The completion is not carried over.
Morphism compose(const Morphism& first, const Morphism& second);

// Empty optional iff the requested conditions hold; otherwise the first
// failing condition. Throws Unverifiable for an immersion without completion.
std::optional<std::string> check_morphism(const Machine& source,
                                          const Machine& target,
                                          const Morphism& phi,
                                          MorphismKind kind);

bool verify_morphism(const Machine& source, const Machine& target,
                     const Morphism& phi, MorphismKind kind);

// Builds the canonical completion of a locally injective morphism
// phi: source -> target: the disjoint union of source and target, where
// every out-transition of phi(x) not hit from x is grafted from x into the
// target copy. Returns nothing when phi is not locally injective.
std::optional<Completion> complete_immersion(const Machine& source,
                                             const Machine& target,
                                             const Morphism& phi);

std::vector<std::string> validate(const Machine& m);

struct TrimResult {
  Machine machine;
  Morphism embedding;  // trimmed -> source
};

TrimResult trim(const Machine& m);

// Accessible and co-accessible flags, per state.
std::vector<bool> useful_states(const Machine& m);

struct SplitResult {
  Machine machine;
  Morphism projection;  // split -> source
};

// Copies of a multiplicity-m transition are consecutive ids, in the order of
// the original ids.
SplitResult split_multiplicities(const Machine& m);

struct InputAutomaton {
  Machine automaton;
  std::vector<TransId> transition_map;  // automaton -> transducer (identity)
};

InputAutomaton underlying_input_automaton(const Machine& transducer);

template <typename Entry>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  std::size_t dim() const { return dim_; }
  Entry& operator()(StateId p, StateId q) { return entries_[p * dim_ + q]; }
  const Entry& operator()(StateId p, StateId q) const {
    return entries_[p * dim_ + q];
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

using CountMatrix = Matrix<std::uint64_t>;
using OutputMatrix = Matrix<std::set<Word>>;

// Entry (p, q) sums the multiplicities of the a-transitions p -> q.
CountMatrix count_matrix(const Machine& m, Letter a);
// Entry (p, q) collects the outputs of the a-transitions p -> q.
OutputMatrix output_matrix(const Machine& transducer, Letter a);

// Letter -> image word. Letters absent from the map are an error.
using OutputMorphism = std::vector<std::pair<Letter, Word>>;

const Word& image_of(const OutputMorphism& theta, Letter b);

struct RelabelResult {
  Machine transducer;
  std::vector<TransId> provenance;  // result transition -> source transition
};

RelabelResult apply_output_morphism(const Machine& transducer,
                                    const OutputMorphism& theta);

Word apply_output_morphism(const Word& w, const OutputMorphism& theta);

}  // namespace lexcover
