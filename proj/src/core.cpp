#include "lexcover/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "lexcover/errors.hpp"

namespace lexcover {

std::string_view kind_name(MachineKind kind) {
  switch (kind) {
    case MachineKind::Automaton:
      return "automaton";
    case MachineKind::Transducer:
      return "transducer";
    case MachineKind::NAutomaton:
      return "nautomaton";
  }
  return "?";
}

bool Machine::is_initial(StateId s) const {
  return std::find(initials.begin(), initials.end(), s) != initials.end();
}

bool Machine::has_letter(Letter a) const {
  return a != kNoLetter && alphabet.find(a) != std::string::npos;
}

StateId Machine::add_state(std::string state_name, bool final_state) {
  state_names.push_back(std::move(state_name));
  finals.push_back(final_state);
  return static_cast<StateId>(state_names.size() - 1);
}

TransId Machine::add_transition(Transition t) {
  transitions.push_back(std::move(t));
  return static_cast<TransId>(transitions.size() - 1);
}

bool Machine::is_characteristic() const {
  return std::all_of(transitions.begin(), transitions.end(),
                     [](const Transition& t) { return t.multiplicity == 1; });
}

Machine make_machine(MachineKind kind, std::string name, std::string alphabet,
                     std::string out_alphabet) {
  Machine m;
  m.kind = kind;
  m.name = std::move(name);
  m.alphabet = std::move(alphabet);
  m.out_alphabet = std::move(out_alphabet);
  return m;
}

Adjacency::Adjacency(const Machine& m)
    : out_(m.num_states()), in_(m.num_states()) {
  for (TransId e = 0; e < m.num_transitions(); ++e) {
    const auto& t = m.transitions[e];
    if (t.origin < out_.size()) out_[t.origin].push_back(e);
    if (t.end < in_.size()) in_[t.end].push_back(e);
  }
}

bool is_chained(const Machine& m, const Computation& c) {
  if (c.origin >= m.num_states()) return false;
  StateId at = c.origin;
  for (TransId e : c.transitions) {
    if (e >= m.num_transitions() || m.transitions[e].origin != at) return false;
    at = m.transitions[e].end;
  }
  return true;
}

StateId computation_end(const Machine& m, const Computation& c) {
  return c.transitions.empty() ? c.origin
                               : m.transitions[c.transitions.back()].end;
}

Word input_label(const Machine& m, const Computation& c) {
  Word w;
  w.reserve(c.transitions.size());
  for (TransId e : c.transitions) w.push_back(m.transitions[e].label);
  return w;
}

Word output_label(const Machine& m, const Computation& c) {
  Word w;
  for (TransId e : c.transitions) w += m.transitions[e].output;
  return w;
}

std::vector<Word> output_sequence(const Machine& m, const Computation& c) {
  std::vector<Word> xs;
  xs.reserve(c.transitions.size());
  for (TransId e : c.transitions) xs.push_back(m.transitions[e].output);
  return xs;
}

bool is_successful(const Machine& m, const Computation& c) {
  return m.is_initial(c.origin) && m.is_final(computation_end(m, c));
}

Morphism identity_morphism(const Machine& m) {
  Morphism phi;
  phi.state_map.resize(m.num_states());
  phi.trans_map.resize(m.num_transitions());
  std::iota(phi.state_map.begin(), phi.state_map.end(), StateId{0});
  std::iota(phi.trans_map.begin(), phi.trans_map.end(), TransId{0});
  return phi;
}

Morphism compose(const Morphism& first, const Morphism& second) {
  Morphism out;
  out.state_map.reserve(first.state_map.size());
  for (StateId s : first.state_map) {
    out.state_map.push_back(s < second.state_map.size() ? second.state_map[s]
                                                        : kNoState);
  }
  out.trans_map.reserve(first.trans_map.size());
  for (TransId e : first.trans_map) {
    out.trans_map.push_back(e < second.trans_map.size() ? second.trans_map[e]
                                                        : kNoTrans);
  }
  return out;
}

namespace {

std::string state_ref(const Machine& m, StateId s) {
  return s < m.num_states() ? m.state_names[s] : "#" + std::to_string(s);
}

std::optional<std::string> check_plain(const Machine& source,
                                       const Machine& target,
                                       const Morphism& phi) {
  if (phi.state_map.size() != source.num_states())
    return "state map is not total on the source";
  if (phi.trans_map.size() != source.num_transitions())
    return "transition map is not total on the source";
  for (StateId s = 0; s < source.num_states(); ++s) {
    if (phi.state_map[s] >= target.num_states())
      return "state " + state_ref(source, s) + " maps outside the target";
  }
  for (TransId e = 0; e < source.num_transitions(); ++e) {
    const TransId f = phi.trans_map[e];
    if (f >= target.num_transitions())
      return "transition " + std::to_string(e) + " maps outside the target";
    const auto& te = source.transitions[e];
    const auto& tf = target.transitions[f];
    if (tf.origin != phi.state_map[te.origin] ||
        tf.end != phi.state_map[te.end])
      return "transition " + std::to_string(e) + " breaks adjacency";
    if (tf.label != te.label)
      return "transition " + std::to_string(e) + " changes its label";
    if (source.is_transducer() && target.is_transducer() &&
        tf.output != te.output)
      return "transition " + std::to_string(e) + " changes its output";
  }
  for (StateId s : source.initials) {
    if (!target.is_initial(phi.state_map[s]))
      return "initial state " + state_ref(source, s) +
             " maps to a non-initial state";
  }
  for (StateId s = 0; s < source.num_states(); ++s) {
    if (source.is_final(s) && !target.is_final(phi.state_map[s]))
      return "final state " + state_ref(source, s) +
             " maps to a non-final state";
  }
  return std::nullopt;
}

std::optional<std::string> check_covering(const Machine& source,
                                          const Machine& target,
                                          const Morphism& phi) {
  if (auto why = check_plain(source, target, phi)) return why;
  const Adjacency src_adj(source);
  const Adjacency dst_adj(target);
  for (StateId s = 0; s < source.num_states(); ++s) {
    std::vector<TransId> image;
    for (TransId e : src_adj.out(s)) image.push_back(phi.trans_map[e]);
    std::sort(image.begin(), image.end());
    if (image != dst_adj.out(phi.state_map[s]))
      return "out-transitions of " + state_ref(source, s) +
             " are not in bijection with those of " +
             state_ref(target, phi.state_map[s]);
  }
  std::vector<StateId> init_image;
  for (StateId s : source.initials) init_image.push_back(phi.state_map[s]);
  std::sort(init_image.begin(), init_image.end());
  std::vector<StateId> target_init = target.initials;
  std::sort(target_init.begin(), target_init.end());
  if (init_image != target_init)
    return "initial states are not in bijection";
  for (StateId s = 0; s < source.num_states(); ++s) {
    if (source.is_final(s) != target.is_final(phi.state_map[s]))
      return "final states are not the preimage of the target's: " +
             state_ref(source, s);
  }
  return std::nullopt;
}

std::optional<std::string> check_immersion(const Machine& source,
                                           const Machine& target,
                                           const Morphism& phi) {
  if (!phi.completion)
    throw Unverifiable("immersion has no recorded completion");
  if (auto why = check_plain(source, target, phi)) return why;
  const Completion& c = *phi.completion;
  if (auto why = check_covering(c.covering, target, c.to_target))
    return "completion is not a covering: " + *why;
  if (c.state_embed.size() != source.num_states() ||
      c.trans_embed.size() != source.num_transitions())
    return "embedding into the completion is not total";
  std::vector<bool> seen_state(c.covering.num_states(), false);
  for (StateId s = 0; s < source.num_states(); ++s) {
    const StateId x = c.state_embed[s];
    if (x >= c.covering.num_states() || seen_state[x])
      return "embedding is not injective on states";
    seen_state[x] = true;
    if (c.to_target.state_map[x] != phi.state_map[s])
      return "embedding does not commute on state " + state_ref(source, s);
    if (source.is_final(s) && !c.covering.is_final(x))
      return "final state " + state_ref(source, s) +
             " is not final in the completion";
  }
  for (StateId s : source.initials) {
    if (!c.covering.is_initial(c.state_embed[s]))
      return "initial state " + state_ref(source, s) +
             " is not initial in the completion";
  }
  std::vector<bool> seen_trans(c.covering.num_transitions(), false);
  for (TransId e = 0; e < source.num_transitions(); ++e) {
    const TransId f = c.trans_embed[e];
    if (f >= c.covering.num_transitions() || seen_trans[f])
      return "embedding is not injective on transitions";
    seen_trans[f] = true;
    const auto& te = source.transitions[e];
    const auto& tf = c.covering.transitions[f];
    if (tf.origin != c.state_embed[te.origin] ||
        tf.end != c.state_embed[te.end] || tf.label != te.label ||
        tf.output != te.output)
      return "transition " + std::to_string(e) +
             " is not embedded in the completion";
    if (c.to_target.trans_map[f] != phi.trans_map[e])
      return "embedding does not commute on transition " + std::to_string(e);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_morphism(const Machine& source,
                                          const Machine& target,
                                          const Morphism& phi,
                                          MorphismKind kind) {
  switch (kind) {
    case MorphismKind::Morphism:
      return check_plain(source, target, phi);
    case MorphismKind::Covering:
      return check_covering(source, target, phi);
    case MorphismKind::Immersion:
      return check_immersion(source, target, phi);
  }
  return "unknown morphism kind";
}

bool verify_morphism(const Machine& source, const Machine& target,
                     const Morphism& phi, MorphismKind kind) {
  return !check_morphism(source, target, phi, kind).has_value();
}

std::optional<Completion> complete_immersion(const Machine& source,
                                             const Machine& target,
                                             const Morphism& phi) {
  if (check_plain(source, target, phi)) return std::nullopt;
  const Adjacency src_adj(source);
  const Adjacency dst_adj(target);

  Completion c;
  Machine& z = c.covering;
  z.kind = source.kind;
  z.name = source.name;
  z.alphabet = source.alphabet;
  z.out_alphabet = source.out_alphabet;

  // Source copy, then target copy.
  for (StateId s = 0; s < source.num_states(); ++s) {
    c.state_embed.push_back(z.add_state(source.state_names[s]));
    c.to_target.state_map.push_back(phi.state_map[s]);
  }
  const auto offset = static_cast<StateId>(source.num_states());
  for (StateId q = 0; q < target.num_states(); ++q) {
    z.add_state("~" + target.state_names[q]);
    c.to_target.state_map.push_back(q);
  }
  auto add = [&](StateId from, TransId f, StateId to) {
    Transition t = target.transitions[f];
    t.origin = from;
    t.end = to;
    if (z.kind != MachineKind::Transducer) t.output.clear();
    c.to_target.trans_map.push_back(f);
    return z.add_transition(std::move(t));
  };
  c.trans_embed.assign(source.num_transitions(), kNoTrans);
  for (StateId s = 0; s < source.num_states(); ++s) {
    std::vector<bool> hit(target.num_transitions(), false);
    for (TransId e : src_adj.out(s)) {
      const TransId f = phi.trans_map[e];
      if (hit[f]) return std::nullopt;
      hit[f] = true;
      c.trans_embed[e] = add(s, f, source.transitions[e].end);
    }
    for (TransId f : dst_adj.out(phi.state_map[s])) {
      if (!hit[f]) add(s, f, offset + target.transitions[f].end);
    }
  }
  for (StateId q = 0; q < target.num_states(); ++q) {
    for (TransId f : dst_adj.out(q)) {
      add(offset + q, f, offset + target.transitions[f].end);
    }
  }
  std::vector<bool> init_hit(target.num_states(), false);
  for (StateId s : source.initials) {
    if (init_hit[phi.state_map[s]]) return std::nullopt;
    init_hit[phi.state_map[s]] = true;
    z.initials.push_back(s);
  }
  for (StateId q : target.initials) {
    if (!init_hit[q]) z.initials.push_back(offset + q);
  }
  for (StateId x = 0; x < z.num_states(); ++x) {
    z.finals[x] = target.is_final(c.to_target.state_map[x]);
  }
  return c;
}

std::vector<std::string> validate(const Machine& m) {
  std::vector<std::string> out;
  const bool transducer = m.is_transducer();
  for (std::size_t i = 0; i < m.alphabet.size(); ++i) {
    if (m.alphabet[i] == kNoLetter ||
        m.alphabet.find(m.alphabet[i], i + 1) != std::string::npos)
      out.push_back("alphabet letter repeated or empty");
  }
  if (!transducer && !m.out_alphabet.empty())
    out.push_back("output alphabet declared on a non-transducer");
  if (m.finals.size() != m.num_states())
    out.push_back("final flags do not match the state count");
  std::vector<bool> seen(m.num_states(), false);
  for (StateId s : m.initials) {
    if (s >= m.num_states()) {
      out.push_back("initial state #" + std::to_string(s) + " undeclared");
    } else if (seen[s]) {
      out.push_back("initial state " + m.state_names[s] + " repeated");
    } else {
      seen[s] = true;
    }
  }
  for (TransId e = 0; e < m.num_transitions(); ++e) {
    const auto& t = m.transitions[e];
    const std::string where = "transition " + std::to_string(e) + ": ";
    if (t.origin >= m.num_states() || t.end >= m.num_states())
      out.push_back(where + "endpoint is not a declared state");
    if (t.label == kNoLetter) {
      out.push_back(where + (transducer ? "empty input (not real-time)"
                                        : "empty label"));
    } else if (!m.has_letter(t.label)) {
      out.push_back(where + "label '" + std::string(1, t.label) +
                    "' not in the alphabet");
    }
    if (transducer) {
      for (Letter b : t.output) {
        if (m.out_alphabet.find(b) == std::string::npos) {
          out.push_back(where + "output letter '" + std::string(1, b) +
                        "' not in the output alphabet");
          break;
        }
      }
    } else if (!t.output.empty()) {
      out.push_back(where + "output on a non-transducer");
    }
    if (t.multiplicity == 0) {
      out.push_back(where + "zero multiplicity");
    } else if (m.kind != MachineKind::NAutomaton && t.multiplicity != 1) {
      out.push_back(where + "multiplicity on a non-N-automaton");
    }
  }
  return out;
}

std::vector<bool> useful_states(const Machine& m) {
  const Adjacency adj(m);
  std::vector<bool> acc(m.num_states(), false), coacc(m.num_states(), false);
  std::deque<StateId> work;
  for (StateId s : m.initials) {
    if (!acc[s]) {
      acc[s] = true;
      work.push_back(s);
    }
  }
  while (!work.empty()) {
    const StateId s = work.front();
    work.pop_front();
    for (TransId e : adj.out(s)) {
      const StateId q = m.transitions[e].end;
      if (!acc[q]) {
        acc[q] = true;
        work.push_back(q);
      }
    }
  }
  for (StateId s = 0; s < m.num_states(); ++s) {
    if (m.is_final(s)) {
      coacc[s] = true;
      work.push_back(s);
    }
  }
  while (!work.empty()) {
    const StateId s = work.front();
    work.pop_front();
    for (TransId e : adj.in(s)) {
      const StateId p = m.transitions[e].origin;
      if (!coacc[p]) {
        coacc[p] = true;
        work.push_back(p);
      }
    }
  }
  std::vector<bool> useful(m.num_states());
  for (StateId s = 0; s < m.num_states(); ++s) useful[s] = acc[s] && coacc[s];
  return useful;
}

TrimResult trim(const Machine& m) {
  const auto useful = useful_states(m);
  TrimResult r;
  r.machine = make_machine(m.kind, m.name, m.alphabet, m.out_alphabet);
  std::vector<StateId> renumber(m.num_states(), kNoState);
  for (StateId s = 0; s < m.num_states(); ++s) {
    if (!useful[s]) continue;
    renumber[s] = r.machine.add_state(m.state_names[s], m.is_final(s));
    r.embedding.state_map.push_back(s);
  }
  for (TransId e = 0; e < m.num_transitions(); ++e) {
    Transition t = m.transitions[e];
    if (renumber[t.origin] == kNoState || renumber[t.end] == kNoState) continue;
    t.origin = renumber[t.origin];
    t.end = renumber[t.end];
    r.machine.add_transition(std::move(t));
    r.embedding.trans_map.push_back(e);
  }
  for (StateId s : m.initials) {
    if (renumber[s] != kNoState) r.machine.initials.push_back(renumber[s]);
  }
  return r;
}

SplitResult split_multiplicities(const Machine& m) {
  SplitResult r;
  r.machine = m;
  r.machine.transitions.clear();
  for (TransId e = 0; e < m.num_transitions(); ++e) {
    Transition t = m.transitions[e];
    const auto copies = t.multiplicity;
    t.multiplicity = 1;
    for (std::uint32_t i = 0; i < copies; ++i) {
      r.machine.add_transition(t);
      r.projection.trans_map.push_back(e);
    }
  }
  r.projection.state_map = identity_morphism(m).state_map;
  return r;
}

InputAutomaton underlying_input_automaton(const Machine& transducer) {
  InputAutomaton r;
  r.automaton = transducer;
  r.automaton.kind = MachineKind::Automaton;
  r.automaton.out_alphabet.clear();
  for (auto& t : r.automaton.transitions) t.output.clear();
  r.transition_map = identity_morphism(transducer).trans_map;
  return r;
}

CountMatrix count_matrix(const Machine& m, Letter a) {
  CountMatrix mu(m.num_states());
  for (const auto& t : m.transitions) {
    if (t.label == a) mu(t.origin, t.end) += t.multiplicity;
  }
  return mu;
}

OutputMatrix output_matrix(const Machine& transducer, Letter a) {
  OutputMatrix mu(transducer.num_states());
  for (const auto& t : transducer.transitions) {
    if (t.label == a) mu(t.origin, t.end).insert(t.output);
  }
  return mu;
}

const Word& image_of(const OutputMorphism& theta, Letter b) {
  for (const auto& [letter, image] : theta) {
    if (letter == b) return image;
  }
  throw InvalidArgument("output morphism undefined on letter '" +
                        std::string(1, b) + "'");
}

Word apply_output_morphism(const Word& w, const OutputMorphism& theta) {
  Word out;
  for (Letter b : w) out += image_of(theta, b);
  return out;
}

RelabelResult apply_output_morphism(const Machine& transducer,
                                    const OutputMorphism& theta) {
  if (!transducer.is_transducer())
    throw InvalidArgument("output morphism applies to transducers only");
  RelabelResult r;
  r.transducer = transducer;
  std::string alphabet;
  for (Letter b : transducer.out_alphabet) {
    for (Letter c : image_of(theta, b)) {
      if (alphabet.find(c) == std::string::npos) alphabet.push_back(c);
    }
  }
  r.transducer.out_alphabet = alphabet;
  for (auto& t : r.transducer.transitions) {
    t.output = apply_output_morphism(t.output, theta);
  }
  r.provenance = identity_morphism(transducer).trans_map;
  return r;
}

}  // namespace lexcover
