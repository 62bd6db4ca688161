#include "lexcover/decompose.hpp"

#include <deque>
#include <map>
#include <tuple>

#include "lexcover/errors.hpp"

namespace lexcover {
namespace {

StageMetric metric(std::string stage, const Machine& m) {
  return {std::move(stage), m.num_states(), m.num_transitions()};
}

bool verifies_as_immersion(const Machine& source, const Machine& target,
                           const Morphism& phi) {
  try {
    return verify_morphism(source, target, phi, MorphismKind::Immersion);
  } catch (const Unverifiable&) {
    return false;
  }
}

}  // namespace

Machine lift_outputs(const Machine& layer, const Morphism& immersion,
                     const Machine& transducer) {
  if (!transducer.is_transducer())
    throw InvalidArgument("outputs are lifted from a transducer");
  if (immersion.trans_map.size() != layer.num_transitions())
    throw InvalidArgument("layer morphism is not total on transitions");
  Machine out = layer;
  out.kind = MachineKind::Transducer;
  out.out_alphabet = transducer.out_alphabet;
  for (TransId e = 0; e < out.num_transitions(); ++e) {
    out.transitions[e].output =
        transducer.transitions.at(immersion.trans_map[e]).output;
    out.transitions[e].multiplicity = 1;
  }
  return out;
}

DecompositionResult decompose_k_valued(const Machine& transducer,
                                       std::size_t k,
                                       const DecompositionOptions& opts) {
  if (!transducer.is_transducer())
    throw InvalidArgument("decomposition needs a transducer");
  if (k == 0) throw InvalidArgument("k must be at least 1");
  const auto valued =
      oracle::valuedness_up_to(transducer, opts.check_length, opts.exec);
  if (valued.value > k)
    throw NotKValued("not k-valued at desk scale: input '" +
                     valued.witness + "' has " +
                     std::to_string(valued.value) + " images");

  DecompositionResult r;
  r.k = k;
  r.N = opts.N.value_or(default_N(transducer, k));
  r.metrics.push_back(metric("T", transducer));

  const TransitionOrder order =
      opts.transducer_order.value_or(default_order(transducer));
  const LagSepResult lsc =
      lag_sep_covering(transducer, r.N, order, opts.state_cap);
  r.metrics.push_back(metric("T_psc", lsc.covering));

  const Selection sel = select_psi(lsc, transducer);
  const TrimResult trimmed = trim(sel.transducer);
  r.selected = trimmed.machine;
  r.selected_to_source = compose(trimmed.embedding, sel.immersion);
  r.metrics.push_back(metric("T_psi", r.selected));

  const Machine input = underlying_input_automaton(r.selected).automaton;
  const TransitionOrder skim_order =
      opts.skim_order.value_or(default_order(input));
  const SkimResult skim = multi_skim(input, skim_order,
                                     static_cast<std::uint32_t>(k),
                                     opts.state_cap);
  r.metrics.push_back(metric("B_k", skim.covering));
  const SkimLayers layers = skim_layers(skim, input);

  r.components.resize(k);
  oracle::detail::for_each_index(k, opts.exec, [&](std::uint64_t i) {
    const auto& layer = layers.layers[i];
    const Machine lifted =
        lift_outputs(layer.machine, layer.immersion, r.selected);
    TrimResult part = trim(lifted);
    part.machine.name = transducer.name + "_c" + std::to_string(i);
    Morphism to_source = compose(compose(part.embedding, layer.immersion),
                                 r.selected_to_source);
    if (auto c = complete_immersion(part.machine, transducer, to_source))
      to_source.completion = std::make_shared<Completion>(std::move(*c));
    r.components[i] = {std::move(part.machine), std::move(to_source)};
  });

  std::vector<Machine> parts;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = r.components[i];
    r.metrics.push_back(metric("component_" + std::to_string(i), c.transducer));
    parts.push_back(c.transducer);
    r.verdicts.immersions = r.verdicts.immersions &&
        verifies_as_immersion(c.transducer, transducer, c.immersion);
    r.verdicts.unambiguous = r.verdicts.unambiguous &&
        oracle::ambiguity_up_to(c.transducer, opts.check_length, opts.exec)
                .value <= 1;
    r.verdicts.functional = r.verdicts.functional &&
        oracle::valuedness_up_to(c.transducer, opts.check_length, opts.exec)
                .value <= 1;
  }
  const auto eq = oracle::union_equivalent_up_to(parts, transducer,
                                                 opts.check_length, opts.exec);
  r.verdicts.union_equivalent = eq.equivalent;
  r.verdicts.counterexample = eq.counterexample;
  return r;
}

std::vector<Computation> CartesianPower::project(const Computation& c) const {
  std::vector<Computation> out(m);
  for (std::size_t j = 0; j < m; ++j) {
    out[j].origin = state_tuples[c.origin][j];
    for (TransId e : c.transitions)
      out[j].transitions.push_back(transition_tuples[e][j]);
  }
  return out;
}

CartesianPower cartesian_power(const Machine& transducer, std::size_t m) {
  if (m == 0) throw InvalidArgument("cartesian power needs m >= 1");
  const std::size_t n = transducer.num_states();
  std::size_t total = 1;
  for (std::size_t j = 0; j < m; ++j) {
    if (n != 0 && total > kDefaultStateCap / n)
      throw CapOverflow("cartesian power has more than " +
                        std::to_string(kDefaultStateCap) + " states");
    total *= n;
  }
  if (n == 0) total = 0;

  CartesianPower r;
  r.m = m;
  r.automaton = make_machine(MachineKind::Automaton,
                             transducer.name + "^" + std::to_string(m),
                             transducer.alphabet);
  auto decode = [&](std::size_t index) {
    std::vector<StateId> tuple(m);
    for (std::size_t j = m; j-- > 0;) {
      tuple[j] = static_cast<StateId>(index % n);
      index /= n;
    }
    return tuple;
  };
  auto encode = [&](const std::vector<StateId>& tuple) {
    std::size_t index = 0;
    for (StateId s : tuple) index = index * n + s;
    return static_cast<StateId>(index);
  };

  for (std::size_t x = 0; x < total; ++x) {
    auto tuple = decode(x);
    std::string name = "<";
    bool final_state = true;
    for (std::size_t j = 0; j < m; ++j) {
      if (j) name += ",";
      name += transducer.state_names[tuple[j]];
      final_state = final_state && transducer.is_final(tuple[j]);
    }
    r.automaton.add_state(name + ">", final_state);
    r.state_tuples.push_back(std::move(tuple));
  }

  const Adjacency adj(transducer);
  for (std::size_t x = 0; x < total; ++x) {
    const auto& tuple = r.state_tuples[x];
    for (Letter a : transducer.alphabet) {
      std::vector<std::vector<TransId>> choices(m);
      bool empty = false;
      for (std::size_t j = 0; j < m; ++j) {
        for (TransId e : adj.out(tuple[j])) {
          if (transducer.transitions[e].label == a) choices[j].push_back(e);
        }
        empty = empty || choices[j].empty();
      }
      if (empty) continue;
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        std::vector<TransId> ts(m);
        std::vector<StateId> ends(m);
        for (std::size_t j = 0; j < m; ++j) {
          ts[j] = choices[j][pick[j]];
          ends[j] = transducer.transitions[ts[j]].end;
        }
        r.automaton.add_transition(
            {static_cast<StateId>(x), a, encode(ends), {}, 1});
        r.transition_tuples.push_back(std::move(ts));
        std::size_t j = m;
        while (j-- > 0) {
          if (++pick[j] < choices[j].size()) break;
          pick[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1)) break;
      }
    }
  }

  // Tuples of initial states, first coordinate major, in initial order.
  std::vector<std::size_t> pick(m, 0);
  const auto& init = transducer.initials;
  while (!init.empty()) {
    std::vector<StateId> tuple(m);
    for (std::size_t j = 0; j < m; ++j) tuple[j] = init[pick[j]];
    r.automaton.initials.push_back(encode(tuple));
    std::size_t j = m;
    while (j-- > 0) {
      if (++pick[j] < init.size()) break;
      pick[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return r;
}

LDProduct ld_product(const Machine& left, const Machine& right, std::size_t K,
                     std::size_t cap) {
  if (!left.is_transducer() || !right.is_transducer())
    throw InvalidArgument("the Lead or Delay product pairs two transducers");
  const Adjacency left_adj(left);
  const Adjacency right_adj(right);

  LDProduct r;
  r.transducer = make_machine(MachineKind::Transducer,
                              left.name + "_x_" + right.name, left.alphabet,
                              left.out_alphabet);
  std::map<std::tuple<StateId, StateId, DeltaElem>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> bases;
  std::deque<StateId> work;
  auto intern = [&](StateId p, StateId q, DeltaElem w) {
    auto key = std::make_tuple(p, q, w);
    if (auto it = ids.find(key); it != ids.end()) return it->second;
    if (bases.size() >= cap)
      throw CapOverflow("Lead or Delay product state cap " +
                        std::to_string(cap) + " exceeded");
    const bool final_state =
        left.is_final(p) && right.is_final(q) && w.is_epsilon();
    const StateId id = r.transducer.add_state(
        left.state_names[p] + "|" + right.state_names[q] + "|" + render(w),
        final_state);
    r.to_left.state_map.push_back(p);
    r.state_lead.push_back(w);
    bases.emplace_back(p, q);
    ids.emplace(std::move(key), id);
    work.push_back(id);
    return id;
  };

  for (StateId i : left.initials) {
    for (StateId j : right.initials)
      r.transducer.initials.push_back(intern(i, j, DeltaElem()));
  }
  while (!work.empty()) {
    const StateId x = work.front();
    work.pop_front();
    const auto [p, q] = bases[x];
    for (TransId e : left_adj.out(p)) {
      const auto& te = left.transitions[e];
      for (TransId f : right_adj.out(q)) {
        const auto& tf = right.transitions[f];
        if (tf.label != te.label) continue;
        FreeGroupWord g = FreeGroupWord::inverse_of(te.output);
        g *= r.state_lead[x].to_free_group();
        g *= FreeGroupWord::plain(tf.output);
        auto next = rho(g, K);
        if (!next) continue;
        const StateId y = intern(te.end, tf.end, std::move(*next));
        r.transducer.add_transition({x, te.label, y, te.output, 1});
        r.left_provenance.push_back(e);
        r.right_provenance.push_back(f);
        r.to_left.trans_map.push_back(e);
      }
    }
  }
  return r;
}

MorphicResult morphic_decompose(const Machine& source,
                                const OutputMorphism& theta, std::size_t k,
                                const MorphicOptions& opts) {
  const RelabelResult relabel = apply_output_morphism(source, theta);
  const Machine& image = relabel.transducer;
  const auto& dopts = opts.decomposition;

  MorphicResult r;
  r.image_decomposition = decompose_k_valued(image, k, dopts);
  r.K = opts.K.value_or(2 * (k + 1) * default_N(image, k));
  r.metrics = r.image_decomposition.metrics;

  r.components.resize(k);
  r.to_source.resize(k);
  oracle::detail::for_each_index(k, dopts.exec, [&](std::uint64_t i) {
    const auto& part = r.image_decomposition.components[i].transducer;
    LDProduct prod = ld_product(image, part, r.K, dopts.state_cap);
    Machine w = std::move(prod.transducer);
    w.name = source.name + "_w" + std::to_string(i);
    w.out_alphabet = source.out_alphabet;
    Morphism to_source = prod.to_left;
    for (TransId e = 0; e < w.num_transitions(); ++e) {
      const TransId s_trans = relabel.provenance[prod.left_provenance[e]];
      w.transitions[e].output = source.transitions[s_trans].output;
      to_source.trans_map[e] = s_trans;
    }
    TrimResult trimmed = trim(w);
    r.to_source[i] = compose(trimmed.embedding, to_source);
    r.components[i] = std::move(trimmed.machine);
  });

  for (std::size_t i = 0; i < k; ++i) {
    r.metrics.push_back(metric("W_" + std::to_string(i), r.components[i]));
    const Machine composed =
        apply_output_morphism(r.components[i], theta).transducer;
    r.functional_after_theta = r.functional_after_theta &&
        oracle::valuedness_up_to(composed, dopts.check_length, dopts.exec)
                .value <= 1;
  }
  const auto eq = oracle::union_equivalent_up_to(r.components, source,
                                                 dopts.check_length, dopts.exec);
  r.union_equivalent = eq.equivalent;
  r.counterexample = eq.counterexample;
  return r;
}

}  // namespace lexcover
