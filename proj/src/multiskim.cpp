#include "lexcover/multiskim.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "lexcover/errors.hpp"

namespace lexcover {

NkValue::NkValue(std::uint32_t k, std::uint64_t n)
    : k_(k), value_(static_cast<std::uint32_t>(std::min<std::uint64_t>(n, k))) {
  if (k == 0) throw InvalidArgument("N_k needs k >= 1");
}

std::string NkValue::render() const {
  return is_omega() ? "w" : std::to_string(value_);
}

NkValue operator+(NkValue a, NkValue b) {
  return NkValue(a.k_, std::uint64_t{a.value_} + b.value_);
}

NkValue operator*(NkValue a, NkValue b) {
  // w lifts to k, so 0 * w = 0 and anything else saturates.
  return NkValue(a.k_, std::uint64_t{a.value_} * b.value_);
}

CountVector::CountVector(std::uint32_t k, std::vector<std::uint32_t> raw)
    : k_(k), raw_(std::move(raw)) {
  for (auto& x : raw_) x = std::min(x, k_);
}

std::string CountVector::render() const {
  std::string out;
  for (std::size_t q = 0; q < raw_.size(); ++q) {
    if (q) out.push_back('.');
    out += (*this)[static_cast<StateId>(q)].render();
  }
  return out;
}

std::vector<std::uint64_t> smtrans_count(const Machine& m,
                                         const TransitionOrder& order,
                                         TransId e) {
  std::vector<std::uint64_t> counts(m.num_states(), 0);
  const auto& te = m.transitions[e];
  for (TransId f : order.sorted_class(m, te.origin, te.label)) {
    if (f == e) break;
    counts[m.transitions[f].end] += 1;
  }
  return counts;
}

std::uint64_t multi_skim_state_bound(std::size_t n, std::uint32_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t bound = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (bound > kMax / (std::uint64_t{k} + 1)) return kMax;
    bound *= std::uint64_t{k} + 1;
  }
  return bound;
}

SkimResult multi_skim(const Machine& source, const TransitionOrder& order,
                      std::uint32_t k, std::size_t cap) {
  if (k == 0) throw InvalidArgument("multi-skimming needs k >= 1");
  if (source.is_transducer())
    throw InvalidArgument("multi-skim an automaton or N-automaton");
  if (!source.is_characteristic())
    throw InvalidArgument("multi-skim needs a characteristic N-automaton");
  if (order.num_transitions() != source.num_transitions())
    throw InvalidArgument("order belongs to another machine");

  const std::size_t n = source.num_states();
  const Adjacency adj(source);

  SkimResult r;
  r.k = k;
  r.covering = make_machine(source.kind, source.name + "_skim", source.alphabet);

  std::map<std::pair<StateId, std::vector<std::uint32_t>>, StateId> ids;
  std::deque<StateId> work;
  auto intern = [&](StateId base, CountVector v) {
    auto key = std::make_pair(base, v.raw());
    if (auto it = ids.find(key); it != ids.end()) return it->second;
    if (r.states.size() >= cap)
      throw CapOverflow("multi-skim state cap " + std::to_string(cap) +
                        " exceeded (bound n(k+1)^n = " +
                        std::to_string(multi_skim_state_bound(n, k)) + ")");
    const StateId id = r.covering.add_state(
        source.state_names[base] + "__" + v.render(), source.is_final(base));
    r.projection.state_map.push_back(base);
    r.states.push_back({base, std::move(v)});
    ids.emplace(std::move(key), id);
    work.push_back(id);
    return id;
  };

  // Hidden initial state: the j-th initial sees one smaller computation
  // ending in each earlier initial.
  CountVector start(k, n);
  for (StateId i : order.initial_order()) {
    r.covering.initials.push_back(intern(i, start));
    start.set(i, start[i] + NkValue(k, 1));
  }

  while (!work.empty()) {
    const StateId x = work.front();
    work.pop_front();
    const StateId p = r.states[x].base;
    for (TransId e : adj.out(p)) {
      const auto& te = source.transitions[e];
      // v . a-mu + e#, in N_k.
      const CountVector& v = r.states[x].vector;
      std::vector<std::uint64_t> next = smtrans_count(source, order, e);
      for (const auto& t : source.transitions) {
        if (t.label != te.label) continue;
        next[t.end] += std::uint64_t{v.raw()[t.origin]} * t.multiplicity;
      }
      std::vector<std::uint32_t> raw(n);
      for (std::size_t q = 0; q < n; ++q)
        raw[q] = static_cast<std::uint32_t>(std::min<std::uint64_t>(next[q], k));
      const StateId y = intern(te.end, CountVector(k, std::move(raw)));
      r.covering.add_transition({x, te.label, y, {}, 1});
      r.projection.trans_map.push_back(e);
    }
  }
  return r;
}

SkimLayers skim_layers(const SkimResult& skim, const Machine& source) {
  const std::uint32_t k = skim.k;
  auto completion = std::make_shared<Completion>();
  completion->covering = skim.covering;
  completion->to_target = skim.projection;
  const Morphism id = identity_morphism(skim.covering);
  completion->state_embed = id.state_map;
  completion->trans_embed = id.trans_map;

  auto make_layer = [&](const std::string& suffix) {
    SkimLayer layer;
    layer.machine = skim.covering;
    layer.machine.name = source.name + suffix;
    layer.immersion = skim.projection;
    layer.immersion.completion = completion;
    std::fill(layer.machine.finals.begin(), layer.machine.finals.end(), false);
    return layer;
  };

  SkimLayers out;
  for (std::uint32_t i = 0; i < k; ++i)
    out.layers.push_back(make_layer("_layer" + std::to_string(i)));
  out.remainder = make_layer("_rest");

  for (StateId x = 0; x < skim.covering.num_states(); ++x) {
    const auto& st = skim.states[x];
    if (!source.is_final(st.base)) continue;
    NkValue sum(k, 0);
    for (StateId q = 0; q < source.num_states(); ++q) {
      if (source.is_final(q)) sum = sum + st.vector[q];
    }
    auto& target = sum.is_omega() ? out.remainder : out.layers[sum.raw()];
    target.machine.finals[x] = true;
  }
  return out;
}

}  // namespace lexcover
