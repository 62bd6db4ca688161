#include "lexcover/lagsep.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "lexcover/errors.hpp"
#include "lexcover/oracle.hpp"

namespace lexcover {
namespace {

std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    throw InvalidArgument("parameter overflows 64 bits");
  return a * b;
}

std::size_t max_output_length(const Machine& t) {
  std::size_t L = 0;
  for (const auto& tr : t.transitions) L = std::max(L, tr.output.size());
  return L;
}

// rho_N(inv(x) w y); nullopt when dropped.
std::optional<DeltaElem> bounded_action(const DeltaElem& w, const Word& x,
                                        const Word& y, std::size_t N) {
  FreeGroupWord g = FreeGroupWord::inverse_of(x);
  g *= w.to_free_group();
  g *= FreeGroupWord::plain(y);
  return rho(g, N);
}

}  // namespace

std::size_t default_N(const Machine& transducer, std::size_t k) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  std::size_t N = max_output_length(transducer);
  for (std::size_t i = 0; i <= k; ++i)
    N = checked_mul(N, transducer.num_states());
  return N;
}

SeparationParams separation_params(const Machine& transducer, std::size_t N,
                                   std::optional<std::size_t> k) {
  return {N, transducer.num_states(), max_output_length(transducer),
          transducer.out_alphabet.size(), k};
}

std::optional<std::uint64_t> useful_state_bound(const SeparationParams& p) {
  if (!p.k) return std::nullopt;
  std::uint64_t exponent = 2;
  for (std::uint64_t f : {std::uint64_t{p.h}, std::uint64_t{p.N},
                          std::uint64_t{*p.k}, std::uint64_t{*p.k},
                          std::uint64_t{p.n}}) {
    if (f == 0) return std::nullopt;
    if (exponent >= 64 || f >= 64) return std::nullopt;
    exponent *= f;
  }
  if (exponent >= 64) return std::nullopt;
  return std::uint64_t{1} << exponent;
}

LDVector smtrans_delta(const Machine& transducer, const TransitionOrder& order,
                       TransId e, std::size_t N) {
  LDVector v(transducer.num_states());
  const auto& te = transducer.transitions[e];
  for (TransId f : order.sorted_class(transducer, te.origin, te.label)) {
    if (f == e) break;
    const auto& tf = transducer.transitions[f];
    if (auto d = bounded_action(DeltaElem(), te.output, tf.output, N))
      v[tf.end].insert(std::move(*d));
  }
  return v;
}

LagSepResult lag_sep_covering(const Machine& transducer, std::size_t N,
                              const TransitionOrder& order, std::size_t cap) {
  if (!transducer.is_transducer())
    throw InvalidArgument("lag separation needs a transducer");
  if (order.num_transitions() != transducer.num_transitions())
    throw InvalidArgument("order belongs to another machine");
  for (const auto& t : transducer.transitions) {
    if (t.label == kNoLetter)
      throw InvalidArgument("lag separation needs a real-time transducer");
  }

  const std::size_t n = transducer.num_states();
  const Adjacency adj(transducer);

  LagSepResult r;
  r.N = N;
  r.covering = make_machine(MachineKind::Transducer, transducer.name + "_lsc",
                            transducer.alphabet, transducer.out_alphabet);

  std::map<std::pair<StateId, LDVector>, StateId> ids;
  std::deque<StateId> work;
  auto intern = [&](StateId base, LDVector v) {
    auto key = std::make_pair(base, v);
    if (auto it = ids.find(key); it != ids.end()) return it->second;
    if (r.states.size() >= cap)
      throw CapOverflow("lag-separation state cap " + std::to_string(cap) +
                        " exceeded (useful states are bounded by "
                        "2^(2hNk^2n))");
    const StateId id = r.covering.add_state(
        transducer.state_names[base] + "__" +
            render(v, transducer.state_names),
        transducer.is_final(base));
    r.projection.state_map.push_back(base);
    r.states.push_back({base, std::move(v)});
    ids.emplace(std::move(key), id);
    work.push_back(id);
    return id;
  };

  // Hidden initial transitions output epsilon: each earlier initial
  // contributes epsilon to its coordinate.
  LDVector start(n);
  for (StateId i : order.initial_order()) {
    r.covering.initials.push_back(intern(i, start));
    start[i].insert(DeltaElem());
  }

  while (!work.empty()) {
    const StateId x = work.front();
    work.pop_front();
    const StateId p = r.states[x].base;
    for (TransId e : adj.out(p)) {
      const auto& te = transducer.transitions[e];
      LDVector next = smtrans_delta(transducer, order, e, N);
      const LDVector& v = r.states[x].vector;
      for (const auto& tf : transducer.transitions) {
        if (tf.label != te.label) continue;
        for (const auto& w : v[tf.origin]) {
          if (auto d = bounded_action(w, te.output, tf.output, N))
            next[tf.end].insert(std::move(*d));
        }
      }
      const StateId y = intern(te.end, std::move(next));
      r.covering.add_transition({x, te.label, y, te.output, 1});
      r.projection.trans_map.push_back(e);
    }
  }
  return r;
}

Selection select_psi(const LagSepResult& lsc, const Machine& transducer) {
  Selection s;
  s.transducer = lsc.covering;
  s.transducer.name = transducer.name + "_psi";
  s.immersion = lsc.projection;
  auto completion = std::make_shared<Completion>();
  completion->covering = lsc.covering;
  completion->to_target = lsc.projection;
  const Morphism id = identity_morphism(lsc.covering);
  completion->state_embed = id.state_map;
  completion->trans_embed = id.trans_map;
  s.immersion.completion = std::move(completion);

  for (StateId x = 0; x < lsc.covering.num_states(); ++x) {
    const auto& v = lsc.states[x].vector;
    for (StateId t = 0; t < transducer.num_states(); ++t) {
      if (transducer.is_final(t) && v[t].count(DeltaElem())) {
        s.transducer.finals[x] = false;
        break;
      }
    }
  }
  return s;
}

bool ambiguity_certificate(const Machine& transducer, std::size_t k,
                           std::size_t max_len) {
  return oracle::ambiguity_up_to(transducer, max_len).value <= k;
}

}  // namespace lexcover
