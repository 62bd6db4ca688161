#include "lexcover/oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "lexcover/errors.hpp"

namespace lexcover::oracle {
namespace {

void dfs(const Machine& m, const TransitionOrder& order, const Word& u,
         std::size_t cap, Computation& current, StateId at,
         std::vector<Computation>& out) {
  const std::size_t depth = current.transitions.size();
  if (depth == u.size()) {
    if (out.size() >= cap)
      throw CapOverflow("enumeration exceeded the computation cap of " +
                        std::to_string(cap));
    out.push_back(current);
    return;
  }
  for (TransId e : order.sorted_class(m, at, u[depth])) {
    current.transitions.push_back(e);
    dfs(m, order, u, cap, current, m.transitions[e].end, out);
    current.transitions.pop_back();
  }
}

}  // namespace

std::vector<Computation> enumerate_from(const Machine& m, StateId origin,
                                        const Word& u,
                                        const TransitionOrder& order,
                                        std::size_t cap) {
  std::vector<Computation> out;
  Computation current{origin, {}};
  dfs(m, order, u, cap, current, origin, out);
  return out;
}

std::vector<Computation> enumerate_all(const Machine& m, const Word& u,
                                       const TransitionOrder& order,
                                       std::size_t cap) {
  std::vector<Computation> out;
  for (StateId i : order.initial_order()) {
    Computation current{i, {}};
    dfs(m, order, u, cap, current, i, out);
  }
  return out;
}

std::vector<Computation> enumerate_successful(const Machine& m, const Word& u,
                                              const TransitionOrder& order,
                                              std::size_t cap) {
  auto all = enumerate_all(m, u, order, cap);
  std::erase_if(all, [&](const Computation& c) {
    return !m.is_final(computation_end(m, c));
  });
  return all;
}

namespace {

// Row vector lambda . u-mu, multiplicities optionally ignored.
std::vector<std::uint64_t> reach_counts(const Machine& m, const Word& u,
                                        bool use_multiplicity) {
  std::vector<std::uint64_t> v(m.num_states(), 0);
  for (StateId i : m.initials) v[i] = 1;
  for (Letter a : u) {
    std::vector<std::uint64_t> next(m.num_states(), 0);
    for (const auto& t : m.transitions) {
      if (t.label != a || v[t.origin] == 0) continue;
      next[t.end] += v[t.origin] * (use_multiplicity ? t.multiplicity : 1);
    }
    v = std::move(next);
  }
  return v;
}

std::uint64_t final_sum(const Machine& m, const std::vector<std::uint64_t>& v) {
  std::uint64_t s = 0;
  for (StateId q = 0; q < m.num_states(); ++q) {
    if (m.is_final(q)) s += v[q];
  }
  return s;
}

}  // namespace

std::uint64_t eval_series(const Machine& m, const Word& u) {
  return final_sum(m, reach_counts(m, u, true));
}

std::uint64_t count_successful(const Machine& m, const Word& u) {
  return final_sum(m, reach_counts(m, u, false));
}

bool accepts(const Machine& m, const Word& u) {
  return count_successful(m, u) > 0;
}

std::set<Word> eval_relation(const Machine& transducer, const Word& u) {
  std::set<std::pair<StateId, Word>> frontier;
  for (StateId i : transducer.initials) frontier.emplace(i, Word{});
  for (Letter a : u) {
    std::set<std::pair<StateId, Word>> next;
    for (const auto& [p, x] : frontier) {
      for (const auto& t : transducer.transitions) {
        if (t.origin == p && t.label == a) next.emplace(t.end, x + t.output);
      }
    }
    frontier = std::move(next);
  }
  std::set<Word> image;
  for (const auto& [q, x] : frontier) {
    if (transducer.is_final(q)) image.insert(x);
  }
  return image;
}

std::uint64_t skim_value(const Machine& m, std::uint64_t k, const Word& u) {
  const auto s = eval_series(m, u);
  return s > k ? s - k : 0;
}

std::vector<Word> words_up_to(const std::string& alphabet,
                              std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (alphabet.empty() && len > 0) break;
    const auto n = detail::count_words(alphabet.size(), len);
    for (std::uint64_t i = 0; i < n; ++i)
      out.push_back(detail::word_at(alphabet, len, i));
  }
  return out;
}

WordMax valuedness_up_to(const Machine& transducer, std::size_t max_len,
                         Execution exec) {
  return sweep_max(
      transducer.alphabet, max_len,
      [&](const Word& u) {
        return static_cast<std::uint64_t>(eval_relation(transducer, u).size());
      },
      exec);
}

WordMax ambiguity_up_to(const Machine& m, std::size_t max_len,
                        Execution exec) {
  return sweep_max(
      m.alphabet, max_len,
      [&](const Word& u) { return count_successful(m, u); }, exec);
}

namespace {

bool same_behaviour(const Machine& a, const Machine& b, const Word& u) {
  if (a.is_transducer() || b.is_transducer())
    return eval_relation(a, u) == eval_relation(b, u);
  if (a.kind == MachineKind::NAutomaton || b.kind == MachineKind::NAutomaton)
    return eval_series(a, u) == eval_series(b, u);
  return accepts(a, u) == accepts(b, u);
}

std::string merged_alphabet(const std::string& a, const std::string& b) {
  std::string out = a;
  for (Letter c : b) {
    if (out.find(c) == std::string::npos) out.push_back(c);
  }
  return out;
}

}  // namespace

Equivalence equivalent_up_to(const Machine& a, const Machine& b,
                             std::size_t max_len, Execution exec) {
  if (a.is_transducer() != b.is_transducer())
    throw InvalidArgument("cannot compare a transducer with an automaton");
  Equivalence r;
  r.counterexample = sweep_first_failure(
      merged_alphabet(a.alphabet, b.alphabet), max_len,
      [&](const Word& u) { return same_behaviour(a, b, u); }, exec);
  r.equivalent = !r.counterexample.has_value();
  return r;
}

std::set<Word> eval_union(const std::vector<Machine>& transducers,
                          const Word& u) {
  std::set<Word> out;
  for (const auto& t : transducers) out.merge(eval_relation(t, u));
  return out;
}

Equivalence union_equivalent_up_to(const std::vector<Machine>& parts,
                                   const Machine& whole, std::size_t max_len,
                                   Execution exec) {
  std::string alphabet = whole.alphabet;
  for (const auto& p : parts) alphabet = merged_alphabet(alphabet, p.alphabet);
  Equivalence r;
  r.counterexample = sweep_first_failure(
      alphabet, max_len,
      [&](const Word& u) {
        return eval_union(parts, u) == eval_relation(whole, u);
      },
      exec);
  r.equivalent = !r.counterexample.has_value();
  return r;
}

}  // namespace lexcover::oracle
