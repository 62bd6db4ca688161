#include "lexcover/lexorder.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "lexcover/errors.hpp"

namespace lexcover {
namespace {

using ClassKey = std::pair<StateId, Letter>;

std::map<ClassKey, std::vector<TransId>> classes_in_id_order(const Machine& m) {
  std::map<ClassKey, std::vector<TransId>> classes;
  for (TransId e = 0; e < m.num_transitions(); ++e) {
    const auto& t = m.transitions[e];
    classes[{t.origin, t.label}].push_back(e);
  }
  return classes;
}

}  // namespace

TransitionOrder::TransitionOrder(const Machine& m,
                                 std::vector<std::uint32_t> rank,
                                 std::vector<StateId> initial_order)
    : rank_(std::move(rank)),
      initial_order_(std::move(initial_order)),
      initial_rank_(m.num_states(), npos),
      by_origin_(m.num_states()) {
  if (rank_.size() != m.num_transitions())
    throw InvalidArgument("order does not rank every transition");
  for (std::size_t i = 0; i < initial_order_.size(); ++i) {
    const StateId s = initial_order_[i];
    if (s >= m.num_states() || !m.is_initial(s) || initial_rank_[s] != npos)
      throw InvalidArgument("initial order is not a permutation of I");
    initial_rank_[s] = i;
  }
  if (initial_order_.size() != m.initials.size())
    throw InvalidArgument("initial order is not a permutation of I");
  for (auto& [key, members] : classes_in_id_order(m)) {
    std::vector<bool> used(members.size(), false);
    for (TransId e : members) {
      if (rank_[e] >= members.size() || used[rank_[e]])
        throw InvalidArgument("ranks inside a class are not a permutation");
      used[rank_[e]] = true;
    }
    std::sort(members.begin(), members.end(),
              [&](TransId a, TransId b) { return rank_[a] < rank_[b]; });
    auto& out = by_origin_[key.first];
    out.insert(out.end(), members.begin(), members.end());
  }
}

std::size_t TransitionOrder::initial_rank(StateId s) const {
  return s < initial_rank_.size() ? initial_rank_[s] : npos;
}

bool TransitionOrder::precedes(const Machine& m, TransId e, TransId f) const {
  const auto& te = m.transitions[e];
  const auto& tf = m.transitions[f];
  return te.origin == tf.origin && te.label == tf.label && rank_[e] < rank_[f];
}

std::vector<TransId> TransitionOrder::sorted_class(const Machine& m,
                                                   StateId origin,
                                                   Letter label) const {
  std::vector<TransId> out;
  for (TransId e : by_origin_[origin]) {
    if (m.transitions[e].label == label) out.push_back(e);
  }
  return out;
}

TransitionOrder default_order(const Machine& m) {
  std::vector<std::uint32_t> rank(m.num_transitions());
  for (const auto& [key, members] : classes_in_id_order(m)) {
    for (std::size_t i = 0; i < members.size(); ++i)
      rank[members[i]] = static_cast<std::uint32_t>(i);
  }
  return TransitionOrder(m, std::move(rank), m.initials);
}

TransitionOrder reverse_order(const Machine& m) {
  std::vector<std::uint32_t> rank(m.num_transitions());
  for (const auto& [key, members] : classes_in_id_order(m)) {
    for (std::size_t i = 0; i < members.size(); ++i)
      rank[members[i]] = static_cast<std::uint32_t>(members.size() - 1 - i);
  }
  return TransitionOrder(m, std::move(rank), m.initials);
}

TransitionOrder permutation_order(const Machine& m,
                                  const std::vector<TransId>& ids) {
  if (ids.size() != m.num_transitions())
    throw InvalidArgument("permutation must list every transition once");
  std::vector<bool> seen(m.num_transitions(), false);
  for (TransId e : ids) {
    if (e >= m.num_transitions() || seen[e])
      throw InvalidArgument("permutation must list every transition once");
    seen[e] = true;
  }
  std::map<ClassKey, std::uint32_t> next;
  std::vector<std::uint32_t> rank(m.num_transitions());
  for (TransId e : ids) {
    const auto& t = m.transitions[e];
    rank[e] = next[{t.origin, t.label}]++;
  }
  return TransitionOrder(m, std::move(rank), m.initials);
}

TransitionOrder parse_order(const Machine& m, std::string_view spec) {
  if (spec.empty() || spec == "file") return default_order(m);
  if (spec == "reverse") return reverse_order(m);
  constexpr std::string_view kPerm = "perm:";
  if (spec.substr(0, kPerm.size()) != kPerm)
    throw InvalidArgument("order must be file, reverse or perm:<ids>");
  spec.remove_prefix(kPerm.size());
  std::vector<TransId> ids;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const auto tok = spec.substr(0, comma);
    TransId e = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), e);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InvalidArgument("bad transition id '" + std::string(tok) + "'");
    ids.push_back(e);
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  return permutation_order(m, ids);
}

LexResult lex_compare(const Machine& m, const TransitionOrder& order,
                      const Computation& c, const Computation& d) {
  if (!is_chained(m, c) || !is_chained(m, d))
    throw InvalidArgument("computation is not well chained");
  if (c.length() != d.length() || input_label(m, c) != input_label(m, d))
    return LexResult::Incomparable;
  if (c.origin != d.origin) {
    const auto rc = order.initial_rank(c.origin);
    const auto rd = order.initial_rank(d.origin);
    if (rc == TransitionOrder::npos || rd == TransitionOrder::npos)
      return LexResult::Incomparable;
    return rc < rd ? LexResult::Less : LexResult::Greater;
  }
  for (std::size_t i = 0; i < c.length(); ++i) {
    const TransId e = c.transitions[i];
    const TransId f = d.transitions[i];
    if (e == f) continue;
    // Same prefix, same label: e and f share origin and label.
    return order.rank(e) < order.rank(f) ? LexResult::Less : LexResult::Greater;
  }
  return LexResult::Equal;
}

}  // namespace lexcover
