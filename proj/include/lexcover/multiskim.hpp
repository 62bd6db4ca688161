#pragma once

// Multi-skimming covering of an N-automaton over the quotient semiring
// N_k = {0, ..., k-1, w}: every state (p, v) records, per base state q,
// how many strictly smaller computations with the same label end in q,
// saturated at w. Keeping as final only the states whose final coordinates
// sum to i yields an unambiguous layer; the sum w yields the remainder.

#include <cstdint>
#include <string>
#include <vector>

#include "lexcover/core.hpp"
#include "lexcover/lexorder.hpp"

namespace lexcover {

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

// An element of N_k. The raw value k stands for w.
class NkValue {
 public:
  NkValue(std::uint32_t k, std::uint64_t n);
  static NkValue omega(std::uint32_t k) { return NkValue(k, k); }

  std::uint32_t k() const { return k_; }
  std::uint32_t raw() const { return value_; }
  bool is_omega() const { return value_ == k_; }
  std::string render() const;

  friend NkValue operator+(NkValue a, NkValue b);
  friend NkValue operator*(NkValue a, NkValue b);
  friend bool operator==(const NkValue&, const NkValue&) = default;

 private:
  std::uint32_t k_;
  std::uint32_t value_;
};

// State-indexed N_k values, stored raw (k = w).
class CountVector {
 public:
  CountVector(std::uint32_t k, std::size_t dim) : k_(k), raw_(dim, 0) {}
  CountVector(std::uint32_t k, std::vector<std::uint32_t> raw);

  std::uint32_t k() const { return k_; }
  std::size_t dim() const { return raw_.size(); }
  NkValue operator[](StateId q) const { return NkValue(k_, raw_[q]); }
  void set(StateId q, NkValue v) { raw_[q] = v.raw(); }
  const std::vector<std::uint32_t>& raw() const { return raw_; }

  // `1.0.w`: entries in state order, w for omega.
  std::string render() const;

  friend bool operator==(const CountVector&, const CountVector&) = default;
  friend auto operator<=>(const CountVector& a, const CountVector& b) {
    return a.raw_ <=> b.raw_;
  }

 private:
  std::uint32_t k_;
  std::vector<std::uint32_t> raw_;
};

struct SkimState {
  StateId base;
  CountVector vector;
};

// (e#)_r: number of transitions f < e of e's class that end in r.
std::vector<std::uint64_t> smtrans_count(const Machine& m,
                                         const TransitionOrder& order,
                                         TransId e);

struct SkimResult {
  std::uint32_t k = 1;
  Machine covering;
  Morphism projection;  // covering -> source, a covering morphism
  std::vector<SkimState> states;
};

// Reachable part of the N_k quotient. `source` must be characteristic
// (split it first); classical automata are taken as they are.
SkimResult multi_skim(const Machine& source, const TransitionOrder& order,
                      std::uint32_t k, std::size_t cap = kDefaultStateCap);

struct SkimLayer {
  Machine machine;
  Morphism immersion;  // -> source, with the covering as completion
};

struct SkimLayers {
  std::vector<SkimLayer> layers;  // layers[i] accepts {u : s(u) > i}
  SkimLayer remainder;            // behaviour s minus k
};

// Only final statuses change; states and transitions are those of the
// covering.
SkimLayers skim_layers(const SkimResult& skim, const Machine& source);

// n (k+1)^n, saturated at UINT64_MAX.
std::uint64_t multi_skim_state_bound(std::size_t n, std::uint32_t k);

}  // namespace lexcover
