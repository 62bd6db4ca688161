#pragma once

// Lag separation covering of a real-time transducer. A state (p, v) stores,
// per base state q, the Lead or Delay of the current computation against
// every smaller same-input computation ending in q whose lag stays within
// N. Removing finality wherever some final coordinate holds epsilon keeps,
// for each (input, output) pair, only computations that no smaller
// computation within lag N already realizes.

#include <cstdint>
#include <optional>
#include <vector>

#include "lexcover/core.hpp"
#include "lexcover/freegroup.hpp"
#include "lexcover/lexorder.hpp"
#include "lexcover/multiskim.hpp"

namespace lexcover {

struct SeparationParams {
  std::size_t N = 0;
  std::size_t n = 0;  // states of the transducer
  std::size_t L = 0;  // longest transition output
  std::size_t h = 0;  // output alphabet size
  std::optional<std::size_t> k;
};

// L * n^(k+1). Throws InvalidArgument if it does not fit in 64 bits.
std::size_t default_N(const Machine& transducer, std::size_t k);

SeparationParams separation_params(const Machine& transducer, std::size_t N,
                                   std::optional<std::size_t> k = {});

// 2^(2hNk^2n), when every factor is positive and the exponent is below 64.
std::optional<std::uint64_t> useful_state_bound(const SeparationParams& p);

// (e#)_r = { rho_N(inv(x) y) : f < e, f: p -a|y-> r } for e: p -a|x-> q.
LDVector smtrans_delta(const Machine& transducer, const TransitionOrder& order,
                       TransId e, std::size_t N);

struct LagSepState {
  StateId base;
  LDVector vector;
};

struct LagSepResult {
  std::size_t N = 0;
  Machine covering;
  Morphism projection;  // covering -> transducer, a covering morphism
  std::vector<LagSepState> states;
};

LagSepResult lag_sep_covering(const Machine& transducer, std::size_t N,
                              const TransitionOrder& order,
                              std::size_t cap = kDefaultStateCap);

struct Selection {
  Machine transducer;
  Morphism immersion;  // -> source transducer, completion = the covering
};

// Unsets finality of (p, v) when some final t has epsilon in v_t.
Selection select_psi(const LagSepResult& lsc, const Machine& transducer);

// No input of length <= max_len has more than k successful computations.
bool ambiguity_certificate(const Machine& transducer, std::size_t k,
                           std::size_t max_len);

}  // namespace lexcover
