// One PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "frozen.hpp"
#include "lexcover/cli.hpp"
#include "lexcover/decompose.hpp"
#include "lexcover/errors.hpp"
#include "lexcover/lagsep.hpp"
#include "lexcover/multiskim.hpp"
#include "lexcover/oracle.hpp"
#include "vector_oracles.hpp"

using namespace lexcover;
using namespace lexcover::testkit;
namespace fs = std::filesystem;

namespace {

// Returns an empty string on success, else the first failure.
using Check = std::function<std::string()>;

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0: no time bound
  Check check;
};

Machine counter() { return split_multiplicities(c1()).machine; }

TransitionOrder swapped_order(const Machine& m) {
  return parse_order(m, "perm:0,2,1,3,4,5,6");
}

std::string binary_series() {
  const Machine m = c1();
  for (const auto& u : oracle::words_up_to("ab", 10))
    if (oracle::eval_series(m, u) != binary_value(u))
      return "series differs on " + render_word(u);
  return {};
}

std::string skim_fixtures() {
  const Machine m = counter();
  const auto a = multi_skim(m, default_order(m), 3);
  if (sorted(a.covering.state_names) != sorted(kSkimFileOrderStates))
    return "file order: unexpected states";
  if (edge_lines(a.covering) != skim_file_order_edges())
    return "file order: unexpected transitions";
  const auto b = multi_skim(m, swapped_order(m), 3);
  if (sorted(b.covering.state_names) != sorted(kSkimSwappedOrderStates))
    return "swapped order: unexpected states";
  if (edge_lines(b.covering) != skim_swapped_order_edges())
    return "swapped order: unexpected transitions";
  return {};
}

std::string skim_layers_behaviour() {
  const Machine m = counter();
  const auto skim = multi_skim(m, default_order(m), 3);
  const auto layers = skim_layers(skim, m);
  if (layers.layers.size() != 3) return "expected three layers";
  for (const auto& u : oracle::words_up_to("ab", 10)) {
    const auto v = binary_value(u);
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& layer = layers.layers[i].machine;
      const auto n = oracle::count_successful(layer, u);
      if (n > 1) return "layer " + std::to_string(i) + " ambiguous on " + u;
      if ((n == 1) != (v > i))
        return "layer " + std::to_string(i) + " wrong on " + render_word(u);
    }
    if (oracle::count_successful(layers.remainder.machine, u) !=
        (v > 3 ? v - 3 : 0))
      return "remainder wrong on " + render_word(u);
  }
  return {};
}

std::string skim_size_bound() {
  std::mt19937_64 rng(20240401);
  for (int i = 0; i < 200; ++i) {
    RandomShape shape;
    shape.max_states = 4;
    shape.alphabet = (i % 2) ? "ab" : "a";
    shape.max_multiplicity = 3;
    const Machine m = split_multiplicities(random_nautomaton(rng, shape)).machine;
    const auto k = static_cast<std::uint32_t>(1 + i % 4);
    const auto skim = multi_skim(m, default_order(m), k);
    if (skim.covering.num_states() > multi_skim_state_bound(m.num_states(), k))
      return "machine " + std::to_string(i) + " exceeds n(k+1)^n";
  }
  return {};
}

std::string lagsep_fixture() {
  const Machine t = t2();
  const auto lsc = lag_sep_covering(t, 1, default_order(t));
  if (lsc.covering.state_names !=
      std::vector<std::string>{kLagR, kLagS, kLagT, kLagU})
    return "unexpected states";
  if (edge_lines(lsc.covering) != lagsep_edges()) return "unexpected transitions";
  const Machine v = trim(select_psi(lsc, t).transducer).machine;
  if (v.state_names != std::vector<std::string>{kLagR, kLagS})
    return "selection does not trim to two states";
  if (!ambiguity_certificate(v, 2, 12)) return "selection not 2-ambiguous";
  const auto eq = oracle::equivalent_up_to(t, v, 12);
  if (!eq.equivalent) return "selection differs on " + render_word(*eq.counterexample);
  return {};
}

std::string decomposition() {
  DecompositionOptions o;
  o.N = 1;
  o.check_length = 12;
  const auto r = decompose_k_valued(t2(), 2, o);
  if (r.components.size() != 2) return "expected two components";
  if (!r.verdicts.all()) return "verdicts failed";
  for (std::size_t n = 0; n <= 12; ++n) {
    const Word u(n, 'a');
    const std::set<Word> first{std::string(n, 'b')};
    const std::set<Word> second =
        n ? std::set<Word>{std::string(n + 1, 'b')} : std::set<Word>{};
    if (oracle::eval_relation(r.components[0].transducer, u) != first)
      return "component 0 wrong on a^" + std::to_string(n);
    if (oracle::eval_relation(r.components[1].transducer, u) != second)
      return "component 1 wrong on a^" + std::to_string(n);
    for (const auto& c : r.components)
      if (oracle::count_successful(c.transducer, u) > 1)
        return "ambiguous component on a^" + std::to_string(n);
  }
  return {};
}

std::string vector_semantics() {
  std::mt19937_64 rng(99);
  RandomShape shape;
  for (int i = 0; i < 100; ++i) {
    const Machine m = split_multiplicities(random_nautomaton(rng, shape)).machine;
    const auto k = static_cast<std::uint32_t>(1 + i % 3);
    const auto order = default_order(m);
    if (auto bad = check_skim_vectors(m, order, multi_skim(m, order, k), 5))
      return "count vectors, machine " + std::to_string(i) + ": " + *bad;
  }
  for (int i = 0; i < 100; ++i) {
    const Machine t = random_transducer(rng, shape);
    // Coverings grow quickly with N; 3 already reaches millions of states.
    const std::size_t N = i % 3;
    const auto order = default_order(t);
    const auto lsc = lag_sep_covering(t, N, order, 200'000);
    if (auto bad = check_lagsep_vectors(t, order, lsc, 5))
      return "lead/delay vectors, transducer " + std::to_string(i) + ": " + *bad;
  }
  return {};
}

std::string close_pair_in_power() {
  const Machine t = t2();
  const std::size_t bound = default_N(t, 2);
  const auto power = cartesian_power(t, 3);
  const auto order = default_order(power.automaton);
  for (const auto& u : oracle::words_up_to("a", 6)) {
    for (const auto& c : oracle::enumerate_successful(power.automaton, u, order)) {
      const auto parts = power.project(c);
      bool found = false;
      for (std::size_t i = 0; i < 3 && !found; ++i)
        for (std::size_t j = i + 1; j < 3 && !found; ++j) {
          const auto xs = output_sequence(t, parts[i]);
          const auto ys = output_sequence(t, parts[j]);
          if (!ld_action(DeltaElem{}, output_label(t, parts[i]),
                         output_label(t, parts[j]))
                   .is_epsilon())
            continue;
          found = lag(xs, ys) < bound;
        }
      if (!found) return "no close pair on " + render_word(u);
    }
  }
  return {};
}

std::string morphic() {
  MorphicOptions o;
  o.decomposition.check_length = 8;
  const Machine s = s2();
  const auto r = morphic_decompose(s, theta(), 2, o);
  if (r.components.size() != 2) return "expected two transducers";
  for (const auto& c : r.components) {
    const Machine composed = apply_output_morphism(c, theta()).transducer;
    if (oracle::valuedness_up_to(composed, 8).value > 1)
      return c.name + " composed with theta is not functional";
  }
  const auto eq = oracle::union_equivalent_up_to(r.components, s, 8);
  if (!eq.equivalent) return "union differs on " + render_word(*eq.counterexample);
  return {};
}

std::string same_counts(const Machine& source, const Machine& covering,
                        const std::string& what) {
  for (const auto& u : oracle::words_up_to(source.alphabet, 8))
    if (oracle::count_successful(source, u) != oracle::count_successful(covering, u))
      return what + " differs on " + render_word(u);
  return {};
}

std::string covering_counts() {
  const Machine m = counter();
  if (auto e = same_counts(m, multi_skim(m, default_order(m), 3).covering,
                           "file-order skim");
      !e.empty())
    return e;
  if (auto e = same_counts(m, multi_skim(m, swapped_order(m), 3).covering,
                           "swapped-order skim");
      !e.empty())
    return e;
  const Machine t = t2();
  return same_counts(t, lag_sep_covering(t, 1, default_order(t)).covering,
                     "lag separation");
}

std::string snapshot(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::string all;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    all += fs::relative(f, dir).string() + "\n" + ss.str();
  }
  return all;
}

std::string run_pipelines(const fs::path& dir) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::vector<std::vector<std::string>> commands = {
      {"skim", "--k", "3", fixture_path("c1.naut"), "--emit-layers",
       (dir / "skim_file").string()},
      {"skim", "--k", "3", "--order", "perm:0,2,1,3,4,5,6",
       fixture_path("c1.naut"), "--emit-layers", (dir / "skim_swap").string()},
      {"lagsep", "--n", "1", fixture_path("t.trans"), "--out",
       (dir / "lsc.trans").string()},
      {"lagsep", "--n", "1", fixture_path("t.trans"), "--select-psi", "--trim",
       "--out", (dir / "psi.trans").string()},
      {"decompose", "--k", "2", "--n", "1", fixture_path("t.trans"), "--out",
       (dir / "decomp").string()},
  };
  for (auto args : commands) {
    args.insert(args.begin(), "lexcover");
    std::ostringstream out, err;
    if (cli::run(args, out, err) != cli::kOk)
      throw std::runtime_error(args[1] + " failed: " + err.str());
  }
  return snapshot(dir);
}

std::string determinism() {
  const fs::path root = fs::temp_directory_path() / "lexcover_acceptance";
  const std::string first = run_pipelines(root / "run1");
  const std::string second = run_pipelines(root / "run2");
  const std::string third = run_pipelines(root / "run3");
  if (first.empty()) return "no output files";
  if (first != second || first != third) return "outputs differ between runs";
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments select criteria by id.
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const std::vector<Criterion> criteria = {
      {1, "counter series equals binary value, |u| <= 10", 1, binary_series},
      {2, "skim coverings of the counter match hand-derived fixtures", 1,
       skim_fixtures},
      {3, "skim layers unambiguous with supports s > i; remainder s - 3", 5,
       skim_layers_behaviour},
      {4, "skim state count <= n(k+1)^n on 200 random N-automata", 30,
       skim_size_bound},
      {5, "lag separation at N = 1: four states, selection trims to two", 1,
       lagsep_fixture},
      {6, "2-valued transducer splits into a^n->b^n and a^n->b^(n+1)", 2,
       decomposition},
      {7, "count and lead/delay vectors agree with enumeration", 60,
       vector_semantics},
      {8, "every 3-tuple computation has an equal-output pair with lag < 16",
       10, close_pair_in_power},
      {9, "morphic decomposition: functional after theta, union equals S", 10,
       morphic},
      {10, "coverings preserve per-label computation counts, |u| <= 8", 0,
       covering_counts},
      {11, "repeated pipeline runs are byte-identical", 0, determinism},
  };
  int failures = 0;
  std::size_t ran = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.check();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (why.empty() && c.limit_s > 0 && secs >= c.limit_s)
      why = "took longer than " + std::to_string(c.limit_s) + " s";
    const bool ok = why.empty();
    if (!ok) ++failures;
    std::printf("%s criterion %2d: %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL",
                c.id, c.title.c_str(), secs, ok ? "" : " -- ", why.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(ran) - failures,
              ran);
  return failures == 0 ? 0 : 1;
}
