#pragma once

// Shared machines and seeded random generators for the test binaries.

#include <cstdint>
#include <random>
#include <string>

#include "lexcover/core.hpp"
#include "lexcover/text_format.hpp"

namespace lexcover::testkit {

inline std::string fixture_path(const std::string& file) {
  return std::string(LEXCOVER_FIXTURE_DIR) + "/" + file;
}

inline Machine load_fixture(const std::string& file) {
  return read_machine_file(fixture_path(file));
}

// Binary counter with multiplicity-2 loops on q.
inline Machine c1() { return load_fixture("c1.naut"); }
// a^n -> {b^n, b^(n+1)} for n > 0, epsilon -> epsilon.
inline Machine t2() { return load_fixture("t.trans"); }
// t2 with the p -> q output replaced by cc.
inline Machine s2() { return load_fixture("s.trans"); }
// b -> b, c -> b.
OutputMorphism theta();

// Value of u in base 2, a = 0, b = 1.
std::uint64_t binary_value(const Word& u);

struct RandomShape {
  std::size_t max_states = 3;
  std::string alphabet = "ab";
  std::string out_alphabet = "bc";
  std::size_t max_output = 2;
  std::uint32_t max_multiplicity = 2;
  double density = 0.35;
};

Machine random_nautomaton(std::mt19937_64& rng, const RandomShape& shape);
Machine random_transducer(std::mt19937_64& rng, const RandomShape& shape);

}  // namespace lexcover::testkit
