#include "fixtures.hpp"

#include "lexcover/text_format.hpp"

namespace lexcover::testkit {

OutputMorphism theta() { return {{'b', "b"}, {'c', "b"}}; }

std::uint64_t binary_value(const Word& u) {
  std::uint64_t v = 0;
  for (Letter c : u) v = 2 * v + (c == 'b' ? 1 : 0);
  return v;
}

namespace {

Machine random_skeleton(std::mt19937_64& rng, const RandomShape& shape,
                        MachineKind kind, const std::string& name) {
  std::uniform_int_distribution<std::size_t> states(1, shape.max_states);
  std::bernoulli_distribution coin(0.5);
  Machine m = make_machine(kind, name, shape.alphabet,
                           kind == MachineKind::Transducer ? shape.out_alphabet
                                                           : std::string{});
  const std::size_t n = states(rng);
  for (std::size_t s = 0; s < n; ++s)
    m.add_state("s" + std::to_string(s), coin(rng));
  m.initials.push_back(0);
  if (n > 1 && coin(rng))
    m.initials.push_back(static_cast<StateId>(1 + rng() % (n - 1)));
  return m;
}

}  // namespace

Machine random_nautomaton(std::mt19937_64& rng, const RandomShape& shape) {
  Machine m = random_skeleton(rng, shape, MachineKind::NAutomaton, "R");
  std::bernoulli_distribution edge(shape.density);
  std::uniform_int_distribution<std::uint32_t> mult(1, shape.max_multiplicity);
  const auto n = static_cast<StateId>(m.num_states());
  for (StateId p = 0; p < n; ++p)
    for (Letter a : shape.alphabet)
      for (StateId q = 0; q < n; ++q)
        if (edge(rng)) m.add_transition({p, a, q, {}, mult(rng)});
  return m;
}

Machine random_transducer(std::mt19937_64& rng, const RandomShape& shape) {
  Machine m = random_skeleton(rng, shape, MachineKind::Transducer, "R");
  std::bernoulli_distribution edge(shape.density);
  std::uniform_int_distribution<std::size_t> len(0, shape.max_output);
  std::uniform_int_distribution<std::size_t> letter(
      0, shape.out_alphabet.size() - 1);
  const auto n = static_cast<StateId>(m.num_states());
  for (StateId p = 0; p < n; ++p)
    for (Letter a : shape.alphabet)
      for (StateId q = 0; q < n; ++q)
        // Up to two parallel transitions with independent outputs.
        for (int copy = 0; copy < 2; ++copy) {
          if (!edge(rng)) continue;
          Word out;
          for (std::size_t i = len(rng); i > 0; --i)
            out.push_back(shape.out_alphabet[letter(rng)]);
          m.add_transition({p, a, q, out, 1});
        }
  return m;
}

}  // namespace lexcover::testkit
