#pragma once

// Line-oriented machine format:
//
//   # comment
//   transducer T
//   alphabet a
//   outalphabet b
//   states p q
//   initial p
//   final p q
//   trans p a/b p
//   trans p a/bb q
//   trans q a/- p
//
// Automata write `trans p a q`, N-automata may append `*m`. Transition order
// in the file is the transition id order. serialize_machine() emits the
// fields in the order above, transitions in id order.

#include <string>
#include <string_view>

#include "lexcover/core.hpp"

namespace lexcover {

Machine parse_machine(std::string_view text);
std::string serialize_machine(const Machine& m);

Machine read_machine_file(const std::string& path);
void write_machine_file(const std::string& path, const Machine& m);

// Output morphism file: one `letter image` pair per line, `-` for the empty
// image.
OutputMorphism parse_output_morphism(std::string_view text);

// Morphism file: `state <source-name> <target-name>` and
// `trans <source-id> <target-id>` lines.
Morphism parse_morphism(std::string_view text, const Machine& source,
                        const Machine& target);

// Words print as their letters, the empty word as `-`.
std::string render_word(const Word& w);

}  // namespace lexcover
