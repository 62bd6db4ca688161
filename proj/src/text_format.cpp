#include "lexcover/text_format.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "lexcover/errors.hpp"

namespace lexcover {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = split_ws(line);
    if (!tokens.empty()) f(line_no, tokens);
  }
}

std::uint64_t parse_number(std::size_t line, std::string_view tok) {
  std::uint64_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, "expected a number, got '" + std::string(tok) + "'");
  return v;
}

Letter parse_letter(std::size_t line, std::string_view tok) {
  if (tok.size() != 1 || tok == "-" || tok == "/" || tok == "*")
    throw ParseError(line, "letters are single characters, got '" +
                               std::string(tok) + "'");
  return tok[0];
}

Word parse_word(std::string_view tok) {
  return tok == "-" ? Word{} : Word(tok);
}

}  // namespace

Machine parse_machine(std::string_view text) {
  Machine m;
  bool have_header = false;
  std::map<std::string, StateId, std::less<>> ids;

  auto state = [&](std::size_t line, std::string_view name) {
    auto it = ids.find(name);
    if (it == ids.end())
      throw ParseError(line, "undeclared state '" + std::string(name) + "'");
    return it->second;
  };

  for_each_line(text, [&](std::size_t line,
                          const std::vector<std::string_view>& tok) {
    const std::string_view key = tok[0];
    if (!have_header) {
      if (key == "automaton") {
        m.kind = MachineKind::Automaton;
      } else if (key == "transducer") {
        m.kind = MachineKind::Transducer;
      } else if (key == "nautomaton") {
        m.kind = MachineKind::NAutomaton;
      } else {
        throw ParseError(line, "expected automaton|transducer|nautomaton");
      }
      if (tok.size() > 2) throw ParseError(line, "header takes one name");
      if (tok.size() == 2) m.name = std::string(tok[1]);
      have_header = true;
      return;
    }
    if (key == "alphabet" || key == "outalphabet") {
      if (key == "outalphabet" && !m.is_transducer())
        throw ParseError(line, "outalphabet is only valid for transducers");
      std::string& dst = key == "alphabet" ? m.alphabet : m.out_alphabet;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const Letter a = parse_letter(line, tok[i]);
        if (dst.find(a) != std::string::npos)
          throw ParseError(line, "letter declared twice");
        dst.push_back(a);
      }
    } else if (key == "states") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        std::string name(tok[i]);
        if (ids.count(name)) throw ParseError(line, "state declared twice");
        ids.emplace(name, m.add_state(name));
      }
    } else if (key == "initial") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const StateId s = state(line, tok[i]);
        if (m.is_initial(s)) throw ParseError(line, "initial state repeated");
        m.initials.push_back(s);
      }
    } else if (key == "final") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        m.finals[state(line, tok[i])] = true;
      }
    } else if (key == "trans") {
      if (tok.size() != 4 && tok.size() != 5)
        throw ParseError(line, "expected: trans ORIGIN LABEL END [*m]");
      Transition t;
      t.origin = state(line, tok[1]);
      t.end = state(line, tok[3]);
      std::string_view label = tok[2];
      if (m.is_transducer()) {
        const auto slash = label.find('/');
        if (slash == std::string_view::npos)
          throw ParseError(line, "transducer labels are input/output");
        t.output = parse_word(label.substr(slash + 1));
        label = label.substr(0, slash);
        t.label = label == "-" ? kNoLetter : parse_letter(line, label);
      } else {
        t.label = parse_letter(line, label);
      }
      if (tok.size() == 5) {
        if (tok[4].size() < 2 || tok[4][0] != '*')
          throw ParseError(line, "multiplicity is written *m");
        if (m.kind != MachineKind::NAutomaton)
          throw ParseError(line, "multiplicities need an nautomaton");
        const auto mult = parse_number(line, tok[4].substr(1));
        if (mult == 0 || mult > UINT32_MAX)
          throw ParseError(line, "multiplicity out of range");
        t.multiplicity = static_cast<std::uint32_t>(mult);
      }
      m.add_transition(std::move(t));
    } else {
      throw ParseError(line, "unknown keyword '" + std::string(key) + "'");
    }
  });
  if (!have_header) throw ParseError(0, "missing machine header");
  return m;
}

std::string render_word(const Word& w) { return w.empty() ? "-" : w; }

std::string serialize_machine(const Machine& m) {
  std::ostringstream out;
  auto letters = [&](const char* key, const std::string& alphabet) {
    out << key;
    for (Letter a : alphabet) out << ' ' << a;
    out << '\n';
  };
  out << kind_name(m.kind);
  if (!m.name.empty()) out << ' ' << m.name;
  out << '\n';
  letters("alphabet", m.alphabet);
  if (m.is_transducer()) letters("outalphabet", m.out_alphabet);
  out << "states";
  for (const auto& name : m.state_names) out << ' ' << name;
  out << "\ninitial";
  for (StateId s : m.initials) out << ' ' << m.state_names[s];
  out << "\nfinal";
  for (StateId s = 0; s < m.num_states(); ++s) {
    if (m.is_final(s)) out << ' ' << m.state_names[s];
  }
  out << '\n';
  for (const auto& t : m.transitions) {
    out << "trans " << m.state_names[t.origin] << ' ';
    if (m.is_transducer()) {
      out << (t.label == kNoLetter ? '-' : t.label) << '/'
          << render_word(t.output);
    } else {
      out << t.label;
    }
    out << ' ' << m.state_names[t.end];
    if (m.kind == MachineKind::NAutomaton && t.multiplicity != 1)
      out << " *" << t.multiplicity;
    out << '\n';
  }
  return out.str();
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Machine read_machine_file(const std::string& path) {
  try {
    return parse_machine(slurp(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

void write_machine_file(const std::string& path, const Machine& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize_machine(m);
}

OutputMorphism parse_output_morphism(std::string_view text) {
  OutputMorphism theta;
  for_each_line(text, [&](std::size_t line,
                          const std::vector<std::string_view>& tok) {
    if (tok.size() != 2) throw ParseError(line, "expected: LETTER IMAGE");
    const Letter b = parse_letter(line, tok[0]);
    for (const auto& [letter, image] : theta) {
      if (letter == b) throw ParseError(line, "letter mapped twice");
    }
    theta.emplace_back(b, parse_word(tok[1]));
  });
  return theta;
}

Morphism parse_morphism(std::string_view text, const Machine& source,
                        const Machine& target) {
  Morphism phi;
  phi.state_map.assign(source.num_states(), kNoState);
  phi.trans_map.assign(source.num_transitions(), kNoTrans);
  auto find_state = [](std::size_t line, const Machine& m,
                       std::string_view name) {
    for (StateId s = 0; s < m.num_states(); ++s) {
      if (m.state_names[s] == name) return s;
    }
    throw ParseError(line, "unknown state '" + std::string(name) + "'");
  };
  for_each_line(text, [&](std::size_t line,
                          const std::vector<std::string_view>& tok) {
    if (tok.size() != 3) throw ParseError(line, "expected three fields");
    if (tok[0] == "state") {
      phi.state_map[find_state(line, source, tok[1])] =
          find_state(line, target, tok[2]);
    } else if (tok[0] == "trans") {
      const auto e = parse_number(line, tok[1]);
      const auto f = parse_number(line, tok[2]);
      if (e >= source.num_transitions() || f >= target.num_transitions())
        throw ParseError(line, "transition id out of range");
      phi.trans_map[e] = static_cast<TransId>(f);
    } else {
      throw ParseError(line, "expected state|trans");
    }
  });
  return phi;
}

}  // namespace lexcover
