#include "lexcover/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lexcover/core.hpp"
#include "lexcover/decompose.hpp"
#include "lexcover/errors.hpp"
#include "lexcover/lagsep.hpp"
#include "lexcover/lexorder.hpp"
#include "lexcover/multiskim.hpp"
#include "lexcover/oracle.hpp"
#include "lexcover/text_format.hpp"

namespace lexcover::cli {
namespace {

namespace fs = std::filesystem;

struct Globals {
  std::size_t max_len = kDefaultCheckLength;
  std::size_t cap = kDefaultStateCap;
  std::string order = "file";
  std::uint64_t seed = 0;  // accepted for scripting; commands are deterministic
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void param(const std::string& key, const std::string& value) {
    lines_.push_back("param\t" + key + "\t" + value);
  }
  void stage(const std::string& name, std::size_t states,
             std::size_t transitions) {
    lines_.push_back("stage\t" + name + "\t" + std::to_string(states) + "\t" +
                     std::to_string(transitions));
  }
  void stage(const std::string& name, const Machine& m) {
    stage(name, m.num_states(), m.num_transitions());
  }
  void verdict(const std::string& name, bool ok) {
    lines_.push_back("verdict\t" + name + "\t" + (ok ? "pass" : "fail"));
  }
  void print(std::ostream& err) const {
    using namespace std::chrono;
    err << "command\t" << command_ << '\n';
    for (const auto& l : lines_) err << l << '\n';
    err << "wall_ms\t"
        << duration_cast<milliseconds>(steady_clock::now() - start_).count()
        << '\n';
  }

 private:
  std::string command_;
  std::vector<std::string> lines_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Machine load(const std::string& path) {
  Machine m = read_machine_file(path);
  const auto violations = validate(m);
  if (!violations.empty()) {
    std::string msg = path + " is not a valid machine:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw InvalidArgument(msg);
  }
  return m;
}

// Every emitted machine passes validate().
std::string emit(const Machine& m) {
  const auto violations = validate(m);
  if (!violations.empty())
    throw Error("internal: emitted machine fails validation: " +
                violations.front());
  return serialize_machine(m);
}

void write_or_print(const std::string& path, const Machine& m,
                    std::ostream& out) {
  const std::string text = emit(m);
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path.string() + "'");
  f << text;
}

std::string extension(const Machine& m) {
  switch (m.kind) {
    case MachineKind::Automaton:
      return ".aut";
    case MachineKind::NAutomaton:
      return ".naut";
    case MachineKind::Transducer:
      return ".trans";
  }
  return ".txt";
}

Word parse_input_word(const std::string& s) { return s == "-" ? Word{} : s; }

std::string render_image(const std::set<Word>& image) {
  std::vector<Word> sorted(image.begin(), image.end());
  std::sort(sorted.begin(), sorted.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::string out = "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ",";
    out += render_word(sorted[i]);
  }
  return out + "}";
}

std::string value_of(const Machine& m, const Word& u) {
  switch (m.kind) {
    case MachineKind::Automaton:
      return oracle::accepts(m, u) ? "1" : "0";
    case MachineKind::NAutomaton:
      return std::to_string(oracle::eval_series(m, u));
    case MachineKind::Transducer:
      return render_image(oracle::eval_relation(m, u));
  }
  return "?";
}

// Characteristic form of an N-automaton; other machines unchanged.
Machine characteristic(const Machine& m) {
  if (m.kind == MachineKind::NAutomaton && !m.is_characteristic())
    return split_multiplicities(m).machine;
  return m;
}

int cmd_eval(const std::string& path, const std::vector<std::string>& words,
             std::ostream& out) {
  const Machine m = load(path);
  for (const auto& w : words) {
    const Word u = parse_input_word(w);
    out << render_word(u) << '\t' << value_of(m, u) << '\n';
  }
  return kOk;
}

int cmd_oracle(const Globals& g, const std::string& mode,
               const std::vector<std::string>& paths, std::ostream& out,
               Report& report) {
  report.param("mode", mode);
  report.param("max_len", std::to_string(g.max_len));
  const bool pair = mode == "equiv";
  if (paths.size() != (pair ? 2u : 1u))
    throw CLI::ValidationError(pair ? "equiv needs two machines"
                                    : mode + " needs one machine");
  const Machine m = load(paths[0]);
  if (mode == "eval") {
    for (const auto& u : oracle::words_up_to(m.alphabet, g.max_len))
      out << render_word(u) << '\t' << value_of(m, u) << '\n';
    return kOk;
  }
  if (mode == "valuedness" || mode == "ambiguity") {
    const bool valuedness = mode == "valuedness";
    if (valuedness && !m.is_transducer())
      throw InvalidArgument("valuedness needs a transducer");
    for (const auto& u : oracle::words_up_to(m.alphabet, g.max_len)) {
      const auto v = valuedness ? oracle::eval_relation(m, u).size()
                                : oracle::count_successful(m, u);
      out << render_word(u) << '\t' << v << '\n';
    }
    const auto best = valuedness ? oracle::valuedness_up_to(m, g.max_len)
                                 : oracle::ambiguity_up_to(m, g.max_len);
    out << "max\t" << best.value << '\t' << render_word(best.witness) << '\n';
    if (!valuedness)
      out << "growing\t" << (best.growing ? "true" : "false") << '\n';
    return kOk;
  }
  if (mode == "equiv") {
    const Machine other = load(paths[1]);
    std::string alphabet = m.alphabet;
    for (Letter c : other.alphabet) {
      if (alphabet.find(c) == std::string::npos) alphabet.push_back(c);
    }
    for (const auto& u : oracle::words_up_to(alphabet, g.max_len)) {
      const bool same = value_of(m, u) == value_of(other, u);
      out << render_word(u) << '\t' << (same ? "equal" : "differ") << '\n';
    }
    const auto eq = oracle::equivalent_up_to(m, other, g.max_len);
    out << "equivalent\t" << (eq.equivalent ? "true" : "false");
    if (eq.counterexample) out << '\t' << render_word(*eq.counterexample);
    out << '\n';
    report.verdict("equivalent", eq.equivalent);
    return eq.equivalent ? kOk : kVerification;
  }
  throw CLI::ValidationError("unknown oracle mode '" + mode + "'");
}

int cmd_skim(const Globals& g, std::uint32_t k, const std::string& path,
             const std::string& out_path, const std::string& layers_dir,
             std::ostream& out, Report& report) {
  const Machine source = load(path);
  if (source.is_transducer())
    throw InvalidArgument("skim takes an automaton or N-automaton");
  const Machine base = characteristic(source);
  const TransitionOrder order = parse_order(base, g.order);
  report.param("k", std::to_string(k));
  report.param("order", g.order);
  report.stage("source", base);
  const SkimResult skim = multi_skim(base, order, k, g.cap);
  report.stage("B_k", skim.covering);
  const bool covering = verify_morphism(skim.covering, base, skim.projection,
                                        MorphismKind::Covering);
  report.verdict("covering", covering);
  write_or_print(out_path, skim.covering, out);
  if (!layers_dir.empty()) {
    fs::create_directories(layers_dir);
    const std::string ext = extension(skim.covering);
    write_file(fs::path(layers_dir) / ("covering" + ext), emit(skim.covering));
    const SkimLayers layers = skim_layers(skim, base);
    for (std::size_t i = 0; i < layers.layers.size(); ++i) {
      const auto& layer = layers.layers[i].machine;
      write_file(fs::path(layers_dir) / ("layer_" + std::to_string(i) + ext),
                 emit(layer));
    }
    write_file(fs::path(layers_dir) / ("remainder" + ext),
               emit(layers.remainder.machine));
  }
  return covering ? kOk : kVerification;
}

int cmd_lagsep(const Globals& g, std::optional<std::size_t> n_opt,
               std::optional<std::size_t> k_opt, const std::string& path,
               bool psi, bool trim_result, const std::string& out_path,
               std::ostream& out, Report& report) {
  const Machine t = load(path);
  if (!t.is_transducer()) throw InvalidArgument("lagsep takes a transducer");
  if (!n_opt && !k_opt) throw CLI::ValidationError("lagsep needs --n or --k");
  const std::size_t N = n_opt ? *n_opt : default_N(t, *k_opt);
  const TransitionOrder order = parse_order(t, g.order);
  report.param("N", std::to_string(N));
  report.param("order", g.order);
  report.stage("T", t);
  const LagSepResult lsc = lag_sep_covering(t, N, order, g.cap);
  report.stage("T_psc", lsc.covering);
  const bool covering = verify_morphism(lsc.covering, t, lsc.projection,
                                        MorphismKind::Covering);
  report.verdict("covering", covering);
  Machine result = lsc.covering;
  if (psi) {
    result = select_psi(lsc, t).transducer;
    report.stage("T_psi", result);
  }
  if (trim_result) {
    result = trim(result).machine;
    report.stage("trimmed", result);
  }
  if (k_opt) {
    const bool certified = ambiguity_certificate(result, *k_opt, g.max_len);
    report.verdict("input_k_ambiguous", certified || !psi);
  }
  write_or_print(out_path, result, out);
  return covering ? kOk : kVerification;
}

int cmd_decompose(const Globals& g, std::size_t k,
                  std::optional<std::size_t> n_opt, const std::string& path,
                  const std::string& theta_path, const std::string& out_dir,
                  Report& report) {
  const Machine t = load(path);
  if (!t.is_transducer())
    throw InvalidArgument("decompose takes a transducer");
  DecompositionOptions opts;
  opts.N = n_opt;
  opts.transducer_order = parse_order(t, g.order);
  opts.check_length = g.max_len;
  opts.state_cap = g.cap;
  report.param("k", std::to_string(k));
  report.param("order", g.order);
  report.param("max_len", std::to_string(g.max_len));

  std::vector<Machine> components;
  std::vector<StageMetric> metrics;
  bool ok = true;
  if (theta_path.empty()) {
    opts.transducer_order = parse_order(t, g.order);
    const auto r = decompose_k_valued(t, k, opts);
    report.param("N", std::to_string(r.N));
    for (const auto& c : r.components) components.push_back(c.transducer);
    metrics = r.metrics;
    report.verdict("immersions", r.verdicts.immersions);
    report.verdict("unambiguous", r.verdicts.unambiguous);
    report.verdict("functional", r.verdicts.functional);
    report.verdict("union_equivalent", r.verdicts.union_equivalent);
    ok = r.verdicts.all();
  } else {
    const OutputMorphism theta = parse_output_morphism(read_text(theta_path));
    MorphicOptions mopts;
    mopts.decomposition = opts;
    // The order applies to the relabelled transducer, which shares ids.
    const auto r = morphic_decompose(t, theta, k, mopts);
    report.param("N", std::to_string(r.image_decomposition.N));
    report.param("K", std::to_string(r.K));
    components = r.components;
    metrics = r.metrics;
    report.verdict("functional_after_theta", r.functional_after_theta);
    report.verdict("union_equivalent", r.union_equivalent);
    ok = r.functional_after_theta && r.union_equivalent;
  }
  for (const auto& m : metrics) report.stage(m.stage, m.states, m.transitions);

  fs::create_directories(out_dir);
  for (std::size_t i = 0; i < components.size(); ++i) {
    write_file(fs::path(out_dir) / ("component_" + std::to_string(i) + ".trans"),
               emit(components[i]));
  }
  std::ostringstream flat;
  for (const auto& m : metrics)
    flat << m.stage << '\t' << m.states << '\t' << m.transitions << '\n';
  write_file(fs::path(out_dir) / "metrics.txt", flat.str());
  return ok ? kOk : kVerification;
}

int cmd_verify(const std::string& kind_flag, const std::string& source_path,
               const std::string& target_path, const std::string& map_path,
               std::ostream& out, Report& report) {
  const Machine source = load(source_path);
  const Machine target = load(target_path);
  Morphism phi = parse_morphism(read_text(map_path), source, target);
  MorphismKind kind = MorphismKind::Morphism;
  if (kind_flag == "covering") {
    kind = MorphismKind::Covering;
  } else if (kind_flag == "immersion") {
    kind = MorphismKind::Immersion;
    if (auto c = complete_immersion(source, target, phi))
      phi.completion = std::make_shared<Completion>(std::move(*c));
  }
  report.param("kind", kind_flag);
  std::optional<std::string> why;
  try {
    why = check_morphism(source, target, phi, kind);
  } catch (const Unverifiable& e) {
    why = std::string("unverifiable: ") + e.what();
  }
  report.verdict(kind_flag, !why);
  out << kind_flag << '\t' << (why ? "fail" : "pass");
  if (why) out << '\t' << *why;
  out << '\n';
  return why ? kVerification : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Lexicographic coverings and k-valued transducer decomposition",
               "lexcover"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-len", g.max_len, "bound on input length for checks");
  app.add_option("--cap-states", g.cap, "state cap for constructions");
  app.add_option("--order", g.order, "file | reverse | perm:<id>,<id>,...");
  app.add_option("--seed", g.seed, "seed (no command draws random numbers)");

  std::string machine_path;
  std::vector<std::string> words;
  auto* eval = app.add_subcommand("eval", "evaluate a machine on words");
  eval->add_option("machine", machine_path)->required();
  eval->add_option("words", words, "input words, - for the empty word");

  std::string oracle_mode;
  std::vector<std::string> oracle_paths;
  auto* orc = app.add_subcommand("oracle", "brute-force sweeps over inputs");
  orc->add_option("mode", oracle_mode, "eval | valuedness | ambiguity | equiv")
      ->required()
      ->check(CLI::IsMember({"eval", "valuedness", "ambiguity", "equiv"}));
  orc->add_option("machines", oracle_paths)->required();

  std::uint32_t skim_k = 0;
  std::string out_path, layers_dir;
  auto* skim = app.add_subcommand("skim", "multi-skimming covering");
  skim->add_option("--k", skim_k)->required()->check(CLI::PositiveNumber);
  skim->add_option("machine", machine_path)->required();
  skim->add_option("--out", out_path, "write the covering here");
  skim->add_option("--emit-layers", layers_dir, "directory for the layers");

  std::optional<std::size_t> lag_n, lag_k;
  bool psi = false, trim_flag = false;
  auto* lag = app.add_subcommand("lagsep", "lag separation covering");
  lag->add_option("--n", lag_n, "lag bound N");
  lag->add_option("--k", lag_k, "valuedness; N defaults to L n^(k+1)");
  lag->add_option("machine", machine_path)->required();
  lag->add_flag("--select-psi", psi, "unset finals with an epsilon entry");
  lag->add_flag("--trim", trim_flag, "keep the useful part only");
  lag->add_option("--out", out_path, "write the result here");

  std::size_t dec_k = 0;
  std::optional<std::size_t> dec_n;
  std::string theta_path, out_dir;
  auto* dec = app.add_subcommand("decompose", "decompose a k-valued transducer");
  dec->add_option("--k", dec_k)->required()->check(CLI::PositiveNumber);
  dec->add_option("--n", dec_n, "lag bound N");
  dec->add_option("--morphism", theta_path, "output morphism file");
  dec->add_option("machine", machine_path)->required();
  dec->add_option("--out", out_dir, "output directory")->required();

  std::string verify_kind = "morphism";
  std::string target_path, map_path;
  auto* ver = app.add_subcommand("verify", "check a morphism file");
  auto* kinds = ver->add_option_group("kind");
  kinds->add_flag_callback("--covering", [&] { verify_kind = "covering"; });
  kinds->add_flag_callback("--immersion", [&] { verify_kind = "immersion"; });
  kinds->add_flag_callback("--morphism", [&] { verify_kind = "morphism"; });
  kinds->require_option(0, 1);
  ver->add_option("source", machine_path)->required();
  ver->add_option("target", target_path)->required();
  ver->add_option("map", map_path)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  auto* sub = app.get_subcommands().front();
  Report report(sub->get_name());
  int code = kOk;
  try {
    if (sub == eval) {
      code = cmd_eval(machine_path, words, out);
    } else if (sub == orc) {
      code = cmd_oracle(g, oracle_mode, oracle_paths, out, report);
    } else if (sub == skim) {
      code = cmd_skim(g, skim_k, machine_path, out_path, layers_dir, out,
                      report);
    } else if (sub == lag) {
      code = cmd_lagsep(g, lag_n, lag_k, machine_path, psi, trim_flag,
                        out_path, out, report);
    } else if (sub == dec) {
      code = cmd_decompose(g, dec_k, dec_n, machine_path, theta_path, out_dir,
                           report);
    } else {
      code = cmd_verify(verify_kind, machine_path, target_path, map_path, out,
                        report);
    }
  } catch (const CapOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kCapOverflow;
  } catch (const NotKValued& e) {
    err << "error: " << e.what() << '\n';
    return kVerification;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  report.print(err);
  return code;
}

}  // namespace lexcover::cli
