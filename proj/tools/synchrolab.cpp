// synchrolab command-line front end.
//
// Exit codes: 0 success, 1 usage or input error, 2 domain error (e.g. not
// synchronizing), 3 subset cap exceeded, 4 invariant violation.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "synchrolab/synchrolab.hpp"

namespace fs = std::filesystem;
using namespace synchrolab;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kResource = 3, kInvariant = 4 };

/// Runs `fn`, mapping library exceptions to exit codes.
int guarded(const std::function<int()>& fn, std::string* message = nullptr) {
  auto fail = [&](int code, const std::exception& e) {
    if (message) *message = e.what(); else std::cerr << "error: " << e.what() << '\n';
    return code;
  };
  try {
    return fn();
  } catch (const InvariantViolation& e) {
    return fail(kInvariant, e);
  } catch (const ResourceError& e) {
    return fail(kResource, e);
  } catch (const DomainError& e) {
    return fail(kDomain, e);
  } catch (const InputError& e) {
    return fail(kUsage, e);
  } catch (const std::exception& e) {
    return fail(kUsage, e);
  }
}

std::string read_source(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    os << in.rdbuf();
  }
  return os.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string fmt_rationals(const RationalVector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return join(parts);
}

std::size_t cap_from_env(std::size_t fallback) {
  if (const char* env = std::getenv("SYNCHROLAB_MAX_N")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw InputError("SYNCHROLAB_MAX_N must be a non-negative integer");
    }
  }
  return fallback;
}

struct Common {
  std::string file = "-";
  std::string p;
  bool json = false;
  bool approx = false;
  bool dot = false;
  std::size_t c_max = 2;
  std::size_t max_n = 0;  // 0: environment or default
};

AnalysisOptions options_for(const Common& c, const std::string& source) {
  AnalysisOptions opts;
  if (!c.p.empty()) opts.p = ProbabilityVector::parse(c.p);
  opts.c_max = c.c_max;
  opts.cap = c.max_n ? c.max_n : cap_from_env(kDefaultSubsetCap);
  opts.approx = c.approx;
  opts.source = source;
  return opts;
}

Automaton load_automaton(const Common& c) { return parse_automaton(read_source(c.file)); }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// ---- subcommands ---------------------------------------------------------

int cmd_analyze_one(const Common& c, const std::string& path, std::ostream& out) {
  Common local = c;
  local.file = path;
  const auto A = load_automaton(local);
  const auto opts = options_for(local, path);
  if (c.dot) {
    out << to_dot(A);
    return kOk;
  }
  const auto rep = analyze(A, opts);
  if (c.json) {
    out << rep.dump(2) << '\n';
    return kOk;
  }
  const auto& cls = rep["classification"];
  out << "source: " << path << "\n";
  out << "states: " << A.states() << "  letters: " << A.letters() << "\n";
  out << "strongly connected: " << cls["strongly_connected"] << "\n";
  out << "synchronizing: " << cls["synchronizing"] << "\n";
  out << "eulerian: " << cls["eulerian"] << "\n";
  out << "pseudo-eulerian: " << cls["pseudo_eulerian"]["holds"] << "\n";
  const auto& qe = cls["quasi_eulerian"];
  out << "quasi-eulerian (c <= " << c.c_max << "): ";
  if (qe["witness"].is_null()) out << "no\n";
  else out << "c=" << qe["witness"]["c"] << " E=" << qe["witness"]["E"].dump() << " s=" << qe["witness"]["s"] << "\n";
  const auto& ex = rep["exponents"];
  out << "primitive: " << ex["primitive"];
  if (ex["primitive"].get<bool>()) out << "  exp: " << ex["exp"] << "  wexp: " << ex["wexp"];
  out << "\n";
  if (!rep["spectral"].is_null()) {
    const auto& sp = rep["spectral"];
    std::vector<std::string> alpha = sp["alpha"].get<std::vector<std::string>>();
    out << "alpha: " << join(alpha) << "\nL: " << sp["L"] << "  c: " << sp["c"]
        << "  orbit span dim: " << sp["orbit_span_dim"] << "\n";
  }
  if (!rep["synthesis"].is_null()) {
    const auto& sy = rep["synthesis"];
    out << "reset length: " << sy["exact_length"] << "  word: " << sy["exact_word"].get<std::string>() << "\n";
    out << "greedy: " << sy["greedy"]["length"] << "  word: " << sy["greedy"]["word"].get<std::string>() << "\n";
    if (!sy["extension_word"].is_null()) {
      out << "extension: " << sy["extension_length"] << "  word: " << sy["extension_word"].get<std::string>() << "\n";
    }
  }
  for (const auto& [name, b] : rep["bounds"].items()) {
    if (b.is_null()) continue;
    out << "bound " << name << ": " << b["value"];
    if (!b["satisfied"].is_null()) out << (b["satisfied"].get<bool>() ? " ok" : " VIOLATED");
    out << "\n";
  }
  return kOk;
}

int cmd_analyze(const Common& c, const std::string& batch_dir) {
  if (batch_dir.empty()) return cmd_analyze_one(c, c.file, std::cout);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(batch_dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  struct Outcome {
    int code;
    std::string text;
    std::string error;
  };
  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files) {
    jobs.push_back(std::async(std::launch::async, [&c, f] {
      std::ostringstream os;
      Outcome o;
      o.code = guarded([&] { return cmd_analyze_one(c, f.string(), os); }, &o.error);
      o.text = os.str();
      return o;
    }));
  }
  int worst = kOk;
  Json all = Json::object();
  for (std::size_t i = 0; i < files.size(); ++i) {
    auto o = jobs[i].get();
    worst = std::max(worst, o.code);
    const auto name = files[i].filename().string();
    if (c.json) {
      all[name] = o.code == kOk ? Json::parse(o.text) : Json{{"error", o.error}, {"exit_code", o.code}};
    } else {
      std::cout << "== " << name << "\n";
      if (o.code == kOk) std::cout << o.text; else std::cout << "error (" << o.code << "): " << o.error << "\n";
    }
  }
  if (c.json) emit(all);
  return worst;
}

int cmd_reset_word(const Common& c, const std::string& method) {
  const auto A = load_automaton(c);
  const auto opts = options_for(c, c.file);
  Json j;
  if (method == "exact") {
    j = report::certificate(A, shortest_reset_word(A, opts.cap));
  } else if (method == "greedy") {
    j = report::certificate(A, greedy_compress(A));
  } else {
    const auto [cert, trace] = synthesize_reset_word(A, report::weights(A, opts), opts.cap);
    j = report::certificate(A, cert);
    j["trace"] = report::trace(A, trace);
  }
  j["method"] = method;
  if (c.json) {
    emit({{"automaton", report::automaton(A, opts)}, {"reset_word", j}});
    return kOk;
  }
  std::cout << "method: " << method << "\nlength: " << j["length"] << "\nword: " << j["word"].get<std::string>() << "\n";
  if (j.contains("trace")) {
    std::cout << "L: " << j["trace"]["L"] << "  bound: " << j["trace"]["bound_used"] << "\n";
    for (const auto& s : j["trace"]["steps"]) {
      std::cout << "  " << s["segment"].get<std::string>() << "  " << s["preimage"].dump() << "  "
                << s["weight"].get<std::string>() << "\n";
    }
  }
  return kOk;
}

int cmd_classify(const Common& c) {
  const auto A = load_automaton(c);
  const auto opts = options_for(c, c.file);
  const auto cls = report::classification(A, opts);
  if (c.json) {
    emit({{"automaton", report::automaton(A, opts)}, {"classification", cls}});
    return kOk;
  }
  std::cout << "strongly connected: " << cls["strongly_connected"] << "\n"
            << "synchronizing: " << cls["synchronizing"] << "\n"
            << "eulerian: " << cls["eulerian"] << "\n"
            << "pseudo-eulerian: " << cls["pseudo_eulerian"]["holds"];
  if (cls["pseudo_eulerian"]["holds"].get<bool>()) {
    std::cout << "  p: " << join(cls["pseudo_eulerian"]["p"].get<std::vector<std::string>>());
  }
  std::cout << "\nquasi-eulerian (c <= " << c.c_max << "): ";
  const auto& w = cls["quasi_eulerian"]["witness"];
  if (w.is_null()) {
    std::cout << "no\n";
  } else {
    std::cout << "c=" << w["c"] << " E=" << w["E"].dump() << " s=" << w["s"]
              << " p: " << join(w["p"].get<std::vector<std::string>>()) << "\n";
  }
  return kOk;
}

int cmd_exponent(const Common& c) {
  const auto input = parse_input(read_source(c.file));
  const AdjacencyMatrix M = std::holds_alternative<Automaton>(input)
                                ? underlying_matrix(std::get<Automaton>(input))
                                : std::get<AdjacencyMatrix>(input);
  if (c.dot) {
    std::cout << (std::holds_alternative<Automaton>(input) ? to_dot(std::get<Automaton>(input)) : to_dot(M));
    return kOk;
  }
  const auto j = report::exponents(M);
  if (c.json) {
    emit({{"n", M.size()}, {"exponents", j}});
    return kOk;
  }
  std::cout << "primitive: " << (j["primitive"].get<bool>() ? "yes" : "no") << "\n";
  if (j["primitive"].get<bool>()) std::cout << "exp: " << j["exp"] << "\nwexp: " << j["wexp"] << "\n";
  return kOk;
}

int cmd_steady_state(const Common& c) {
  const auto A = load_automaton(c);
  const auto opts = options_for(c, c.file);
  const auto p = report::weights(A, opts);
  const auto ss = steady_state(transition_matrix(A, p));
  if (c.json) {
    emit({{"automaton", report::automaton(A, opts)}, {"spectral", report::spectral(A, opts)}});
    return kOk;
  }
  std::cout << "p: " << fmt_rationals(p.values()) << "\nalpha: " << fmt_rationals(ss.alpha) << "\nL: " << ss.L
            << "\nc: " << equal_value_deficiency(ss) << "\norbit span dim: " << orbit_span_dimension(A, ss) << "\n";
  if (c.approx) {
    std::vector<std::string> parts;
    for (const auto& x : ss.alpha) parts.push_back(to_approx(x));
    std::cout << "alpha (approx): " << join(parts) << "\n";
  }
  return kOk;
}

int cmd_verify_bounds(const Common& c) {
  const auto A = load_automaton(c);
  const auto opts = options_for(c, c.file);
  require_subset_cap(A.states(), opts.cap, "verify-bounds");
  const auto exact = shortest_reset_word(A, opts.cap);
  const auto spectral = report::spectral(A, opts);
  const auto bounds = report::bounds(A.states(), exact.length(), spectral);
  Json synth = nullptr;
  bool ok = true;
  for (const auto& [name, b] : bounds.items()) {
    if (!b.is_null() && !b["satisfied"].get<bool>()) ok = false;
  }
  if (is_strongly_connected(A)) {
    const auto [cert, trace] = synthesize_reset_word(A, report::weights(A, opts), opts.cap);
    synth = {{"extension_length", cert.length()}, {"bound_used", report::natural(trace.bound_used)},
             {"within_bound", Natural(cert.length()) <= trace.bound_used}};
  }
  if (c.json) {
    emit({{"automaton", report::automaton(A, opts)},
          {"bounds", bounds},
          {"spectral", spectral},
          {"synthesis", {{"exact_length", exact.length()}, {"extension", synth}}}});
  } else {
    std::cout << "reset length: " << exact.length() << "\n";
    for (const auto& [name, b] : bounds.items()) {
      if (b.is_null()) continue;
      std::cout << name << ": " << b["value"] << (b["satisfied"].get<bool>() ? " ok" : " VIOLATED") << "\n";
    }
    if (!synth.is_null()) {
      std::cout << "extension word length: " << synth["extension_length"] << " <= " << synth["bound_used"] << "\n";
    }
  }
  return ok ? kOk : kInvariant;
}

int cmd_generate(const std::string& family, const std::vector<std::size_t>& args, std::uint64_t seed,
                 bool strongly_connected, bool synchronizing, bool dot) {
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw InputError("generate " + family + " takes " + std::to_string(count) + " numeric argument(s)");
    }
  };
  if (family == "wielandt") {
    need(1);
    const auto M = wielandt_digraph(args[0]);
    std::cout << (dot ? to_dot(M) : print_matrix(M));
    return kOk;
  }
  std::optional<Automaton> A;
  if (family == "cerny") {
    need(1);
    A = cerny(args[0]);
  } else if (family == "random") {
    need(2);
    A = random_automaton(args[0], args[1], seed, {strongly_connected, synchronizing});
  } else if (family == "eulerian") {
    need(2);
    A = random_eulerian_automaton(args[0], args[1], seed, synchronizing);
  } else {
    throw InputError("unknown family '" + family + "'");
  }
  std::cout << (dot ? to_dot(*A) : print_automaton(*A));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synchrolab: synchronizing automata analysis"};
  app.require_subcommand(1);
  Common c;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", c.file, "automaton file ('-' for stdin)")->capture_default_str();
    sub->add_option("--max-n", c.max_n, "subset cap (overrides SYNCHROLAB_MAX_N)");
    sub->add_flag("--json", c.json, "emit a JSON report");
  };
  auto add_p = [&](CLI::App* sub) {
    sub->add_option("--p", c.p, "letter weights as exact fractions, e.g. 1/3,2/3");
    sub->add_flag("--approx", c.approx, "add decimal renderings");
  };

  std::string batch_dir;
  auto* analyze_cmd = app.add_subcommand("analyze", "full analysis report");
  add_input(analyze_cmd);
  add_p(analyze_cmd);
  analyze_cmd->add_option("--cmax", c.c_max, "largest c for the quasi-Eulerian search")->capture_default_str();
  analyze_cmd->add_option("--batch", batch_dir, "analyze every file in a directory");
  analyze_cmd->add_flag("--dot", c.dot, "emit the underlying graph in DOT instead");

  std::string method = "exact";
  auto* reset_cmd = app.add_subcommand("reset-word", "compute a reset word");
  add_input(reset_cmd);
  add_p(reset_cmd);
  reset_cmd->add_option("--method", method, "exact | extension | greedy")
      ->check(CLI::IsMember({"exact", "extension", "greedy"}))
      ->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "Eulerian / pseudo-Eulerian / quasi-Eulerian status");
  add_input(classify_cmd);
  classify_cmd->add_option("--cmax", c.c_max, "largest c for the quasi-Eulerian search")->capture_default_str();

  auto* exponent_cmd = app.add_subcommand("exponent", "exponent and weak exponent of the underlying graph or a matrix");
  add_input(exponent_cmd);
  exponent_cmd->add_flag("--dot", c.dot, "emit the graph in DOT instead");

  auto* steady_cmd = app.add_subcommand("steady-state", "stationary distribution of S(A, p)");
  add_input(steady_cmd);
  add_p(steady_cmd);

  auto* bounds_cmd = app.add_subcommand("verify-bounds", "check reset length against every bound");
  add_input(bounds_cmd);
  add_p(bounds_cmd);

  std::string family;
  std::vector<std::size_t> gen_args;
  std::uint64_t seed = 1;
  bool strongly_connected = false, synchronizing = false;
  auto* gen_cmd = app.add_subcommand("generate", "emit cerny N | wielandt N | random N K | eulerian N K");
  gen_cmd->add_option("family", family, "cerny | wielandt | random | eulerian")
      ->required()
      ->check(CLI::IsMember({"cerny", "wielandt", "random", "eulerian"}));
  gen_cmd->add_option("args", gen_args, "N, or N K");
  gen_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  gen_cmd->add_flag("--strongly-connected", strongly_connected, "resample until strongly connected");
  gen_cmd->add_flag("--synchronizing", synchronizing, "resample until synchronizing");
  gen_cmd->add_flag("--dot", c.dot, "emit DOT instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  return guarded([&]() -> int {
    if (*analyze_cmd) return cmd_analyze(c, batch_dir);
    if (*reset_cmd) return cmd_reset_word(c, method);
    if (*classify_cmd) return cmd_classify(c);
    if (*exponent_cmd) return cmd_exponent(c);
    if (*steady_cmd) return cmd_steady_state(c);
    if (*bounds_cmd) return cmd_verify_bounds(c);
    return cmd_generate(family, gen_args, seed, strongly_connected, synchronizing, c.dot);
  });
}
