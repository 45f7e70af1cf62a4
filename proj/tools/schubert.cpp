// schubert: invariants, chains, exports and sweep verification for
// Schubert cycles G_gamma.
//
// Every option can also come from the environment (SCHUBERT_<NAME>) or from
// a JSON config file given by --config / SCHUBERT_CONFIG.  Precedence:
// flag > environment > config file > default.
//
// Exit codes: 0 success, 1 oracle disagreement or failed check, 2 invalid
// input, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "schubert/birkhoff.hpp"
#include "schubert/chains.hpp"
#include "schubert/export.hpp"
#include "schubert/lattice.hpp"
#include "schubert/report.hpp"
#include "schubert/settings.hpp"
#include "schubert/verify.hpp"

namespace {

using namespace schubert;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

// String-valued options so that "not given on the command line" can fall
// through to the environment and config file.
class Options {
 public:
  CLI::Option* add(CLI::App& app, const std::string& names, const std::string& key, const std::string& help) {
    auto* opt = app.add_option(names, values_[key], help);
    options_[key].push_back(opt);
    return opt;
  }

  std::optional<std::string> flag(const std::string& key) const {
    auto it = options_.find(key);
    if (it == options_.end()) return std::nullopt;
    for (auto* opt : it->second)
      if (opt->count() > 0) return values_.at(key);
    return std::nullopt;
  }

  std::optional<long long> flag_int(const std::string& key) const {
    auto v = flag(key);
    if (!v) return std::nullopt;
    try {
      std::size_t used = 0;
      long long parsed = std::stoll(*v, &used);
      if (used == v->size()) return parsed;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::invalid_argument, "--" + key + " expects an integer, got " + *v);
  }

 private:
  std::map<std::string, std::string> values_;
  std::map<std::string, std::vector<CLI::Option*>> options_;
};

struct Context {
  Options opts;
  SettingLayers layers;
  bool oracles_flag = false;

  std::string text(const std::string& key, std::string fallback) const {
    return layers.text(key, opts.flag(key), std::move(fallback));
  }
  long long integer(const std::string& key, long long fallback) const {
    return layers.integer(key, opts.flag_int(key), fallback);
  }
  std::string choice(const std::string& key, std::string fallback, std::initializer_list<std::string> allowed) const {
    auto v = text(key, std::move(fallback));
    for (const auto& a : allowed)
      if (v == a) return v;
    throw Error(ErrorKind::invalid_argument, "invalid value '" + v + "' for " + key);
  }

  Budgets budgets() const {
    std::map<std::string, long long, std::less<>> flags;
    for (const char* key : {"max-lattice", "max-ideals", "max-multichains", "max-triples"})
      if (auto v = opts.flag_int(key)) flags[key] = *v;
    return resolve_budgets(layers, flags);
  }

  GammaTuple gamma() const {
    const auto g = opts.flag("gamma") ? opts.flag("gamma") : layers.lookup("gamma");
    if (!g) throw Error(ErrorKind::invalid_argument, "-g/--gamma is required");
    const long long d_value = layers.integer("d", opts.flag_int("d"), -1);
    const long long n_value = layers.integer("n", opts.flag_int("n"), -1);
    if (d_value < 0) throw Error(ErrorKind::invalid_argument, "-d is required");
    if (n_value < 0) throw Error(ErrorKind::invalid_argument, "-n is required");
    auto entries = parse_entries(*g);
    if (static_cast<long long>(entries.size()) != d_value)
      throw Error(ErrorKind::invalid_tuple, "-d " + std::to_string(d_value) + " but gamma has " +
                                                std::to_string(entries.size()) + " entries");
    if (n_value > 64) throw Error(ErrorKind::invalid_argument, "-n above 64 is not supported");
    return GammaTuple(static_cast<int>(n_value), std::move(entries));
  }
};

void add_tuple_options(CLI::App& cmd, Context& ctx) {
  ctx.opts.add(cmd, "-d", "d", "number of entries");
  ctx.opts.add(cmd, "-n", "n", "ambient size");
  ctx.opts.add(cmd, "-g,--gamma", "gamma", "entries, e.g. 2,3,4,6,8,9");
}

void write_output(const std::string& text, const std::optional<std::string>& path) {
  if (!path || *path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + *path);
  out << text;
}

int cmd_invariants(const Context& ctx) {
  const auto gamma = ctx.gamma();
  const auto format = ctx.choice("format", "json", {"json", "table"});
  const bool oracles = ctx.layers.boolean("oracles", ctx.oracles_flag, false);
  const auto report = build_report(gamma, oracles, ctx.budgets());
  std::cout << (format == "json" ? report_to_json(report) : report_to_table(report));
  return report.oracles && !report.oracles->all_agree() ? kExitFailure : kExitOk;
}

std::string marked(const GammaTuple& cur, const GammaTuple* prev) {
  std::string out = "[";
  for (std::size_t j = 0; j < static_cast<std::size_t>(cur.d()); ++j) {
    if (j) out += ",";
    out += std::to_string(cur[j]);
    if (prev && (*prev)[j] != cur[j]) out += "*";
  }
  return out + "]";
}

int cmd_chain(const Context& ctx) {
  const auto gamma = ctx.gamma();
  const auto mode = ctx.choice("mode", "principal", {"principal", "algorithm2"});
  const auto format = ctx.choice("format", "text", {"text", "json"});
  const auto chain = mode == "principal" ? principal_chain_direct(gamma) : decrement_chain(gamma).steps;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = "schubert.chain";
    j["schema_version"] = 1;
    j["mode"] = mode;
    j["d"] = gamma.d();
    j["n"] = gamma.n();
    j["length"] = chain.size();
    auto steps = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < chain.size(); ++k) {
      nlohmann::ordered_json s;
      s["tuple"] = std::vector<int>(chain[k].entries().begin(), chain[k].entries().end());
      auto changed = nlohmann::ordered_json::array();
      if (k > 0)
        for (std::size_t j = 0; j < static_cast<std::size_t>(gamma.d()); ++j)
          if (chain[k][j] != chain[k - 1][j]) changed.push_back(j + 1);
      s["changed"] = std::move(changed);
      steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < chain.size(); ++k)
      std::cout << marked(chain[k], k ? &chain[k - 1] : nullptr) << "\n";
  }
  return kExitOk;
}

int cmd_export(const Context& ctx) {
  const auto gamma = ctx.gamma();
  const auto format = ctx.choice("format", "json", {"json", "dot"});
  const auto what = ctx.choice("what", "lattice", {"lattice", "irreducibles"});
  const auto budgets = ctx.budgets();
  const auto lat = SchubertLattice::enumerate(gamma, budgets.lattice);
  std::string text;
  if (what == "lattice") {
    text = format == "json" ? lattice_to_json(lat) : lattice_to_dot(lat);
  } else {
    const auto poset = lat.size() == 1 ? IrreduciblePoset{} : join_irreducibles(lat);
    text = format == "json" ? irreducibles_to_json(lat, poset) : irreducibles_to_dot(lat, poset);
  }
  write_output(text, ctx.opts.flag("output"));
  return kExitOk;
}

int cmd_verify(const Context& ctx) {
  VerifyOptions options;
  options.max_n = static_cast<int>(ctx.integer("max-n", 6));
  options.checks = parse_checks(ctx.text("checks", "all"));
  const long long hw = std::max(1u, std::thread::hardware_concurrency());
  const long long jobs = ctx.integer("jobs", hw);
  if (jobs < 1 || jobs > 1024) throw Error(ErrorKind::invalid_argument, "--jobs must be in 1..1024");
  options.jobs = static_cast<unsigned>(jobs);
  options.budgets = ctx.budgets();
  const auto format = ctx.choice("format", "text", {"text", "json"});
  // Instances are validated before any work starts.
  sweep_instances(options.max_n);
  const auto summary = run_verify(options);
  std::cout << (format == "json" ? summary_to_json(summary) : summary_to_text(summary));
  return summary.exit_code();
}

int exit_for(const Error& e) {
  return e.kind() == ErrorKind::budget_exceeded ? kExitBudget : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of Schubert cycles: F-pure threshold, a-invariant and their oracles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "schubert 1.0.0");
  Context ctx;
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file with option defaults");
  for (auto [key, help] : {std::pair{"max-lattice", "lattice element budget"},
                           std::pair{"max-ideals", "ideal enumeration budget"},
                           std::pair{"max-multichains", "multichain / search node budget"},
                           std::pair{"max-triples", "exhaustive distributivity triple budget"}})
    ctx.opts.add(app, std::string("--") + key, key, help);

  auto* inv = app.add_subcommand("invariants", "closed-formula invariants of one tuple");
  add_tuple_options(*inv, ctx);
  inv->add_flag("--oracles", ctx.oracles_flag, "cross-check with lattice, chain and Birkhoff oracles");
  ctx.opts.add(*inv, "--format", "format", "json (default) or table");

  auto* chain = app.add_subcommand("chain", "principal chain or Algorithm 2 decrement chain");
  add_tuple_options(*chain, ctx);
  ctx.opts.add(*chain, "--mode", "mode", "principal (default) or algorithm2");
  ctx.opts.add(*chain, "--format", "format", "text (default) or json");

  auto* exp = app.add_subcommand("export", "lattice or join-irreducible poset as JSON or DOT");
  add_tuple_options(*exp, ctx);
  ctx.opts.add(*exp, "--format", "format", "json (default) or dot");
  ctx.opts.add(*exp, "--what", "what", "lattice (default) or irreducibles");
  ctx.opts.add(*exp, "-o,--output", "output", "output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "exhaustive sweep over all tuples with n <= max-n");
  ctx.opts.add(*ver, "--max-n", "max-n", "largest n to sweep (default 6)");
  ctx.opts.add(*ver, "--checks", "checks", "all, or a list of tuple,tau,chains,structure,birkhoff,monomials,gorenstein");
  ctx.opts.add(*ver, "--jobs", "jobs", "worker threads (default: hardware concurrency)");
  ctx.opts.add(*ver, "--format", "format", "text (default) or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (config_path.empty()) {
      if (auto env = process_environment()("SCHUBERT_CONFIG")) config_path = *env;
    }
    if (!config_path.empty()) ctx.layers.load_config_file(config_path);
    if (inv->parsed()) return cmd_invariants(ctx);
    if (chain->parsed()) return cmd_chain(ctx);
    if (exp->parsed()) return cmd_export(ctx);
    return cmd_verify(ctx);
  } catch (const Error& e) {
    std::cerr << "schubert: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::bad_alloc&) {
    std::cerr << "schubert: out of memory\n";
    return kExitBudget;
  }
}
