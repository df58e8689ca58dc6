// gq: command-line driver for the quantization checks.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gq/checks.hpp"
#include "gq/io.hpp"

namespace {

struct Common {
  std::string config;
  std::string out;
  std::string format = "csv";
  int levels = 0;
  long long seed = -1;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "JSON run configuration")->required()->check(CLI::ExistingFile);
  sub->add_option("--out", c.out, "output path (stdout if omitted)");
  sub->add_option("--format", c.format, "report format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--levels", c.levels, "refinement levels (overrides the config)")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "random seed (overrides the config)")->check(CLI::NonNegativeNumber);
}

gq::RunConfig load(const Common& c) {
  gq::RunConfig cfg = gq::load_config(c.config);
  if (c.levels > 0) {
    cfg.levels = c.levels;
    cfg.raw["levels"] = c.levels;
  }
  if (c.seed >= 0) {
    cfg.seed = static_cast<std::uint64_t>(c.seed);
    cfg.raw["seed"] = cfg.seed;
  }
  return cfg;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error(c.out + ": cannot write");
  f << text;
}

int emit_report(const Common& c, const gq::Report& r) {
  emit(c, c.format == "json" ? r.to_json().dump(2) + "\n" : r.csv());
  std::cerr << r.rows.size() << " metrics, " << r.failures() << " failed\n";
  return r.all_pass() ? 0 : 1;
}

gq::SampledFunction load_function(const std::string& spec, const gq::Level& l) {
  if (spec.rfind("builtin", 0) == 0) {
    std::size_t i = 0;
    auto colon = spec.find(':');
    if (colon != std::string::npos) i = std::stoul(spec.substr(colon + 1));
    if (i >= l.tests.size()) throw gq::ConfigError("builtin test function " + std::to_string(i) + " is not configured");
    return l.tests[i];
  }
  return gq::read_function_csv(spec, l.model->grid());
}

gq::SymbolField load_symbol(const std::string& spec, const gq::RunConfig& cfg, const gq::Level& l) {
  if (spec == "builtin" || spec == "builtin:random") {
    std::mt19937_64 rng(cfg.seed);
    return gq::random_symbol(cfg, l, rng);
  }
  return gq::read_symbol_csv(spec, l.model);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group quantization checks"};
  app.require_subcommand(1);
  Common common;
  std::string symbol = "builtin", input = "builtin:0", input2 = "builtin:1", tau_name;

  std::vector<std::pair<std::string, std::string>> checks = {
      {"calibrate", "fit the Plancherel constants"},
      {"check-plancherel", "Parseval residuals"},
      {"check-semiinvariance", "Duflo-Moore semi-invariance"},
      {"check-duality", "Op/Wig duality"},
      {"check-covariance", "covariance under left translations"},
      {"check-abelian-oracle", "euclidean pipeline against the direct quadrature"},
      {"check-product", "direct product factorization"},
      {"check-roundtrip", "Op/Wig round trip and unitarity"},
      {"refine-study", "run the configured check over refinement levels"}};
  for (const auto& [name, help] : checks) add_common(app.add_subcommand(name, help), common);

  CLI::App* op = app.add_subcommand("op-apply", "apply Op(A) to a function");
  add_common(op, common);
  op->add_option("--symbol", symbol, "symbol CSV path or builtin");
  op->add_option("--input", input, "function CSV path or builtin[:index]");
  op->add_option("--tau", tau_name, "tau map (defaults to the first configured)");

  CLI::App* wig = app.add_subcommand("wigner", "Wigner transform of a pair of functions");
  add_common(wig, common);
  wig->add_option("--input", input, "u: function CSV path or builtin[:index]");
  wig->add_option("--input2", input2, "v: function CSV path or builtin[:index]");
  wig->add_option("--tau", tau_name, "tau map (defaults to the first configured)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  CLI::App* sub = app.get_subcommands().front();
  std::string name = sub->get_name();
  try {
    gq::RunConfig cfg = load(common);
    if (name == "refine-study") return emit_report(common, gq::refine_study(cfg));
    if (name == "op-apply" || name == "wigner") {
      gq::TauMap tau = tau_name.empty() ? cfg.taus.front() : gq::TauMap::parse(tau_name);
      try {
        tau.check(cfg.model.group);
      } catch (const std::invalid_argument& e) {
        throw gq::UnsupportedError(e.what());
      }
      gq::Level l = gq::make_level(cfg, cfg.levels - 1);
      std::ostringstream os;
      if (name == "op-apply") {
        gq::SymbolField A = load_symbol(symbol, cfg, l);
        gq::write_function_csv(os, gq::op_tau(A, tau).apply(load_function(input, l)));
      } else {
        auto rows = gq::symbol_rows(cfg.symbol.rows, *l.model->grid());
        gq::write_symbol_csv(os, gq::wig_rank_one(l.model, load_function(input, l), load_function(input2, l), tau, rows));
      }
      emit(common, os.str());
      return 0;
    }
    return emit_report(common, gq::run_check(cfg, name));
  } catch (const gq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const gq::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return 3;
  } catch (const gq::DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
