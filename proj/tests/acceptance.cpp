// One PASS/FAIL line per acceptance criterion. Runs the shipped configs
// in-process and drives the CLI binary for the exit-status contract.
//
//   gq_acceptance [configs-dir] [gq-binary] [scratch-dir]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "gq/checks.hpp"
#include "gq/config.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

fs::path configs_dir = GQ_CONFIG_DIR;
fs::path gq_binary = GQ_CLI_PATH;
fs::path scratch = fs::temp_directory_path();

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  double seconds = 0;
};

// run each config's own check; failing rows are kept as notes
Outcome run_configs(const std::vector<std::string>& names) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& n : names) {
    try {
      gq::RunConfig c = gq::load_config((configs_dir / (n + ".json")).string());
      gq::Report r = gq::run_check(c, c.check);
      double worst = 0;
      // ratio rows below the floor pass regardless of value, so they are left out
      for (const auto& row : r.rows)
        if (row.tolerance && *row.tolerance > 0 && !row.metric.ends_with("_ratio"))
          worst = std::max(worst, row.value / *row.tolerance);
      std::ostringstream s;
      s << n << ": " << r.rows.size() << " metrics, " << r.failures() << " failed, worst value/tol " << worst;
      o.notes.push_back(s.str());
      for (const auto& row : r.rows)
        if (!row.pass)
          o.notes.push_back("  " + row.metric + " level " + std::to_string(row.level) + " = " + gq::format_value(row.value));
      o.pass = o.pass && r.all_pass() && !r.rows.empty();
    } catch (const std::exception& e) {
      o.notes.push_back(n + ": error: " + e.what());
      o.pass = false;
    }
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

int run_cli(const std::string& args) {
  std::string cmd = "\"" + gq_binary.string() + "\" " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path write_json(const std::string& name, const json& j) {
  fs::path p = scratch / name;
  std::ofstream(p) << j.dump(2);
  return p;
}

Outcome cli_contract() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto expect = [&](const std::string& what, int got, int want) {
    o.notes.push_back(what + ": exit " + std::to_string(got) + " (want " + std::to_string(want) + ")");
    o.pass = o.pass && got == want;
  };
  fs::path cfg = configs_dir / "roundtrip_euclidean.json";
  fs::path a = scratch / "gq_accept_a.csv", b = scratch / "gq_accept_b.csv";
  expect("first run", run_cli("check-roundtrip --config \"" + cfg.string() + "\" --out \"" + a.string() + "\""), 0);
  expect("second run", run_cli("check-roundtrip --config \"" + cfg.string() + "\" --out \"" + b.string() + "\""), 0);
  std::string ra = slurp(a), rb = slurp(b);
  bool same = !ra.empty() && ra == rb;
  o.notes.push_back(same ? "metric rows identical" : "metric rows differ");
  o.pass = o.pass && same;

  fs::path ja = scratch / "gq_accept_a.json", jb = scratch / "gq_accept_b.json";
  run_cli("check-roundtrip --config \"" + cfg.string() + "\" --format json --out \"" + ja.string() + "\"");
  run_cli("check-roundtrip --config \"" + cfg.string() + "\" --format json --out \"" + jb.string() + "\"");
  bool same_json = !slurp(ja).empty() && slurp(ja) == slurp(jb);
  o.notes.push_back(same_json ? "json reports identical" : "json reports differ");
  o.pass = o.pass && same_json;

  json j = json::parse(slurp(cfg));
  j["tolerance"] = {{"exact", 1e-30}};
  fs::path tight = write_json("gq_accept_tight.json", j);
  int rc = run_cli("check-roundtrip --config \"" + tight.string() + "\"");
  o.notes.push_back("tightened exact tolerance: exit " + std::to_string(rc) + " (want nonzero)");
  o.pass = o.pass && rc != 0;
  expect("tightened tolerance, exit code", rc, 1);

  json bad = json::parse(slurp(cfg));
  bad["axes"][0]["count"] = "many";
  expect("malformed config", run_cli("check-roundtrip --config \"" + write_json("gq_accept_bad.json", bad).string() + "\""), 2);
  json weyl = json::parse(slurp(configs_dir / "roundtrip_affine.json"));
  weyl["tau"] = "euclidean_weyl";
  expect("weyl on affine", run_cli("check-roundtrip --config \"" + write_json("gq_accept_weyl.json", weyl).string() + "\""), 3);
  expect("no subcommand", run_cli(""), 2);

  for (const auto& p : {a, b, ja, jb, tight, scratch / "gq_accept_bad.json", scratch / "gq_accept_weyl.json"}) fs::remove(p);
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

bool report(int id, const std::string& title, Outcome o, double budget = 0) {
  bool in_time = budget <= 0 || o.seconds <= budget;
  bool pass = o.pass && in_time;
  std::printf("%s criterion %d: %s (%.1f s", pass ? "PASS" : "FAIL", id, title.c_str(), o.seconds);
  if (budget > 0) std::printf(", budget %.0f s", budget);
  std::printf(")\n");
  for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
  if (!in_time) std::printf("    over the runtime budget\n");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) configs_dir = argv[1];
  if (argc > 2) gq_binary = argv[2];
  if (argc > 3) scratch = argv[3];

  bool ok = true;
  ok &= report(1, "abelian oracle equivalence", run_configs({"oracle_euclidean"}), 60);
  ok &= report(2, "Duflo-Moore semi-invariance",
               run_configs({"semiinvariance_affine", "semiinvariance_bianchi_v", "semiinvariance_bianchi_vii"}), 30);
  ok &= report(3, "Parseval after calibration with decay",
               run_configs({"plancherel_euclidean", "plancherel_affine", "plancherel_bianchi_v"}), 600);
  ok &= report(4, "Op/Wig round trip and unitarity",
               run_configs({"roundtrip_euclidean", "roundtrip_affine", "roundtrip_bianchi_v"}), 600);
  ok &= report(5, "duality identity", run_configs({"duality_euclidean", "duality_affine", "duality_bianchi_v"}));
  ok &= report(6, "covariance and lemma residuals",
               run_configs({"covariance_euclidean", "covariance_affine", "covariance_bianchi_v"}));
  ok &= report(7, "product rule", run_configs({"product_euclidean", "product_affine_line", "plancherel_affine_line"}));
  ok &= report(8, "CLI determinism and exit status", cli_contract());
  return ok ? 0 : 1;
}
