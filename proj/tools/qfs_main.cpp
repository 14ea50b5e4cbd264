// Command-line front end for the qfs engine. Talks to the engine solely
// through the public C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qfs/qfs.h"

namespace {

struct CommonOpts {
  std::string input_file;
  std::string preset;
  bool json = false;
  std::optional<std::int64_t> max_height;
  std::optional<std::int64_t> sigma_budget;
  std::optional<std::int64_t> gb_budget;
  std::optional<std::int64_t> dump_levels;
  std::uint64_t seed = 0;  // accepted for surface uniformity; the
                           // pipeline commands are fully deterministic
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  auto* in = cmd->add_option("--input", opts.input_file,
                             "JSON job configuration file");
  auto* pre = cmd->add_option("--preset", opts.preset,
                              "built-in example configuration");
  in->excludes(pre);
  cmd->add_flag("--json", opts.json, "emit the structured JSON report");
  cmd->add_option("--max-height", opts.max_height,
                  "stop the ideal chain after N levels");
  cmd->add_option("--sigma-budget", opts.sigma_budget,
                  "iteration cap for the stable-ideal descent");
  cmd->add_option("--gb-budget", opts.gb_budget,
                  "Groebner reduction-step budget for the whole run");
  cmd->add_option("--dump-levels", opts.dump_levels,
                  "cap on chain levels included in dumps");
  cmd->add_option("--seed", opts.seed,
                  "unused by the deterministic pipeline commands");
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  qfs_string_free(s);
  return out;
}

int run_pipeline(const std::string& command, const CommonOpts& opts) {
  qfs_job* job = nullptr;
  char* error = nullptr;
  qfs_status st;
  if (!opts.preset.empty()) {
    st = qfs_job_from_preset(opts.preset.c_str(), &job, &error);
  } else if (!opts.input_file.empty()) {
    std::ifstream in(opts.input_file);
    if (!in) {
      std::cerr << "error: cannot open '" << opts.input_file << "'\n";
      return QFS_ERR_INPUT;
    }
    std::ostringstream text;
    text << in.rdbuf();
    st = qfs_job_from_json(text.str().c_str(), &job, &error);
  } else {
    std::cerr << "error: provide --input FILE or --preset NAME\n";
    return QFS_ERR_INPUT;
  }
  if (st != QFS_OK) {
    std::cerr << "error: " << take_string(error) << "\n";
    return st;
  }

  if (opts.max_height) qfs_job_set_limit(job, "max_height", *opts.max_height);
  if (opts.sigma_budget)
    qfs_job_set_limit(job, "sigma_budget", *opts.sigma_budget);
  if (opts.gb_budget) qfs_job_set_limit(job, "gb_budget", *opts.gb_budget);
  if (opts.dump_levels)
    qfs_job_set_limit(job, "dump_levels", *opts.dump_levels);

  qfs_report* report = nullptr;
  st = qfs_job_run(job, command.c_str(), &report, &error);
  qfs_job_free(job);
  if (st != QFS_OK) {
    std::cerr << "error: " << take_string(error) << "\n";
    return st;
  }
  std::cout << take_string(opts.json ? qfs_report_json(report)
                                     : qfs_report_text(report));
  int code = qfs_report_status(report);
  qfs_report_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-F-splitting heights, stable trace ideals, and "
               "perfectoid pure thresholds for complete-intersection lifts"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", std::string(qfs_version()));

  bool list_presets = false;
  app.add_flag("--list-presets", list_presets,
               "print the built-in preset names and exit");

  CommonOpts height_opts, ppt_opts, chain_opts;
  CLI::App* height_cmd =
      app.add_subcommand("height", "compute the quasi-F-splitting height");
  add_common(height_cmd, height_opts);
  CLI::App* ppt_cmd = app.add_subcommand(
      "ppt", "full pipeline: height, stable ideal, quasi-(F,F^inf), "
             "threshold, graded dispatch");
  add_common(ppt_cmd, ppt_opts);
  CLI::App* chain_cmd = app.add_subcommand(
      "chain", "full pipeline plus per-level generator dumps");
  add_common(chain_cmd, chain_opts);

  std::uint32_t st_p = 2, st_n = 3, st_trials = 100;
  std::uint64_t st_seed = 0;
  CLI::App* selftest_cmd = app.add_subcommand(
      "witt-selftest", "randomized property suite of the Witt kernel");
  selftest_cmd->add_option("--p", st_p, "prime (2, 3, or 5)");
  selftest_cmd->add_option("--n", st_n, "Witt length");
  selftest_cmd->add_option("--trials", st_trials, "trials per property");
  selftest_cmd->add_option("--seed", st_seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  if (list_presets) {
    std::cout << take_string(qfs_preset_list_json()) << "\n";
    return 0;
  }

  if (height_cmd->parsed()) return run_pipeline("height", height_opts);
  if (ppt_cmd->parsed()) return run_pipeline("ppt", ppt_opts);
  if (chain_cmd->parsed()) return run_pipeline("chain", chain_opts);
  if (selftest_cmd->parsed()) {
    char* summary = nullptr;
    qfs_status st = qfs_witt_selftest(st_p, st_n, st_trials, st_seed,
                                      &summary);
    std::cout << take_string(summary) << "\n";
    return st;
  }
  std::cerr << app.help();
  return QFS_ERR_INPUT;
}
