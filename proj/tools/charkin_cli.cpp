// charkin command-line front end. Talks to the engine exclusively through the
// C API in charkin.h; prints machine-readable error JSON on failure.
//
// Exit codes: 0 ok, 1 numerical failure, 2 config error.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "charkin.h"

namespace {

int finish(chk_status st) {
  if (st == CHK_OK) return 0;
  std::fprintf(stderr, "{\"error\": \"%s\", \"code\": %d}\n", chk_last_error(),
               static_cast<int>(st));
  if (st == CHK_ERR_NUMERIC) return 1;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"charkin — characteristic-function dynamics engine"};
  app.require_subcommand(1);

  std::string config, out_dir, out_file, dir_a, dir_b, in_path, format;
  int threads = 0;
  app.add_option("--threads", threads, "worker thread count (0 = hardware)")->capture_default_str();

  auto* evolve = app.add_subcommand("evolve", "run the configured time evolution");
  evolve->add_option("--config", config, "run configuration (JSON)")->required();
  evolve->add_option("--out", out_dir, "output directory (overrides config and CHARKIN_OUT)");

  auto* compare = app.add_subcommand("compare", "distance table between two run directories");
  compare->add_option("--a", dir_a, "first run directory")->required();
  compare->add_option("--b", dir_b, "second run directory")->required();
  compare->add_option("--out", out_file, "output CSV path")->required();

  auto* scan = app.add_subcommand("hbar-scan", "quantum-vs-classical RHS defect per hbar");
  scan->add_option("--config", config, "run configuration (JSON)")->required();
  scan->add_option("--out", out_file, "output CSV path")->required();

  auto* oracle = app.add_subcommand("oracle-check", "RHS vs Fock-oracle cross-check");
  oracle->add_option("--config", config, "run configuration (JSON)")->required();
  oracle->add_option("--out", out_file, "JSON report path");

  auto* convert = app.add_subcommand("convert", "convert a field dump (bin/csv)");
  convert->add_option("--in", in_path, "input dump (.chkn)")->required();
  convert->add_option("--out", out_file, "output path")->required();
  convert->add_option("--format", format, "csv or bin (default: from output suffix)");

  CLI11_PARSE(app, argc, argv);
  chk_set_threads(threads);

  if (evolve->parsed())
    return finish(chk_run_evolve(config.c_str(), out_dir.empty() ? nullptr : out_dir.c_str()));
  if (compare->parsed())
    return finish(chk_run_compare(dir_a.c_str(), dir_b.c_str(), out_file.c_str()));
  if (scan->parsed()) return finish(chk_run_hbar_scan(config.c_str(), out_file.c_str()));
  if (oracle->parsed())
    return finish(chk_run_oracle_check(config.c_str(), out_file.empty() ? nullptr : out_file.c_str()));
  if (convert->parsed())
    return finish(chk_run_convert(in_path.c_str(), out_file.c_str(),
                                  format.empty() ? nullptr : format.c_str()));
  return 2;
}
