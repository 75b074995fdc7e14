#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "permpow/errors.hpp"

#include "commands.hpp"
#include "config.hpp"
#include "version.hpp"

namespace {

using namespace permpow::cli;

struct GlobalOptions {
  std::string config_file;
  std::string cache_path;
  int threads = 0;
  int enum_bound = 0;
  int syt_bound = 0;
};

ToolConfig resolve_config(const GlobalOptions& global) {
  ToolConfig cfg;
  if (!global.config_file.empty()) cfg = load_config(global.config_file);
  // cache path: flag > PERMPOW_CACHE > config file > default
  if (const char* env = std::getenv("PERMPOW_CACHE"); env && *env) cfg.cache_path = env;
  if (!global.cache_path.empty()) cfg.cache_path = global.cache_path;
  if (global.threads > 0) cfg.threads = global.threads;
  if (global.enum_bound > 0) cfg.enum_bound = global.enum_bound;
  if (global.syt_bound > 0) cfg.syt_bound = global.syt_bound;
  return cfg;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"pattern-avoiding permutation powers: enumeration, verification, witnesses"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--config", global.config_file, "key=value config file");
  app.add_option("--cache", global.cache_path, "result cache path (JSON lines)");
  app.add_option("--threads", global.threads, "search subtree parallelism");
  app.add_option("--enum-bound", global.enum_bound, "maximum permutation length for enumeration");
  app.add_option("--syt-bound", global.syt_bound, "maximum boxes for tableau enumeration");

  CountOptions count_opt;
  auto* count = app.add_subcommand("count", "count permutations satisfying an avoidance query");
  count->fallthrough();
  count->add_option("--n", count_opt.n, "permutation length")->required();
  count->add_option("--patterns", count_opt.patterns, "comma-separated patterns")->required();
  count->add_option("--mode", count_opt.mode, "plain|strong|powerful");
  count->add_option("--orders", count_opt.orders, "comma-separated group orders to keep");
  count->add_flag("--witnesses", count_opt.witnesses, "also print the counted permutations");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "check formulas or property suites against oracles");
  verify->fallthrough();
  verify->add_option("--formula", verify_opt.formula, "formula identifier");
  verify->add_option("--suite", verify_opt.suite, "rsk|evacuation|symmetry|bounds");
  verify->add_option("--max-n", verify_opt.max_n,
                     "largest length to check (exhaustive property suites cap at 6)");
  verify->add_option("--k", verify_opt.k, "bounds suite parameter");
  verify->add_flag("--json", verify_opt.json, "machine-readable report");

  WitnessOptions witness_opt;
  auto* witness = app.add_subcommand("witness", "emit verified witness constructions");
  witness->fallthrough();
  witness->add_option("--construction", witness_opt.construction,
                      "theorem1|zeta|cyclic|w3412|order12")
      ->required();
  witness->add_option("--k", witness_opt.k, "block parameter (theorem1, zeta)");
  witness->add_option("--r", witness_opt.r, "cycle length (cyclic)");
  witness->add_option("--n", witness_opt.n, "length (w3412)");
  witness->add_option("--limit", witness_opt.limit, "maximum number of witnesses");
  witness->add_option("--candidates", witness_opt.candidates,
                      "cached self-rc block file (theorem1)");
  witness->add_option("--candidates-rot", witness_opt.candidates_rot,
                      "cached self-rotation block file (theorem1, odd k)");

  TableOptions table_opt;
  auto* table = app.add_subcommand("table", "side-by-side count comparison tables (data only)");
  table->fallthrough();
  table->add_option("--kind", table_opt.kind, "table identifier (omega132)");
  table->add_option("--max-n", table_opt.max_n, "largest length to tabulate");
  table->add_flag("--json", table_opt.json, "machine-readable rows");

  SequenceOptions seq_opt;
  auto* sequence = app.add_subcommand("sequence", "export an OEIS-style b-file");
  sequence->fallthrough();
  sequence->add_option("--formula", seq_opt.formula, "formula identifier");
  sequence->add_option("--patterns", seq_opt.patterns, "comma-separated patterns");
  sequence->add_option("--mode", seq_opt.mode, "plain|strong|powerful");
  sequence->add_option("--orders", seq_opt.orders, "comma-separated group orders to keep");
  sequence->add_option("--max-n", seq_opt.max_n, "largest length to export")->required();
  sequence->add_option("--out", seq_opt.out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const ToolConfig cfg = resolve_config(global);
    if (count->parsed()) return cmd_count(count_opt, cfg, std::cout, std::cerr);
    if (verify->parsed()) return cmd_verify(verify_opt, cfg, std::cout, std::cerr);
    if (witness->parsed()) return cmd_witness(witness_opt, cfg, std::cout, std::cerr);
    if (sequence->parsed()) return cmd_sequence(seq_opt, cfg, std::cout, std::cerr);
    if (table->parsed()) return cmd_table(table_opt, cfg, std::cout, std::cerr);
    return kExitUsage;
  } catch (const permpow::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const permpow::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerifier;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
