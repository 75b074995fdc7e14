#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cache.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "version.hpp"

#include "permpow/constructions.hpp"

#include "naive_oracles.hpp"

using namespace permpow::cli;
using permpow::testing::TempFile;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// runs the built binary (path from PERMPOW_BIN) through the shell
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const char* bin = std::getenv("PERMPOW_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "PERMPOW_BIN must point at the permpow binary");
  const std::string command = env_prefix + std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[512];
  while (std::fgets(buffer, sizeof buffer, pipe)) result.output += buffer;
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

} // namespace

TEST_CASE("cache record json round trip") {
  CacheRecord r;
  r.kind = "count";
  r.parameters = {{"n", "5"}, {"patterns", "132;231"}, {"mode", "strong"}};
  r.count = "5";
  r.elapsed_millis = 7;
  r.tool_version = std::string(kToolVersion);
  r.timestamp = "2026-08-10T00:00:00Z";
  const auto line = r.to_json_line();
  const auto back = CacheRecord::from_json_line(line);
  CHECK(back.kind == r.kind);
  CHECK(back.parameters == r.parameters);
  CHECK(back.count == r.count);
  CHECK(back.elapsed_millis == r.elapsed_millis);
  CHECK(back.timestamp == r.timestamp);
}

TEST_CASE("cache append, match, mismatch") {
  TempFile cache;
  CacheRecord r;
  r.kind = "count";
  r.parameters = {{"n", "4"}, {"patterns", "231"}, {"mode", "plain"}};
  r.count = "14";
  r.tool_version = std::string(kToolVersion);
  r.timestamp = utc_timestamp();

  CHECK(cache_append_or_check(cache.path(), r) == CacheOutcome::appended);
  CHECK(cache_append_or_check(cache.path(), r) == CacheOutcome::matched);
  CacheRecord conflicting = r;
  conflicting.count = "15";
  CHECK(cache_append_or_check(cache.path(), conflicting) == CacheOutcome::mismatch);

  // the file still holds exactly one record
  const auto text = slurp(cache.path());
  CHECK(std::count(text.begin(), text.end(), '\n') == 1);
  CHECK(cache_find(cache.path(), r.kind, r.parameters)->count == "14");
  CHECK_FALSE(cache_find(cache.path(), "other", r.parameters).has_value());
}

TEST_CASE("timestamp shape") {
  const auto ts = utc_timestamp();
  CHECK(ts.size() == 20);
  CHECK(ts.back() == 'Z');
  CHECK(ts[4] == '-');
  CHECK(ts[10] == 'T');
}

TEST_CASE("config file") {
  TempFile file("# comment\n\nenum_bound = 9\nthreads=2\ncache = /tmp/alt.jsonl\n");
  const auto cfg = load_config(file.path());
  CHECK(cfg.enum_bound == 9);
  CHECK(cfg.threads == 2);
  CHECK(cfg.cache_path == "/tmp/alt.jsonl");
  CHECK(cfg.syt_bound == 12); // untouched default

  TempFile bad("no_such_key=1\n");
  CHECK_THROWS_AS(load_config(bad.path()), std::invalid_argument);
  CHECK_THROWS_AS(load_config("/no/such/config"), std::invalid_argument);
}

TEST_CASE("cmd_count prints and caches") {
  TempFile cache;
  ToolConfig cfg;
  cfg.cache_path = cache.path();
  CountOptions opt;
  opt.n = 5;
  opt.patterns = "132,231";
  opt.mode = "strong";

  std::ostringstream out, err;
  CHECK(cmd_count(opt, cfg, out, err) == kExitOk);
  CHECK(out.str() == "5\n");
  const auto cached = cache_find(cache.path(), "count",
                                 {{"n", "5"}, {"patterns", "132;231"}, {"mode", "strong"}});
  REQUIRE(cached.has_value());
  CHECK(cached->count == "5");

  // re-run reproduces the cached count; a forged cache entry fails loudly
  std::ostringstream out2, err2;
  CHECK(cmd_count(opt, cfg, out2, err2) == kExitOk);
  CHECK(out2.str() == out.str());
  {
    std::ofstream forge(cache.path(), std::ios::trunc);
    forge << R"({"schemaVersion":1,"kind":"count","parameters":{"mode":"strong","n":"5","patterns":"132;231"},"count":"6","elapsedMillis":0,"toolVersion":"x","timestamp":"t"})"
          << "\n";
  }
  std::ostringstream out3, err3;
  CHECK(cmd_count(opt, cfg, out3, err3) == kExitVerifier);
}

TEST_CASE("cmd_count witnesses") {
  TempFile cache;
  ToolConfig cfg;
  cfg.cache_path = cache.path();
  CountOptions opt;
  opt.n = 4;
  opt.patterns = "231";
  opt.mode = "powerful";
  opt.witnesses = true;
  std::ostringstream out, err;
  CHECK(cmd_count(opt, cfg, out, err) == kExitOk);
  CHECK(out.str() == "8\n1234\n1243\n1324\n1432\n2134\n2143\n3214\n4321\n");
}

TEST_CASE("cmd_sequence b-files") {
  ToolConfig cfg;
  TempFile bfile;

  SequenceOptions t4;
  t4.formula = "theorem4";
  t4.max_n = 6;
  t4.out_path = bfile.path();
  std::ostringstream out, err;
  CHECK(cmd_sequence(t4, cfg, out, err) == kExitOk);
  CHECK(slurp(bfile.path()) == "1 1\n2 2\n3 5\n4 9\n5 18\n6 37\n");

  SequenceOptions c1;
  c1.formula = "corollary1";
  c1.max_n = 3;
  c1.out_path = bfile.path();
  CHECK(cmd_sequence(c1, cfg, out, err) == kExitOk);
  CHECK(slurp(bfile.path()) == "1 1\n2 2\n3 3\n");

  SequenceOptions t2;
  t2.formula = "theorem2";
  t2.max_n = 5;
  t2.out_path = bfile.path();
  CHECK(cmd_sequence(t2, cfg, out, err) == kExitOk);
  CHECK(slurp(bfile.path()) == "1 1\n2 1\n3 2\n4 5\n5 9\n");

  // query route: data-only sequence export
  SequenceOptions q;
  q.patterns = "132";
  q.mode = "strong";
  q.max_n = 5;
  q.out_path = bfile.path();
  CHECK(cmd_sequence(q, cfg, out, err) == kExitOk);
  CHECK(slurp(bfile.path()) == "1 1\n2 2\n3 5\n4 12\n5 24\n");

  SequenceOptions bad;
  bad.formula = "theorem4";
  bad.max_n = 4;
  bad.out_path = "/no/such/dir/out.txt";
  CHECK(cmd_sequence(bad, cfg, out, err) == kExitIo);

  SequenceOptions both;
  both.formula = "theorem4";
  both.patterns = "132";
  both.max_n = 4;
  both.out_path = bfile.path();
  CHECK(cmd_sequence(both, cfg, out, err) == kExitUsage);
}

TEST_CASE("cmd_verify") {
  ToolConfig cfg;
  std::ostringstream out, err;
  VerifyOptions opt;
  opt.formula = "corollary1";
  opt.max_n = 6;
  CHECK(cmd_verify(opt, cfg, out, err) == kExitOk);
  CHECK(out.str().find("RESULT PASS") != std::string::npos);

  VerifyOptions json_opt = opt;
  json_opt.json = true;
  std::ostringstream jout;
  CHECK(cmd_verify(json_opt, cfg, jout, err) == kExitOk);
  CHECK(jout.str().find("\"passed\":true") != std::string::npos);

  VerifyOptions neither;
  CHECK(cmd_verify(neither, cfg, out, err) == kExitUsage);
  VerifyOptions unknown;
  unknown.suite = "nope";
  CHECK(cmd_verify(unknown, cfg, out, err) == kExitUsage);
}

TEST_CASE("cmd_witness verifier guard") {
  ToolConfig cfg;
  std::ostringstream out, err;
  WitnessOptions opt;
  opt.construction = "order12";
  CHECK(cmd_witness(opt, cfg, out, err) == kExitOk);
  CHECK(out.str() == "53827614\n");

  WitnessOptions unknown;
  unknown.construction = "nope";
  CHECK(cmd_witness(unknown, cfg, out, err) == kExitUsage);
}

TEST_CASE("binary: exit codes and determinism") {
  TempFile cache;
  const std::string cache_flag = " --cache " + cache.path();

  const auto count = run_cli("count --n 5 --patterns 132,231 --mode strong" + cache_flag);
  CHECK(count.exit_code == 0);
  CHECK(count.output == "5\n");
  const auto again = run_cli("count --n 5 --patterns 132,231 --mode strong" + cache_flag);
  CHECK(again.output == count.output);

  CHECK(run_cli("count --n 5" + cache_flag).exit_code == 2);                 // missing flags
  CHECK(run_cli("nonsense").exit_code == 2);                                 // unknown subcommand
  CHECK(run_cli("count --n 12 --patterns 123" + cache_flag).exit_code == 3); // over bound
  CHECK(run_cli("--help").exit_code == 0);

  // a corrupt candidates file trips the construction verifier
  TempFile bad_candidates("2134\n");
  CHECK(run_cli("witness --construction theorem1 --k 2 --candidates " + bad_candidates.path())
            .exit_code == 4);

  TempFile bfile;
  CHECK(run_cli("sequence --formula theorem4 --max-n 4 --out /no/such/dir/x.txt").exit_code ==
        5);
  CHECK(run_cli("sequence --formula theorem4 --max-n 4 --out " + bfile.path()).exit_code == 0);
  CHECK(slurp(bfile.path()) == "1 1\n2 2\n3 5\n4 9\n");
}

TEST_CASE("cmd_table") {
  ToolConfig cfg;
  std::ostringstream out, err;
  TableOptions opt;
  opt.max_n = 4;
  CHECK(cmd_table(opt, cfg, out, err) == kExitOk);
  CHECK(out.str() ==
        "n  |Omega_n^{1,2,3}(132)|  |PAv_n(132)|  |SAv_{n-1}(132)|\n"
        "1  1  1  1\n2  2  2  1\n3  5  5  2\n4  10  12  5\n");
  TableOptions bad;
  bad.kind = "nope";
  CHECK(cmd_table(bad, cfg, out, err) == kExitUsage);
}

TEST_CASE("binary: suites and witness round trip") {
  CHECK(run_cli("verify --suite rsk").exit_code == 0);
  CHECK(run_cli("verify --suite bounds --k 2").exit_code == 0);
  CHECK(run_cli("verify --suite nope").exit_code == 2);

  // every emitted witness parses back and passes its verifier
  const auto lines = run_cli("witness --construction theorem1 --k 2");
  CHECK(lines.exit_code == 0);
  std::istringstream in(lines.output);
  std::string line;
  std::vector<permpow::Permutation> parsed;
  while (std::getline(in, line)) parsed.push_back(permpow::Permutation::parse(line));
  const auto expected = permpow::theorem1_witnesses(2);
  REQUIRE(parsed.size() == expected.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i] == expected[i].assembled);
    CHECK_NOTHROW(permpow::verify_theorem1_witness(expected[i]));
  }
}

TEST_CASE("binary: PERMPOW_CACHE environment variable") {
  TempFile cache;
  const auto result = run_cli("count --n 3 --patterns 321 --mode strong",
                              "PERMPOW_CACHE=" + cache.path() + " ");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "5\n");
  CHECK(slurp(cache.path()).find("\"count\":\"5\"") != std::string::npos);
}
