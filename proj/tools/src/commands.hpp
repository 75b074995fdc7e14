#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "config.hpp"

namespace permpow::cli {

struct CountOptions {
  int n = 0;
  std::string patterns; // comma-separated pattern words
  std::string mode = "plain";
  std::string orders; // optional comma-separated order set
  bool witnesses = false;
};

struct VerifyOptions {
  std::string formula; // one of formula_ids()
  std::string suite;   // rsk | evacuation | symmetry | bounds
  int max_n = 9;
  int k = 2; // bounds suite parameter
  bool json = false;
};

struct WitnessOptions {
  std::string construction; // theorem1 | zeta | cyclic | w3412 | order12
  int k = 2;
  int r = 4;
  int n = 5;
  std::size_t limit = 0; // 0 = no limit
  std::string candidates;     // optional cached self-rc blocks (theorem1)
  std::string candidates_rot; // optional cached self-rot blocks (theorem1, odd k)
};

struct SequenceOptions {
  std::string formula;
  std::string patterns;
  std::string mode = "plain";
  std::string orders;
  int max_n = 0;
  std::string out_path;
};

struct TableOptions {
  std::string kind = "omega132";
  int max_n = 8;
  bool json = false;
};

int cmd_count(const CountOptions& opt, const ToolConfig& cfg, std::ostream& out,
              std::ostream& err);
int cmd_verify(const VerifyOptions& opt, const ToolConfig& cfg, std::ostream& out,
               std::ostream& err);
int cmd_witness(const WitnessOptions& opt, const ToolConfig& cfg, std::ostream& out,
                std::ostream& err);
int cmd_sequence(const SequenceOptions& opt, const ToolConfig& cfg, std::ostream& out,
                 std::ostream& err);
int cmd_table(const TableOptions& opt, const ToolConfig& cfg, std::ostream& out,
              std::ostream& err);

} // namespace permpow::cli
