#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "permpow/constructions.hpp"
#include "permpow/enumerate.hpp"
#include "permpow/errors.hpp"
#include "permpow/series.hpp"
#include "permpow/tableaux.hpp"

#include "cache.hpp"
#include "version.hpp"

namespace permpow::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(sep, pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

AvoidanceMode parse_mode(const std::string& mode) {
  if (mode == "plain") return AvoidanceMode::plain;
  if (mode == "strong") return AvoidanceMode::strong;
  if (mode == "powerful") return AvoidanceMode::powerful;
  throw std::invalid_argument("unknown mode '" + mode + "' (plain|strong|powerful)");
}

std::vector<Permutation> parse_patterns(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("--patterns must be nonempty");
  std::vector<Permutation> out;
  for (const auto& piece : split(text, ',')) out.push_back(Permutation::parse(piece));
  return out;
}

std::set<long long> parse_orders(const std::string& text) {
  std::set<long long> out;
  for (const auto& piece : split(text, ',')) out.insert(std::stoll(piece));
  return out;
}

EnumerationLimits limits_from(const ToolConfig& cfg) {
  EnumerationLimits limits;
  limits.max_n = cfg.enum_bound;
  limits.threads = cfg.threads;
  limits.witness_cap_n = cfg.witness_cap;
  return limits;
}

/// Canonical cache key parameters for one counting query.
std::map<std::string, std::string> count_parameters(const AvoidanceQuery& q) {
  std::map<std::string, std::string> params;
  params["n"] = std::to_string(q.n);
  std::vector<std::string> patterns;
  for (const auto& t : q.patterns) patterns.push_back(t.str());
  std::sort(patterns.begin(), patterns.end());
  std::string joined;
  for (const auto& p : patterns) {
    if (!joined.empty()) joined.push_back(';');
    joined += p;
  }
  params["patterns"] = joined;
  params["mode"] = q.mode == AvoidanceMode::plain    ? "plain"
                   : q.mode == AvoidanceMode::strong ? "strong"
                                                     : "powerful";
  if (q.order_set) {
    std::string orders;
    for (long long o : *q.order_set) {
      if (!orders.empty()) orders.push_back(';');
      orders += std::to_string(o);
    }
    params["orders"] = orders;
  }
  return params;
}

struct CheckPrinter {
  std::ostream& out;
  bool json = false;
  nlohmann::json rows = nlohmann::json::array();
  bool all_ok = true;

  void row(const std::string& label, bool ok, const std::string& detail = "") {
    if (!ok) all_ok = false;
    if (json) {
      nlohmann::json j;
      j["label"] = label;
      j["ok"] = ok;
      if (!detail.empty()) j["detail"] = detail;
      rows.push_back(std::move(j));
    } else {
      out << (ok ? "PASS " : "FAIL ") << label;
      if (!detail.empty()) out << "  " << detail;
      out << '\n';
    }
  }

  int finish(const std::string& title) {
    if (json) {
      nlohmann::json j;
      j["suite"] = title;
      j["rows"] = std::move(rows);
      j["passed"] = all_ok;
      out << j.dump() << '\n';
    } else {
      out << "RESULT " << (all_ok ? "PASS" : "FAIL") << " (" << title << ")\n";
    }
    return all_ok ? kExitOk : kExitVerifier;
  }
};

void all_permutations(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    visit(Permutation(std::vector<int>(word)));
  } while (std::next_permutation(word.begin(), word.end()));
}

int suite_rsk(int max_n, CheckPrinter& printer) {
  const int top = std::min(max_n, 6);
  for (int n = 0; n <= top; ++n) {
    bool ok = true;
    std::string detail;
    all_permutations(n, [&](const Permutation& p) {
      if (!ok) return;
      const auto [P, Q] = rsk(p);
      const auto [Pi, Qi] = rsk(inverse(p));
      const auto [Pr, Qr] = rsk(reverse(p));
      const auto [Po, Qo] = rsk(rotate(p));
      const bool good = P.shape() == Q.shape() &&
                        (n == 0 || P.rows()[0].size() == static_cast<std::size_t>(lis(p))) &&
                        (n == 0 || P.rows().size() == static_cast<std::size_t>(lds(p))) &&
                        Pi == Q && Qi == P && Pr == transpose(P) &&
                        Qr == evacuate(transpose(Q)) && Po == transpose(Q) &&
                        Qo == evacuate(transpose(P)) &&
                        ((p == rotate(p)) ==
                         (P == transpose(Q) && is_self_evacuating(Q))) &&
                        ((p == reverse_complement(p)) ==
                         (is_self_evacuating(P) && is_self_evacuating(Q))) &&
                        rsk_inverse(P, Q) == p;
      if (!good) {
        ok = false;
        detail = "counterexample " + p.str();
      }
    });
    printer.row("rsk identities over S_" + std::to_string(n), ok, detail);
  }
  return printer.finish("rsk");
}

int suite_evacuation(const ToolConfig& cfg, CheckPrinter& printer) {
  for (int n = 0; n <= 8; ++n) {
    bool ok = true;
    for (const auto& shape : partitions_of(n))
      for (const auto& t : enumerate_syt(shape, cfg.syt_bound))
        if (evacuate(evacuate(t)) != t || evacuate(transpose(t)) != transpose(evacuate(t)))
          ok = false;
    printer.row("evacuation involution and transpose commutation, " + std::to_string(n) +
                    " boxes",
                ok);
  }
  for (int k = 1; k <= 3; ++k) {
    BigInt brute = 0;
    for (const auto& t : enumerate_syt(Partition::rectangle(k, k), cfg.syt_bound))
      if (is_self_evacuating(t)) ++brute;
    const BigInt closed = count_self_evacuating_rect(k);
    printer.row("self-evacuating " + std::to_string(k) + "x" + std::to_string(k) +
                    " count formula",
                brute == closed, "formula " + closed.str() + ", brute " + brute.str());
  }
  for (int n = 0; n <= 10; ++n) {
    bool ok = true;
    for (const auto& shape : partitions_of(n)) {
      if (hook_length_count(shape) !=
          static_cast<long long>(enumerate_syt(shape, std::max(cfg.syt_bound, 10)).size()))
        ok = false;
    }
    printer.row("hook-length formula vs enumeration, " + std::to_string(n) + " boxes", ok);
  }
  bool rect_ok = true;
  for (int p = 1; p <= 10; ++p)
    for (int q = 1; p * q <= 10; ++q)
      if (rect_count_via_barnes(p, q) != hook_length_count(Partition::rectangle(p, q)))
        rect_ok = false;
  printer.row("Barnes-G rectangle identity, pq <= 10", rect_ok);
  return printer.finish("evacuation");
}

int suite_symmetry(int max_n, CheckPrinter& printer) {
  const int top = std::min(max_n, 6);
  for (int n = 0; n <= top; ++n) {
    bool ok = true;
    const Permutation delta = Permutation::descending(n);
    all_permutations(n, [&](const Permutation& p) {
      if (!ok) return;
      ok = reverse(reverse(p)) == p && complement(complement(p)) == p &&
           rotate(rotate(rotate(rotate(p)))) == p &&
           rotate(rotate(p)) == reverse_complement(p) && reverse(p) == compose(p, delta) &&
           complement(p) == compose(delta, p) &&
           reverse_complement(p) == compose(delta, compose(p, delta)) &&
           power(p, order(p)) == Permutation::identity(n);
    });
    printer.row("plot symmetry algebra over S_" + std::to_string(n), ok);
  }
  {
    bool ok = true;
    all_permutations(3, [&](const Permutation& s) {
      all_permutations(3, [&](const Permutation& m) {
        for (long long k = 0; k <= 4; ++k)
          if (power(sum(s, m), k) != sum(power(s, k), power(m, k))) ok = false;
      });
    });
    printer.row("sum commutes with powers on S_3 x S_3", ok);
  }
  {
    bool ok = true;
    const Permutation p231 = Permutation::parse("231");
    const Permutation p312 = Permutation::parse("312");
    for (int n = 0; n <= top; ++n)
      all_permutations(n, [&](const Permutation& p) {
        if (is_layered(p) != (avoids(p, p231) && avoids(p, p312))) ok = false;
        if (is_layered(p) && power(p, 2) != Permutation::identity(n)) ok = false;
      });
    printer.row("layered = Av(231,312) and layered implies involution", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n <= std::min(top, 6); ++n)
      all_permutations(n, [&](const Permutation& p) {
        all_permutations(3, [&](const Permutation& t) {
          if (contains(p, t) != contains(reverse(p), reverse(t))) ok = false;
          if (contains(p, t) != contains(complement(p), complement(t))) ok = false;
          if (contains(p, t) != contains(inverse(p), inverse(t))) ok = false;
        });
      });
    printer.row("containment invariance under simultaneous symmetry", ok);
  }
  return printer.finish("symmetry");
}

int suite_bounds(const ToolConfig& cfg, int k, CheckPrinter& printer) {
  const auto [lower, upper] = sav_bounds(k);
  printer.row("bound formulas evaluated for k=" + std::to_string(k), lower <= upper,
              "lower " + lower.str() + ", upper " + upper.str());
  const long long cube = static_cast<long long>(k) * k * k;
  const auto limits = limits_from(cfg);
  if (cube <= limits.max_n) {
    const BigInt exact = sav_exact_small(k, limits);
    printer.row("exact strong-avoider count within bounds",
                lower <= exact && exact <= upper, "exact " + exact.str());
  }
  if (cube + 1 <= limits.max_n) {
    AvoidanceQuery q;
    q.n = static_cast<int>(cube) + 1;
    q.patterns = {Permutation::identity(k + 1)};
    q.mode = AvoidanceMode::strong;
    const BigInt above = enumerate(q, false, limits).count;
    printer.row("emptiness one past k^3", above == 0, "count " + above.str());
  }
  if (static_cast<long long>(k) * k <= limits.max_n) {
    const auto witnesses = theorem1_witnesses(k, kNoLimit, limits);
    printer.row("constructed witnesses verified",
                !witnesses.empty(), std::to_string(witnesses.size()) + " witnesses");
  }
  return printer.finish("bounds");
}

void print_formula_report(const VerifyReport& report, bool as_json, std::ostream& out) {
  if (as_json) {
    nlohmann::json j;
    j["formula"] = report.formula;
    j["status"] = report.status == FormulaStatus::theorem ? "theorem" : "conjecture";
    j["passed"] = report.passed;
    j["allMatch"] = report.all_match;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
      nlohmann::json r;
      r["label"] = row.label;
      r["expected"] = row.expected.str();
      r["actual"] = row.actual.str();
      r["ok"] = row.ok;
      j["rows"].push_back(std::move(r));
    }
    out << j.dump() << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& row : report.rows) width = std::max(width, row.label.size());
  out << "formula " << report.formula << " ("
      << (report.status == FormulaStatus::theorem ? "theorem" : "conjecture") << ")\n";
  for (const auto& row : report.rows) {
    const char* tag = row.ok ? "PASS" : report.status == FormulaStatus::theorem ? "FAIL" : "WARN";
    out << tag << ' ' << std::left << std::setw(static_cast<int>(width)) << row.label
        << "  expected " << row.expected.str() << "  got " << row.actual.str() << '\n';
  }
  out << "RESULT " << (report.passed ? (report.all_match ? "PASS" : "PASS (with WARN)") : "FAIL")
      << '\n';
}

} // namespace

int cmd_count(const CountOptions& opt, const ToolConfig& cfg, std::ostream& out,
              std::ostream& err) {
  AvoidanceQuery q;
  q.n = opt.n;
  q.patterns = parse_patterns(opt.patterns);
  q.mode = parse_mode(opt.mode);
  if (!opt.orders.empty()) q.order_set = parse_orders(opt.orders);

  const auto result = enumerate(q, opt.witnesses, limits_from(cfg));
  out << result.count.str() << '\n';
  if (opt.witnesses) {
    if (!result.witnesses) {
      err << "witnesses not retained: n exceeds witness_cap (" << cfg.witness_cap << ")\n";
    } else {
      for (const auto& w : *result.witnesses) out << w.str() << '\n';
    }
  }

  CacheRecord record;
  record.kind = "count";
  record.parameters = count_parameters(q);
  record.count = result.count.str();
  record.elapsed_millis = result.elapsed_millis;
  record.tool_version = std::string(kToolVersion);
  record.timestamp = utc_timestamp();
  const CacheOutcome outcome = cache_append_or_check(cfg.cache_path, record);
  if (outcome == CacheOutcome::mismatch) {
    err << "cache mismatch: stored count differs for this query (" << cfg.cache_path << ")\n";
    return kExitVerifier;
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opt, const ToolConfig& cfg, std::ostream& out,
               std::ostream& err) {
  if (opt.formula.empty() == opt.suite.empty()) {
    err << "verify: exactly one of --formula and --suite is required\n";
    return kExitUsage;
  }
  if (!opt.formula.empty()) {
    const auto report = verify_formula(opt.formula, 1, opt.max_n, limits_from(cfg));
    print_formula_report(report, opt.json, out);
    return report.passed ? kExitOk : kExitVerifier;
  }
  CheckPrinter printer{out, opt.json};
  if (opt.suite == "rsk") return suite_rsk(opt.max_n, printer);
  if (opt.suite == "evacuation") return suite_evacuation(cfg, printer);
  if (opt.suite == "symmetry") return suite_symmetry(opt.max_n, printer);
  if (opt.suite == "bounds") return suite_bounds(cfg, opt.k, printer);
  err << "verify: unknown suite '" << opt.suite << "' (rsk|evacuation|symmetry|bounds)\n";
  return kExitUsage;
}

int cmd_witness(const WitnessOptions& opt, const ToolConfig& cfg, std::ostream& out,
                std::ostream& err) {
  const std::size_t limit = opt.limit == 0 ? kNoLimit : opt.limit;
  if (opt.construction == "theorem1") {
    std::vector<Theorem1Witness> witnesses;
    if (!opt.candidates.empty()) {
      const auto rc = load_block_candidates(opt.candidates, opt.k, false);
      std::vector<Permutation> rot_list;
      if (opt.k % 2 == 1) {
        if (opt.candidates_rot.empty()) {
          err << "theorem1 with odd k needs --candidates-rot alongside --candidates\n";
          return kExitUsage;
        }
        rot_list = load_block_candidates(opt.candidates_rot, opt.k, true);
      }
      witnesses = theorem1_witnesses_from(opt.k, rc, rot_list, limit);
    } else {
      witnesses = theorem1_witnesses(opt.k, limit, limits_from(cfg));
    }
    for (const auto& w : witnesses) out << w.assembled.str() << '\n';
    return kExitOk;
  }
  if (opt.construction == "zeta") {
    verify_zeta(opt.k);
    out << zeta(opt.k).str() << '\n';
    return kExitOk;
  }
  if (opt.construction == "cyclic") {
    verify_cyclic_witness(opt.r, {Permutation::parse("2413")});
    out << cyclic_witness(opt.r).str() << '\n';
    return kExitOk;
  }
  if (opt.construction == "w3412") {
    verify_witness_3412(opt.n);
    out << witness_3412(opt.n).str() << '\n';
    return kExitOk;
  }
  if (opt.construction == "order12") {
    verify_example_order12();
    out << example_order12().str() << '\n';
    return kExitOk;
  }
  err << "witness: unknown construction '" << opt.construction
      << "' (theorem1|zeta|cyclic|w3412|order12)\n";
  return kExitUsage;
}

int cmd_sequence(const SequenceOptions& opt, const ToolConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  (void)out;
  if (opt.formula.empty() == opt.patterns.empty()) {
    err << "sequence: exactly one of --formula and --patterns is required\n";
    return kExitUsage;
  }
  if (opt.max_n < 1) {
    err << "sequence: --max-n must be positive\n";
    return kExitUsage;
  }
  std::vector<std::pair<int, BigInt>> values;
  if (!opt.formula.empty()) {
    if (opt.formula == "theorem2") {
      const auto coeffs = expand(theorem2_gf(), opt.max_n);
      for (int n = 1; n <= opt.max_n; ++n) values.emplace_back(n, coeffs[static_cast<std::size_t>(n)]);
    } else if (opt.formula == "theorem3") {
      for (int n = 2; n <= opt.max_n; ++n) values.emplace_back(n, theorem3_formula(n));
    } else if (opt.formula == "theorem4") {
      const auto coeffs = expand(theorem4_gf(), opt.max_n);
      for (int n = 1; n <= opt.max_n; ++n) values.emplace_back(n, coeffs[static_cast<std::size_t>(n)]);
    } else if (opt.formula == "corollary1") {
      for (int n = 1; n <= opt.max_n; ++n) values.emplace_back(n, corollary1_formula(n));
    } else if (opt.formula == "conjecture_321_1342") {
      for (int n = 1; n <= opt.max_n; ++n) values.emplace_back(n, conjecture_321_1342(n));
    } else if (opt.formula == "pav231_layered") {
      for (int n = 1; n <= opt.max_n; ++n)
        values.emplace_back(n, big_pow(2, static_cast<unsigned long long>(n - 1)));
    } else {
      err << "sequence: unknown formula '" << opt.formula << "'\n";
      return kExitUsage;
    }
  } else {
    AvoidanceQuery q;
    q.patterns = parse_patterns(opt.patterns);
    q.mode = parse_mode(opt.mode);
    if (!opt.orders.empty()) q.order_set = parse_orders(opt.orders);
    for (int n = 1; n <= opt.max_n; ++n) {
      q.n = n;
      values.emplace_back(n, enumerate(q, false, limits_from(cfg)).count);
    }
  }
  std::ofstream file(opt.out_path);
  if (!file) {
    err << "sequence: cannot open output file '" << opt.out_path << "'\n";
    return kExitIo;
  }
  for (const auto& [n, value] : values) file << n << ' ' << value.str() << '\n';
  if (!file.good()) {
    err << "sequence: write failure on '" << opt.out_path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_table(const TableOptions& opt, const ToolConfig& cfg, std::ostream& out,
              std::ostream& err) {
  if (opt.kind != "omega132") {
    err << "table: unknown kind '" << opt.kind << "' (omega132)\n";
    return kExitUsage;
  }
  // counts side by side, data only: no asymptotic claim is evaluated
  const auto rows = omega132_comparison(opt.max_n, limits_from(cfg));
  if (opt.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json r;
      r["n"] = row.n;
      r["orderAtMost3_132"] = row.order_at_most_3.str();
      r["powerful_132"] = row.powerful.str();
      r["strong_132_shorter"] = row.strong_shorter.str();
      j.push_back(std::move(r));
    }
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "n  |Omega_n^{1,2,3}(132)|  |PAv_n(132)|  |SAv_{n-1}(132)|\n";
  for (const auto& row : rows)
    out << row.n << "  " << row.order_at_most_3.str() << "  " << row.powerful.str() << "  "
        << row.strong_shorter.str() << '\n';
  return kExitOk;
}

} // namespace permpow::cli
