// srg: exact-arithmetic toolkit for the symplectically primitive, complex
// imprimitive symplectic reflection groups. Subcommands generate the
// classification tables, verify the structural facts behind them, list
// reflection inventories, and run the rank-4 stabilizer pipeline on C^8.

#include "srg/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace srg;
using nlohmann::json;

constexpr int kExitFailures = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitBadOutput = 3;
constexpr int kExitCapOverflow = 4;

struct Options {
  std::string format = "text"; // json | csv | text
  std::string out;             // empty = stdout
  std::string cache;
  std::size_t cap = kDefaultCap;
  unsigned threads = 0; // 0 = auto; current computations are sequential
  std::uint64_t seed = kDefaultSeed;
};

struct Output {
  std::string payload;
  int exit_code = 0;
};

void emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open output path " + opt.out);
  f << payload;
  if (!f.good()) throw std::ios_base::failure("cannot write output path " + opt.out);
}

std::string wrap_json(const std::string& command, const json& data,
                      std::size_t failed, std::size_t undetermined) {
  json j;
  j["command"] = command;
  j["version"] = kToolkitVersion;
  j["summary"] = {{"failed", failed}, {"undetermined", undetermined}};
  j["data"] = data;
  return j.dump(2) + "\n";
}

Output run_tables_reflections(const Options& opt) {
  auto rows = table_reflections();
  Output out;
  if (opt.format == "csv") {
    out.payload = csv_reflections(rows);
  } else if (opt.format == "json") {
    out.payload = wrap_json("tables reflections", json_reflections(rows), 0, 0);
  } else {
    std::ostringstream os;
    for (const auto& r : rows)
      os << spec_str(r.g0) << "  G" << r.st_number << "  reflections=" << r.reflections
         << "  minimal_d=" << r.minimal_d << "\n";
    out.payload = os.str();
  }
  return out;
}

Output run_tables_open(const Options& opt, const std::string& stage) {
  std::vector<CaseStatus> cases;
  if (stage == "crude") {
    for (const FamilySpec& g0 : table1_specs())
      for (const CaseStatus& c : open_after_crude(g0)) cases.push_back(c);
  } else {
    cases = open_after_refined();
  }
  Output out;
  if (opt.format == "csv") {
    out.payload = csv_open(cases);
  } else if (opt.format == "json") {
    out.payload = wrap_json("tables open --stage " + stage, json_open(cases), 0, 0);
  } else {
    std::ostringstream os;
    os << cases.size() << " cases after " << stage << " stage\n";
    out.payload = csv_open(cases) + os.str();
  }
  return out;
}

Output run_tables_champ(const Options& opt) {
  auto rows = table_champ_check();
  std::size_t failed = 0;
  for (const auto& r : rows)
    if (!r.match) ++failed;
  Output out;
  out.exit_code = failed ? kExitFailures : 0;
  if (opt.format == "csv") {
    out.payload = csv_champ(rows);
  } else if (opt.format == "json") {
    out.payload = wrap_json("tables champ", json_champ(rows), failed, 0);
  } else {
    std::ostringstream os;
    os << csv_champ(rows) << failed << " bound mismatches\n";
    out.payload = os.str();
  }
  return out;
}

Output run_verify_subgroups(const Options& opt) {
  auto checks = verify_table2();
  std::size_t failed = 0, undet = 0;
  for (const auto& c : checks) {
    if (!c.matches_table) ++failed;
    if (c.verdict == PairVerdict::Undetermined) ++undet;
  }
  Output out;
  out.exit_code = failed ? kExitFailures : 0;
  if (opt.format == "csv") {
    out.payload = csv_subgroups(checks);
  } else if (opt.format == "json") {
    out.payload = wrap_json("verify subgroups", json_subgroups(checks), failed, undet);
  } else {
    std::ostringstream os;
    os << csv_subgroups(checks) << checks.size() << " pairs, " << failed
       << " table mismatches, " << undet << " undetermined\n";
    out.payload = os.str();
  }
  return out;
}

Output run_verify_lemmas(const Options& opt, const std::string& spec_text) {
  std::vector<FamilySpec> specs;
  if (!spec_text.empty()) {
    specs.push_back(parse_spec(spec_text));
  } else {
    for (const FamilySpec& g0 : table1_specs())
      for (const CaseStatus& c : open_after_crude(g0))
        specs.push_back(FamilySpec{g0.kind, c.d});
  }
  Report rep;
  rep.command = "verify lemmas";
  for (const FamilySpec& s : specs) {
    for (const LemmaCheck& c : verify_lemmas(s, opt.seed))
      rep.add(spec_str(s) + "/" + c.name, c.pass ? "pass" : "fail", c.detail);
  }
  Output out;
  out.exit_code = rep.failed() ? kExitFailures : 0;
  out.payload = opt.format == "json" ? report_json(rep) : report_text(rep);
  return out;
}

Output run_inventory(const Options& opt, const std::string& spec_text) {
  FamilySpec spec = parse_spec(spec_text);
  Output out;
  try {
    ReflectionInventory inv = inventory(spec);
    if (opt.format == "json") {
      out.payload = wrap_json("inventory", json_inventory(inv), 0, 0);
    } else {
      std::ostringstream os;
      os << derived_str(inv.group) << ": N=" << inv.n_reflections
         << " |S(E(G))|=" << inv.symplectic_reflections.size()
         << " classes=" << inv.classes.size()
         << " dd_classes=" << inv.dd_classes.size() << "\n";
      out.payload = os.str();
    }
  } catch (const lemma_violation_error& e) {
    Report rep;
    rep.command = "inventory";
    rep.add(spec_str(spec), "fail", e.what(), e.witness);
    out.payload = opt.format == "json" ? report_json(rep) : report_text(rep);
    out.exit_code = kExitFailures;
  }
  return out;
}

Output run_ws2(const Options& opt, bool full) {
  FiniteMatrixGroup w = build_ws2(opt.cap, opt.cache);
  WS2Report rep = stabilizer_pipeline(w, full);
  Output out;
  out.exit_code = rep.all_pass() ? 0 : kExitFailures;
  if (opt.format == "json") {
    out.payload = wrap_json("ws2", json_ws2(rep), rep.all_pass() ? 0 : 1, 0);
  } else {
    std::ostringstream os;
    json j = json_ws2(rep);
    for (auto it = j.begin(); it != j.end(); ++it)
      os << it.key() << " = " << it.value().dump() << "\n";
    out.payload = os.str();
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for symplectic reflection group classification data"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format: json, csv, text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", opt.out, "write output to this path instead of stdout");
  app.add_option("--cache", opt.cache, "directory for the element-set cache");
  app.add_option("--cap", opt.cap, "element cap for closures");
  app.add_option("--threads", opt.threads, "thread budget (informational)");
  app.add_option("--seed", opt.seed, "seed for randomized spot checks");

  auto* tables = app.add_subcommand("tables", "generate classification tables");
  auto* t_refl = tables->add_subcommand("reflections", "reflection counts and crude bounds");
  auto* t_open = tables->add_subcommand("open", "open cases per stage");
  std::string stage = "crude";
  t_open->add_option("--stage", stage, "crude or refined")
      ->check(CLI::IsMember({"crude", "refined"}));
  auto* t_champ = tables->add_subcommand("champ", "module data with recomputed bounds");

  auto* verify = app.add_subcommand("verify", "verify structural facts");
  auto* v_sub = verify->add_subcommand("subgroups", "subgroup-relation table");
  auto* v_lem = verify->add_subcommand("lemmas", "per-group lemma suite");
  std::string lemma_spec;
  v_lem->add_option("--spec", lemma_spec, "single family spec, e.g. muT:18");

  auto* inv_cmd = app.add_subcommand("inventory", "reflection inventory of one group");
  std::string inv_spec;
  inv_cmd->add_option("--spec", inv_spec, "family spec, e.g. muT:6")->required();

  auto* ws2_cmd = app.add_subcommand("ws2", "rank-4 stabilizer pipeline on C^8");
  bool ws2_full = false;
  ws2_cmd->add_flag("--full", ws2_full, "include the two-method stabilizer cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadConfig;
  }

  if (const char* env = std::getenv("SRG_CACHE"); env && *env) opt.cache = env;

  // format/command compatibility
  bool csv_ok = t_refl->parsed() || t_open->parsed() || t_champ->parsed() || v_sub->parsed();
  if (opt.format == "csv" && !csv_ok) {
    std::cerr << "error: --format csv is only available for tables and verify subgroups\n";
    return kExitBadConfig;
  }

  try {
    Output out;
    if (t_refl->parsed()) out = run_tables_reflections(opt);
    else if (t_open->parsed()) out = run_tables_open(opt, stage);
    else if (t_champ->parsed()) out = run_tables_champ(opt);
    else if (v_sub->parsed()) out = run_verify_subgroups(opt);
    else if (v_lem->parsed()) out = run_verify_lemmas(opt, lemma_spec);
    else if (inv_cmd->parsed()) out = run_inventory(opt, inv_spec);
    else if (ws2_cmd->parsed()) out = run_ws2(opt, ws2_full);
    else {
      std::cerr << "error: missing subcommand\n";
      return kExitBadConfig;
    }
    emit(opt, out.payload);
    return out.exit_code;
  } catch (const spec_parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const family_constraint_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const closure_overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapOverflow;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadOutput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailures;
  }
}
