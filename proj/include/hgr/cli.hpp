#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hgr/audit.hpp"
#include "hgr/brace.hpp"
#include "hgr/counting.hpp"
#include "hgr/factory.hpp"
#include "hgr/group_spec.hpp"
#include "hgr/hopf_galois.hpp"
#include "hgr/report.hpp"
#include "hgr/store.hpp"

namespace hgr {

namespace exit_code {
inline constexpr int kOk = 0;          // realizable, audit pass, plain reports
inline constexpr int kError = 1;
inline constexpr int kUsage = 2;       // bad flags, bad spec text, unmet preconditions
inline constexpr int kNotRealizable = 3;
inline constexpr int kAuditFail = 4;
inline constexpr int kAuditVacuous = 5;
}  // namespace exit_code

namespace detail {

/// What a subcommand produced: the report, its exit code and a one-word verdict for the store.
struct Outcome {
  Report report;
  int code = exit_code::kOk;
  std::string verdict;
};

struct GlobalOptions {
  std::string format = "json";
  std::string store;
  unsigned threads = 1;
  bool seedless = false;
};

inline std::string type_name(const std::optional<std::size_t>& index, std::uint64_t order) {
  if (!index) return "unclassified";
  return to_string(catalog(order)[*index].spec);
}

inline Outcome cmd_realizable(const std::string& g_text, const std::string& n_text, const std::string& method,
                              ResultsStore* store, const SearchConfig& cfg) {
  const GroupSpec gs = parse_group_spec(g_text);
  const GroupSpec ns = parse_group_spec(n_text);
  const PermGroup g = build(gs, cfg);
  const PermGroup n = build(ns, cfg);
  if (g.order() != n.order()) {
    throw PreconditionError("|G| = " + std::to_string(g.order()) + " and |N| = " + std::to_string(n.order()) + " differ");
  }
  const PermGroup aut = store ? store->automorphisms(ns, n, cfg) : automorphism_group(n, cfg);

  Outcome o;
  Json& j = o.report.json = header("realizable");
  j["g"] = to_string(gs);
  j["n"] = to_string(ns);
  j["order"] = g.order();
  j["method"] = method;
  o.report.table.columns = {"method", "realizable", "detail"};

  std::optional<bool> by_cocycle, by_search;
  if (method == "cocycle" || method == "both") {
    const auto w = realizable_via_cocycles(g, n, aut, cfg);
    by_cocycle = w.has_value();
    j["cocycle"] = {{"realizable", *by_cocycle}, {"witness", w ? witness_json(*w) : Json(nullptr)}};
    o.report.table.rows.push_back(
        {"cocycle", yes_no(*by_cocycle), w ? "bijective crossed homomorphism found" : "no bijective crossed homomorphism"});
  } else {
    j["cocycle"] = nullptr;
  }
  if (method == "search" || method == "both") {
    const auto search = regular_subgroups(holomorph(n, aut), cfg);
    const std::size_t of_type = count_regular_of_type(g, search, cfg);
    by_search = of_type > 0;
    j["search"] = {{"realizable", *by_search},
                   {"strategy", search.strategy},
                   {"regular_subgroups", search.records.size()},
                   {"of_type_g", of_type}};
    o.report.table.rows.push_back({"search", yes_no(*by_search),
                                   std::to_string(of_type) + " of " + std::to_string(search.records.size()) +
                                       " regular subgroups of Hol(N) are isomorphic to G (" + search.strategy + ")"});
  } else {
    j["search"] = nullptr;
  }
  if (by_cocycle && by_search && *by_cocycle != *by_search) {
    throw InvariantViolation("cocycle and regular-subgroup engines disagree on (" + to_string(gs) + ", " + to_string(ns) + ")");
  }
  const bool realizable = by_cocycle ? *by_cocycle : *by_search;
  j["realizable"] = realizable;
  o.code = realizable ? exit_code::kOk : exit_code::kNotRealizable;
  o.verdict = realizable ? "realizable" : "not-realizable";
  return o;
}

inline Outcome cmd_regular_subgroups(const std::string& text, ResultsStore* store, const SearchConfig& cfg) {
  const GroupSpec ns = parse_group_spec(text);
  const PermGroup n = build(ns, cfg);
  const PermGroup aut = store ? store->automorphisms(ns, n, cfg) : automorphism_group(n, cfg);
  const HolomorphGroup hol = holomorph(n, aut);
  const auto search = regular_subgroups(hol, cfg);

  std::map<std::string, std::size_t> by_type;
  Json subs = Json::array();
  for (const auto& rec : search.records) {
    const std::string type = type_name(rec.iso_type, n.order());
    ++by_type[type];
    Json gens = Json::array();
    for (Elem x : generating_set(rec.subgroup, rec.subgroup.order())) {
      const auto [t, a] = hol.tag[hol.group.index(rec.subgroup.element(x))];
      gens.push_back({{"translation", n.element(t).to_string()}, {"automorphism", aut.element(a).to_string()}});
    }
    subs.push_back({{"type", type}, {"generators", std::move(gens)}});
  }
  Outcome o;
  Json& j = o.report.json = header("regular-subgroups");
  j["hol_of"] = to_string(ns);
  j["hol_order"] = hol.group.order();
  j["strategy"] = search.strategy;
  j["count"] = search.records.size();
  Json types = Json::array();
  o.report.table.columns = {"type", "count"};
  for (const auto& [type, count] : by_type) {
    types.push_back({{"type", type}, {"count", count}});
    o.report.table.rows.push_back({type, std::to_string(count)});
  }
  o.report.table.rows.push_back({"total", std::to_string(search.records.size())});
  j["types"] = std::move(types);
  j["subgroups"] = std::move(subs);
  o.verdict = std::to_string(search.records.size());
  return o;
}

inline Outcome cmd_braces(std::uint64_t order, bool with_tables, const SearchConfig& cfg) {
  Outcome o;
  Json& j = o.report.json = header("braces");
  j["order"] = order;
  Json braces = Json::array();
  std::map<std::pair<std::string, std::string>, std::size_t> by_types;
  std::size_t failures = 0;
  for (const auto& entry : catalog(order, cfg)) {
    const auto hol = holomorph(entry.group, cfg);
    for (const auto& rec : regular_subgroups(hol, cfg).records) {
      const SkewBrace b = brace_from_regular(rec.subgroup, entry.group);
      const bool ok = verify_brace(b);
      const bool in_hol = lambda_circ_in_hol(b, cfg);
      failures += !(ok && in_hol);
      const std::string add = to_string(entry.spec);
      const std::string mul = type_name(rec.iso_type, order);
      ++by_types[{add, mul}];
      Json bj{{"additive", add}, {"multiplicative", mul}, {"verify_brace", ok}, {"lambda_circ_in_hol", in_hol}};
      if (with_tables) {
        bj["add_table"] = b.add_table;
        bj["mul_table"] = b.mul_table;
      }
      braces.push_back(std::move(bj));
    }
  }
  j["count"] = braces.size();
  Json summary = Json::array();
  o.report.table.columns = {"additive", "multiplicative", "count"};
  for (const auto& [types, count] : by_types) {
    summary.push_back({{"additive", types.first}, {"multiplicative", types.second}, {"count", count}});
    o.report.table.rows.push_back({types.first, types.second, std::to_string(count)});
  }
  j["summary"] = std::move(summary);
  j["all_verified"] = failures == 0;
  j["braces"] = std::move(braces);
  if (failures) throw InvariantViolation(std::to_string(failures) + " braces failed verification");
  o.verdict = std::to_string(j["count"].get<std::size_t>());
  return o;
}

inline Outcome cmd_count(std::uint64_t n, bool direct, std::uint64_t budget_ms, const SearchConfig& cfg) {
  const CountReport c = count_hgs_dihedral(n, direct, std::chrono::milliseconds(budget_ms), cfg);
  Outcome o;
  o.report = count_report(c);
  o.verdict = big_text(c.e_formula);
  return o;
}

inline Outcome cmd_audit(const std::string& id, std::uint64_t n, const SearchConfig& cfg) {
  const AuditReport a = run_audit(id, n, cfg);
  Outcome o;
  o.report = audit_report(a);
  o.verdict = to_string(a.verdict);
  switch (a.verdict) {
    case Verdict::kPass: o.code = exit_code::kOk; break;
    case Verdict::kFail: o.code = exit_code::kAuditFail; break;
    case Verdict::kVacuous: o.code = exit_code::kAuditVacuous; break;
    case Verdict::kUnsupported: o.code = exit_code::kUsage; break;
  }
  return o;
}

inline Outcome cmd_catalog(std::uint64_t order, const SearchConfig& cfg) {
  Outcome o;
  Json& j = o.report.json = header("catalog");
  j["order"] = order;
  Json groups = Json::array();
  o.report.table.columns = {"index", "spec", "abelian", "generators"};
  const auto cat = catalog(order, cfg);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& g = cat[i].group;
    Json gens = Json::array();
    std::string gen_text;
    for (const auto& p : g.generators()) {
      gens.push_back(p.to_string());
      gen_text += (gen_text.empty() ? "" : " ") + p.to_string();
    }
    groups.push_back({{"index", i}, {"spec", to_string(cat[i].spec)}, {"abelian", g.is_abelian()}, {"generators", gens}});
    o.report.table.rows.push_back({std::to_string(i), to_string(cat[i].spec), yes_no(g.is_abelian()), gen_text});
  }
  j["count"] = cat.size();
  j["groups"] = std::move(groups);
  o.verdict = std::to_string(cat.size());
  return o;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

namespace detail {

/// Re-runs every stored command (without a store) and compares verdicts and exit codes.
inline Outcome cmd_replay(ResultsStore& store) {
  Outcome o;
  Json& j = o.report.json = header("replay");
  Json runs = Json::array();
  o.report.table.columns = {"index", "command", "recorded", "replayed", "reproduced"};
  std::size_t mismatches = 0;
  const auto records = store.records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    std::vector<std::string> args = rec.at("argv").get<std::vector<std::string>>();
    args.push_back("--format");
    args.push_back("json");
    std::ostringstream replay_out, replay_err;
    const int code = run_cli(args, replay_out, replay_err);
    std::string verdict;
    if (code != exit_code::kError && code != exit_code::kUsage) {
      verdict = Json::parse(replay_out.str()).value("verdict_text", "");
    }
    const bool same = code == rec.at("exit_code").get<int>() && verdict == rec.at("verdict").get<std::string>();
    mismatches += !same;
    std::string command;
    for (const auto& a : rec.at("argv")) command += (command.empty() ? "" : " ") + a.get<std::string>();
    runs.push_back({{"index", i},
                    {"argv", rec.at("argv")},
                    {"recorded_verdict", rec.at("verdict")},
                    {"replayed_verdict", verdict},
                    {"recorded_exit_code", rec.at("exit_code")},
                    {"replayed_exit_code", code},
                    {"reproduced", same}});
    o.report.table.rows.push_back({std::to_string(i), command, rec.at("verdict").get<std::string>(), verdict, yes_no(same)});
  }
  j["count"] = records.size();
  j["reproduced"] = records.size() - mismatches;
  j["runs"] = std::move(runs);
  o.code = mismatches ? exit_code::kError : exit_code::kOk;
  o.verdict = std::to_string(records.size() - mismatches) + "/" + std::to_string(records.size());
  return o;
}

}  // namespace detail

/// Entry point of the hgr tool. `args` excludes the program name. Stdout carries only the
/// report; diagnostics go to `err`.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf-Galois realizability and skew-brace toolkit for groups of order 2n", "hgr"};
  app.require_subcommand(1);
  app.fallthrough();
  detail::GlobalOptions global;
  app.add_option("--format", global.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--store", global.store, "results store directory (records.jsonl, aut-cache.jsonl)");
  app.add_option("--threads", global.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--seedless", global.seedless, "reserved; every computation is deterministic");

  std::string g_text, n_text, method = "both", hol_of, theorem;
  std::uint64_t order = 0, n = 0, budget_ms = 60000;
  bool direct = false, tables = false;

  auto* realizable = app.add_subcommand("realizable", "is (G, N) Hopf-Galois realizable");
  realizable->add_option("--g", g_text, "Galois group G")->required();
  realizable->add_option("--n", n_text, "type N")->required();
  realizable->add_option("--method", method, "engine")->check(CLI::IsMember({"cocycle", "search", "both"}));

  auto* regular = app.add_subcommand("regular-subgroups", "regular subgroups of Hol(N) by isomorphism type");
  regular->add_option("--hol-of", hol_of, "N")->required();

  auto* braces = app.add_subcommand("braces", "skew braces from regular subgroups across the catalog");
  braces->add_option("--order", order, "group order")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{30}));
  braces->add_flag("--tables", tables, "include operation tables");

  auto* count = app.add_subcommand("count-dihedral", "Hopf-Galois structure count for D_2n, n odd");
  count->add_option("--n", n, "odd n")->required();
  count->add_flag("--direct", direct, "also count regular subgroups of Sym(D_2n) directly");
  count->add_option("--budget-ms", budget_ms, "time budget for --direct");

  auto* audit = app.add_subcommand("audit", "check a theorem's implication over the catalog");
  audit->add_option("--theorem", theorem, "theorem id")->required()->check(CLI::IsMember(audit_ids()));
  audit->add_option("--n", n, "n (half-order; group order for p003, p004, c001)")->required();

  auto* cat = app.add_subcommand("catalog", "groups of the given order, one per isomorphism class");
  cat->add_option("--order", order, "group order")->required();

  auto* replay = app.add_subcommand("replay", "re-run every stored command and compare verdicts");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return exit_code::kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  SearchConfig cfg;
  cfg.threads = global.threads;
  std::unique_ptr<ResultsStore> store;
  detail::Outcome o;
  std::string command;
  try {
    if (!global.store.empty()) store = std::make_unique<ResultsStore>(global.store);
    if (realizable->parsed()) {
      command = "realizable";
      o = detail::cmd_realizable(g_text, n_text, method, store.get(), cfg);
    } else if (regular->parsed()) {
      command = "regular-subgroups";
      o = detail::cmd_regular_subgroups(hol_of, store.get(), cfg);
    } else if (braces->parsed()) {
      command = "braces";
      o = detail::cmd_braces(order, tables, cfg);
    } else if (count->parsed()) {
      command = "count-dihedral";
      o = detail::cmd_count(n, direct, budget_ms, cfg);
    } else if (audit->parsed()) {
      command = "audit";
      o = detail::cmd_audit(theorem, n, cfg);
    } else if (cat->parsed()) {
      command = "catalog";
      o = detail::cmd_catalog(order, cfg);
    } else if (replay->parsed()) {
      if (!store) throw PreconditionError("replay needs --store");
      o = detail::cmd_replay(*store);
      command = "replay";
    }
  } catch (const ParseError& e) {
    err << "spec syntax error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const SpecError& e) {
    err << "invalid group: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const PreconditionError& e) {
    err << "unsupported input: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kError;
  }

  o.report.json["verdict_text"] = o.verdict;
  const Format format = global.format == "csv" ? Format::kCsv : global.format == "table" ? Format::kTable : Format::kJson;
  write_report(out, o.report, format);

  if (store && command != "replay") {
    std::vector<std::string> argv;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--store" || args[i] == "--format") {
        ++i;
        continue;
      }
      if (args[i].rfind("--store=", 0) == 0 || args[i].rfind("--format=", 0) == 0) continue;
      argv.push_back(args[i]);
    }
    Json rec = header(command);
    rec["argv"] = argv;
    rec["verdict"] = o.verdict;
    rec["exit_code"] = o.code;
    rec["engine_version"] = kEngineVersion;
    rec["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    store->append_record(rec);
  }
  return o.code;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace hgr
