#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hgr/audit.hpp"
#include "hgr/counting.hpp"
#include "hgr/hopf_galois.hpp"

namespace hgr {

using Json = nlohmann::ordered_json;

/// Bumped whenever a key is added, removed or changes type in any report.
inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kEngineVersion = "hgr 0.1.0";

/// Flat view of a report for csv and table output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// A rendered command result: the JSON document and its tabular view.
struct Report {
  Json json;
  Table table;
};

enum class Format { kJson, kCsv, kTable };

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << '\n';
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
}

inline void write_table(std::ostream& os, const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
    }
    os << s << '\n';
  };
  line(t.columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : t.rows) line(r);
}

inline void write_report(std::ostream& os, const Report& r, Format f) {
  switch (f) {
    case Format::kJson: os << r.json.dump(2) << '\n'; break;
    case Format::kCsv: write_csv(os, r.table); break;
    case Format::kTable: write_table(os, r.table); break;
  }
}

inline Json header(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

inline std::string big_text(const BigInt& v) { return v.str(); }

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

/// The bijection g and the image of f, written with N's elements as permutations.
inline Json witness_json(const CrossedHom& c) {
  Json j;
  Json g = Json::array();
  for (Elem x : c.g) g.push_back(c.n.element(x).to_string());
  Json f = Json::array();
  for (Elem a = 0; a < c.domain().order(); ++a) f.push_back(c.f.codomain.element(c.f(a)).to_string());
  j["g"] = std::move(g);
  j["f"] = std::move(f);
  j["cocycle_law_holds"] = c.satisfies_cocycle_law();
  return j;
}

inline Report audit_report(const AuditReport& a) {
  Report r;
  r.json = header("audit");
  r.json["theorem"] = a.theorem_id;
  r.json["order"] = a.order;
  r.json["verdict"] = to_string(a.verdict);
  r.json["domain"] = a.domain;
  r.json["notes"] = a.notes;
  Json inst = Json::array();
  for (const auto& i : a.instances) {
    inst.push_back({{"pair", i.pair},
                    {"status", i.status},
                    {"hypothesis", i.hypothesis},
                    {"conclusion", i.conclusion},
                    {"witness", i.witness}});
    r.table.rows.push_back({a.theorem_id, i.pair, i.status, yes_no(i.hypothesis), yes_no(i.conclusion), i.witness});
  }
  r.json["instances"] = std::move(inst);
  r.table.columns = {"theorem", "pair", "status", "hypothesis", "conclusion", "witness"};
  r.table.rows.push_back({a.theorem_id, "verdict", to_string(a.verdict), "", "", ""});
  return r;
}

inline Report count_report(const CountReport& c) {
  Report r;
  r.json = header("count-dihedral");
  r.json["n"] = c.n;
  Json chi_json = Json::object();
  for (const auto& [w, v] : c.chi_coefficients) chi_json[std::to_string(w)] = big_text(v);
  r.json["chi"] = std::move(chi_json);
  r.json["e_formula"] = big_text(c.e_formula);
  r.json["e_formula_by_degree"] = big_text(c.e_formula_by_degree);
  r.json["radical"] = c.radical;
  r.json["radical_is_burnside"] = c.radical_is_burnside;
  r.json["notes"] = c.notes;
  if (c.direct) {
    r.json["direct"] = {{"status", c.direct->status},
                        {"method", c.direct->method},
                        {"value", c.direct->value ? Json(big_text(*c.direct->value)) : Json(nullptr)},
                        {"detail", c.direct->detail}};
  } else {
    r.json["direct"] = nullptr;
  }
  r.json["agreement"] = to_string(c.agreement);

  r.table.columns = {"field", "value"};
  r.table.rows.push_back({"n", std::to_string(c.n)});
  for (const auto& [w, v] : c.chi_coefficients) r.table.rows.push_back({"chi(" + std::to_string(w) + ")", big_text(v)});
  r.table.rows.push_back({"e_formula", big_text(c.e_formula)});
  r.table.rows.push_back({"radical", std::to_string(c.radical)});
  r.table.rows.push_back({"radical_is_burnside", yes_no(c.radical_is_burnside)});
  if (c.direct) {
    r.table.rows.push_back({"direct", c.direct->value ? big_text(*c.direct->value) : c.direct->status});
  }
  r.table.rows.push_back({"agreement", to_string(c.agreement)});
  for (const auto& n : c.notes) r.table.rows.push_back({"note", n});
  return r;
}

}  // namespace hgr
