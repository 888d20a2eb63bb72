#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hgr/error.hpp"
#include "hgr/factory.hpp"
#include "hgr/report.hpp"

namespace hgr {

/// Directory holding records.jsonl (one line per command run) and aut-cache.jsonl (Aut(N)
/// keyed by canonical spec text and engine version). Both files are append-only.
class ResultsStore {
 public:
  explicit ResultsStore(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path records_path() const { return dir_ / "records.jsonl"; }
  std::filesystem::path cache_path() const { return dir_ / "aut-cache.jsonl"; }

  void append_record(const Json& record) { append_line(records_path(), record); }

  std::vector<Json> records() const { return read_lines(records_path()); }

  /// Aut(N) for the group built from `spec`, read from the cache when present.
  PermGroup automorphisms(const GroupSpec& spec, const PermGroup& n, const SearchConfig& cfg = {}) {
    const std::string key = to_string(spec);
    if (auto hit = lookup(key, n.order())) return *hit;
    PermGroup aut = automorphism_group(n, cfg);
    Json entry;
    entry["schema_version"] = kSchemaVersion;
    entry["engine_version"] = kEngineVersion;
    entry["spec"] = key;
    entry["degree"] = n.order();
    Json elems = Json::array();
    for (const auto& p : aut.elements()) elems.push_back(p.images());
    entry["elements"] = std::move(elems);
    append_line(cache_path(), entry);
    return aut;
  }

  std::optional<PermGroup> lookup(const std::string& key, std::size_t degree) const {
    std::optional<PermGroup> found;
    for (const auto& e : read_lines(cache_path())) {
      if (e.value("spec", "") != key || e.value("engine_version", "") != kEngineVersion) continue;
      if (e.value("schema_version", 0) != kSchemaVersion || e.value("degree", std::size_t{0}) != degree) continue;
      std::vector<Permutation> elems;
      for (const auto& images : e.at("elements")) elems.emplace_back(images.get<std::vector<Point>>());
      found = PermGroup::from_elements(std::move(elems));
    }
    return found;
  }

 private:
  void append_line(const std::filesystem::path& path, const Json& j) {
    std::lock_guard lock(mutex_);
    std::ofstream out(path, std::ios::app);
    if (!out) throw Error("cannot append to " + path.string());
    out << j.dump() << '\n';
  }

  static std::vector<Json> read_lines(const std::filesystem::path& path) {
    std::vector<Json> out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      out.push_back(Json::parse(line));
    }
    return out;
  }

  std::filesystem::path dir_;
  std::mutex mutex_;
};

}  // namespace hgr
