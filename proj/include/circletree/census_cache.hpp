#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "circletree/census.hpp"
#include "circletree/errors.hpp"
#include "circletree/version.hpp"

namespace circletree {

// On-disk census cache: one CSV per cache directory, one row per n. Rows
// written by a different kernel version are ignored on load and dropped on
// the next store.
struct CensusCacheRow {
  int n = 0;
  std::uint64_t f_n = 0;
  std::uint64_t f_mod_n = 0;
  std::int64_t p_n = -1;
  std::string kernel_version;
};

inline constexpr const char* kCensusCacheHeader = "n,f_n,f_mod_n,p_n,kernel_version";

inline std::filesystem::path census_cache_file(const std::filesystem::path& dir) {
  return dir / "census.csv";
}

inline std::vector<CensusCacheRow> load_census_cache(const std::filesystem::path& dir) {
  std::vector<CensusCacheRow> rows;
  std::ifstream in(census_cache_file(dir));
  if (!in) return rows;
  std::string line;
  if (!std::getline(in, line)) return rows;
  if (line != kCensusCacheHeader)
    throw DomainError("census cache has unexpected header: " + line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    CensusCacheRow row;
    try {
      std::getline(ls, field, ',');
      row.n = std::stoi(field);
      std::getline(ls, field, ',');
      row.f_n = std::stoull(field);
      std::getline(ls, field, ',');
      row.f_mod_n = std::stoull(field);
      std::getline(ls, field, ',');
      row.p_n = field.empty() ? -1 : std::stoll(field);
      std::getline(ls, row.kernel_version);
    } catch (const std::exception&) {
      throw DomainError("malformed census cache row: " + line);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::optional<CensusCacheRow> census_cache_lookup(const std::filesystem::path& dir, int n) {
  for (const CensusCacheRow& row : load_census_cache(dir))
    if (row.n == n && row.kernel_version == kKernelVersion) return row;
  return std::nullopt;
}

inline void census_cache_store(const std::filesystem::path& dir, const CensusReport& report) {
  std::vector<CensusCacheRow> rows;
  for (CensusCacheRow& row : load_census_cache(dir))
    if (row.n != report.n && row.kernel_version == kKernelVersion) rows.push_back(std::move(row));
  CensusCacheRow mine;
  mine.n = report.n;
  mine.f_n = report.f_n;
  mine.f_mod_n = report.f_mod_n;
  mine.p_n = report.p_n;
  mine.kernel_version = kKernelVersion;
  rows.push_back(std::move(mine));
  std::sort(rows.begin(), rows.end(),
            [](const CensusCacheRow& a, const CensusCacheRow& b) { return a.n < b.n; });

  std::filesystem::create_directories(dir);
  std::ofstream out(census_cache_file(dir), std::ios::trunc);
  if (!out) throw DomainError("cannot write census cache in " + dir.string());
  out << kCensusCacheHeader << "\n";
  for (const CensusCacheRow& row : rows) {
    out << row.n << ',' << row.f_n << ',' << row.f_mod_n << ',';
    if (row.p_n >= 0) out << row.p_n;
    out << ',' << row.kernel_version << "\n";
  }
}

// Census summary that goes through the cache when a directory is given.
inline CensusCacheRow census_summary(int n, CensusOptions options = {},
                                     const std::optional<std::filesystem::path>& cache_dir = {}) {
  if (cache_dir)
    if (auto hit = census_cache_lookup(*cache_dir, n)) return *hit;
  options.classify = n % 4 == 2;  // p_n is only needed (and defined) there
  const CensusReport report = count_f(n, options);
  CensusCacheRow row;
  row.n = n;
  row.f_n = report.f_n;
  row.f_mod_n = report.f_mod_n;
  row.p_n = report.p_n;
  row.kernel_version = kKernelVersion;
  if (cache_dir) census_cache_store(*cache_dir, report);
  return row;
}

}  // namespace circletree
