#pragma once

#include "srg/verdict.hpp"
#include "srg/ws2.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace srg {

inline constexpr const char* kToolkitVersion = "1.0.0";

struct ReportItem {
  std::string id;
  std::string status; // "pass" | "fail" | "undetermined" | "info"
  std::string detail;
  std::string witness; // serialized element on failure, optional
};

struct Report {
  std::string command;
  std::string version = kToolkitVersion;
  std::vector<ReportItem> items;

  std::size_t failed() const;
  std::size_t undetermined() const;
  void add(std::string id, std::string status, std::string detail = "",
           std::string witness = "");
};

// UTF-8 JSON with lexicographically sorted keys, one trailing newline.
std::string report_json(const Report& r);
std::string report_text(const Report& r);

// matrix as array of rows of "c0 + c1*z(n)^e" strings
nlohmann::json matrix_json(const CycMatrix& m);

// --- table emitters (CSV column order mirrors the source table layouts) ----

std::string csv_reflections(const std::vector<ReflectionRow>& rows);
// one row per G_0: "g0,<d-list space separated>"
std::string csv_open(const std::vector<CaseStatus>& cases);
std::string csv_champ(const std::vector<ChampCheckRow>& rows);
std::string csv_subgroups(const std::vector<SubgroupCheck>& checks);

nlohmann::json json_reflections(const std::vector<ReflectionRow>& rows);
nlohmann::json json_open(const std::vector<CaseStatus>& cases);
nlohmann::json json_champ(const std::vector<ChampCheckRow>& rows);
nlohmann::json json_subgroups(const std::vector<SubgroupCheck>& checks);
nlohmann::json json_ws2(const WS2Report& rep);
nlohmann::json json_inventory(const ReflectionInventory& inv);

} // namespace srg
