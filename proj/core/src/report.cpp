#include "srg/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace srg {

using nlohmann::json;

std::size_t Report::failed() const {
  std::size_t n = 0;
  for (const auto& it : items)
    if (it.status == "fail") ++n;
  return n;
}

std::size_t Report::undetermined() const {
  std::size_t n = 0;
  for (const auto& it : items)
    if (it.status == "undetermined") ++n;
  return n;
}

void Report::add(std::string id, std::string status, std::string detail,
                 std::string witness) {
  items.push_back({std::move(id), std::move(status), std::move(detail), std::move(witness)});
}

std::string report_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["version"] = r.version;
  j["summary"] = {{"items", r.items.size()},
                  {"failed", r.failed()},
                  {"undetermined", r.undetermined()}};
  json items = json::array();
  for (const auto& it : r.items) {
    json o;
    o["id"] = it.id;
    o["status"] = it.status;
    if (!it.detail.empty()) o["detail"] = it.detail;
    if (!it.witness.empty()) o["witness"] = it.witness;
    items.push_back(std::move(o));
  }
  j["items"] = std::move(items);
  return j.dump(2) + "\n";
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  for (const auto& it : r.items) {
    os << it.status << "  " << it.id;
    if (!it.detail.empty()) os << "  (" << it.detail << ")";
    os << "\n";
  }
  os << r.command << ": " << r.items.size() << " items, " << r.failed()
     << " failed, " << r.undetermined() << " undetermined\n";
  return os.str();
}

json matrix_json(const CycMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_reflections(const std::vector<ReflectionRow>& rows) {
  std::ostringstream os;
  os << "group,shephard_todd,reflections,minimal_d\n";
  for (const auto& r : rows)
    os << spec_str(r.g0) << ",G" << r.st_number << "," << r.reflections << ","
       << r.minimal_d << "\n";
  return os.str();
}

std::string csv_open(const std::vector<CaseStatus>& cases) {
  // group rows in first-seen g0 order, d ascending within a row
  std::vector<std::pair<FamilySpec, std::vector<unsigned>>> rows;
  for (const auto& c : cases) {
    auto it = std::find_if(rows.begin(), rows.end(),
                           [&](const auto& r) { return r.first == c.g0; });
    if (it == rows.end()) {
      rows.push_back({c.g0, {c.d}});
    } else {
      it->second.push_back(c.d);
    }
  }
  std::ostringstream os;
  os << "g0,open_d\n";
  for (auto& [g0, ds] : rows) {
    std::sort(ds.begin(), ds.end());
    os << spec_str(g0) << ",";
    for (std::size_t i = 0; i < ds.size(); ++i) os << (i ? " " : "") << ds[i];
    os << "\n";
  }
  return os.str();
}

std::string csv_champ(const std::vector<ChampCheckRow>& rows) {
  std::ostringstream os;
  os << "g0,shephard_todd,character,champ_index,k,d1,m,published_bound,"
        "recomputed_bound,match\n";
  for (const auto& r : rows) {
    os << spec_str(r.record.g0) << ",G" << r.record.st_number << ",";
    if (r.record.has_data) {
      os << r.record.character_label << "," << r.record.champ_index << ","
         << r.record.k << "," << r.record.d1() << "," << r.record.m << ","
         << r.record.published_lower_bound << "," << r.recomputed << ","
         << (r.match ? "yes" : "no");
    } else {
      os << ",,,,,,,";
    }
    os << "\n";
  }
  return os.str();
}

std::string csv_subgroups(const std::vector<SubgroupCheck>& checks) {
  std::ostringstream os;
  os << "sub,sup,expected,verdict,certificates,matches_table\n";
  for (const auto& c : checks) {
    os << spec_str(c.sub) << "," << spec_str(c.sup) << ","
       << (c.expected_contained ? "contained" : "absent") << ",";
    switch (c.verdict) {
      case PairVerdict::ContainedVerified: os << "contained"; break;
      case PairVerdict::AbsentCertified: os << "absent"; break;
      case PairVerdict::Undetermined: os << "undetermined"; break;
    }
    os << ",";
    for (std::size_t i = 0; i < c.certificates.size(); ++i)
      os << (i ? "|" : "") << c.certificates[i];
    os << "," << (c.matches_table ? "yes" : "no") << "\n";
  }
  return os.str();
}

namespace {
json case_json(const CaseStatus& c, std::vector<std::string> certificates = {}) {
  json o;
  o["g0"] = spec_str(c.g0);
  switch (c.g0.kind) {
    case FamilyKindId::MuT: o["kind"] = "muT"; break;
    case FamilyKindId::MuO: o["kind"] = "muO"; break;
    case FamilyKindId::MuI: o["kind"] = "muI"; break;
    case FamilyKindId::OT: o["kind"] = "OT"; break;
  }
  o["d"] = c.d;
  o["status"] = stage_name(c.stage);
  o["certificates"] = certificates;
  return o;
}
} // namespace

json json_reflections(const std::vector<ReflectionRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json o;
    o["group"] = spec_str(r.g0);
    o["shephard_todd"] = "G" + std::to_string(r.st_number);
    o["reflections"] = r.reflections;
    o["minimal_d"] = r.minimal_d;
    arr.push_back(std::move(o));
  }
  return arr;
}

json json_open(const std::vector<CaseStatus>& cases) {
  json arr = json::array();
  for (const auto& c : cases) arr.push_back(case_json(c));
  return arr;
}

json json_champ(const std::vector<ChampCheckRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json o;
    o["g0"] = spec_str(r.record.g0);
    o["shephard_todd"] = "G" + std::to_string(r.record.st_number);
    o["has_data"] = r.record.has_data;
    if (r.record.has_data) {
      o["character"] = r.record.character_label;
      o["champ_index"] = r.record.champ_index;
      o["k"] = r.record.k;
      o["d1"] = r.record.d1();
      o["m"] = r.record.m;
      o["published_bound"] = r.record.published_lower_bound;
      o["recomputed_bound"] = r.recomputed;
      o["match"] = r.match;
    }
    arr.push_back(std::move(o));
  }
  return arr;
}

json json_subgroups(const std::vector<SubgroupCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json o;
    o["sub"] = spec_str(c.sub);
    o["sup"] = spec_str(c.sup);
    o["expected"] = c.expected_contained ? "contained" : "absent";
    switch (c.verdict) {
      case PairVerdict::ContainedVerified: o["verdict"] = "contained"; break;
      case PairVerdict::AbsentCertified: o["verdict"] = "absent"; break;
      case PairVerdict::Undetermined: o["verdict"] = "undetermined"; break;
    }
    o["certificates"] = c.certificates;
    o["matches_table"] = c.matches_table;
    arr.push_back(std::move(o));
  }
  return arr;
}

json json_ws2(const WS2Report& rep) {
  json o;
  o["group_order"] = rep.group_order;
  o["orbit_size"] = rep.orbit_size;
  o["stabilizer_order"] = rep.stabilizer_order;
  o["stabilizer_matches_word"] = rep.stabilizer_matches_word;
  o["fixed_dim"] = rep.fixed_dim;
  o["complement_dim"] = rep.complement_dim;
  o["fixed_contains_paper_vectors"] = rep.fixed_contains_paper_vectors;
  o["complement_matches_w_basis"] = rep.complement_matches_w_basis;
  o["displayed_generators_in_hw"] = rep.displayed_generators_in_hw;
  o["form_preserved"] = rep.form_preserved;
  o["lagrangian_preserved"] = rep.lagrangian_preserved;
  o["molien_num_degrees"] = rep.molien_num_degrees;
  o["identified"] = rep.identified;
  o["ambient_form_solution_dim"] = rep.ambient_form.solution_dim;
  o["ambient_form_antisymmetric"] = rep.ambient_form.antisymmetric;
  o["ambient_form_nondegenerate"] = rep.ambient_form.nondegenerate;
  if (rep.full_checks_run)
    o["two_method_stabilizer_agreement"] = rep.two_method_stabilizer_agreement;
  o["all_pass"] = rep.all_pass();
  return o;
}

json json_inventory(const ReflectionInventory& inv) {
  json o;
  o["group"] = derived_str(inv.group);
  o["n_reflections"] = inv.n_reflections;
  o["symplectic_reflections"] = inv.symplectic_reflections.size();
  o["g0vee_part"] = inv.g0vee_part.size();
  o["dd_part"] = inv.dd_part.size();
  o["class_count"] = inv.classes.size();
  o["dd_class_count"] = inv.dd_classes.size();
  json reps = json::array();
  for (const auto& c : inv.classes) {
    json cls;
    cls["size"] = c.members.size();
    cls["representative"] = matrix_json(c.rep);
    reps.push_back(std::move(cls));
  }
  o["classes"] = std::move(reps);
  return o;
}

} // namespace srg
