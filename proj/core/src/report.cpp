#include "chc/report.hpp"

#include <cstdio>

namespace chc {

std::string decimal15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

nlohmann::json cyc_json(const Cyc& c) {
  Cyc m = c.minimized();
  nlohmann::json j;
  j["conductor"] = m.conductor();
  nlohmann::json num = nlohmann::json::array();
  nlohmann::json den = nlohmann::json::array();
  for (const Rat& r : m.power_basis_coeffs()) {
    num.push_back(r.get_num().get_str());
    den.push_back(r.get_den().get_str());
  }
  j["num"] = std::move(num);
  j["den"] = std::move(den);
  return j;
}

nlohmann::json mat_json(const Mat3x& M) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 3; ++j) row.push_back(cyc_json(M(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json record_json(const CensusRecord& r) {
  nlohmann::json j;
  j["p"] = r.p;
  j["tau"] = r.tau_id;
  auto [pos, zero, neg] = r.signature;
  j["signature"] = {pos, zero, neg};
  j["verdict"] = r.verdict;
  j["verdict_detail"] = r.verdict_detail;
  j["behaviour"] = r.behaviour;
  j["face_words"] = r.face_words;
  j["side_pairing"] = r.pairing_status;
  nlohmann::json cyc = nlohmann::json::array();
  for (const CycleAngle& c : r.cycles) {
    nlohmann::json e;
    e["word"] = c.word;
    e["angle_num"] = c.angle.num;
    e["angle_den"] = c.angle.den;
    e["interior"] = decimal15(c.total_interior);
    e["integral"] = c.integral;
    cyc.push_back(std::move(e));
  }
  j["cycle_angles"] = std::move(cyc);
  j["relations"] = r.relations;
  j["cusps"] = r.cusps;
  j["arithmeticity"] = r.arithmeticity;
  j["note"] = r.note;
  return j;
}

nlohmann::json census_report(const nlohmann::json& config,
                             const std::vector<CensusRecord>& records) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["config"] = config;
  nlohmann::json recs = nlohmann::json::array();
  for (const CensusRecord& r : records) recs.push_back(record_json(r));
  j["records"] = std::move(recs);
  return j;
}

std::string report_to_string(const nlohmann::json& report) {
  return report.dump(2) + "\n";
}

}  // namespace chc
