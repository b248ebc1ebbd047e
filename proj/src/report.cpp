#include "sdqm/report.hpp"

#include <cstdio>

namespace sdqm {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::ordered_json RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["model"] = model;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.status;
    jc["residual"] = fmt_double(c.residual);
    if (!c.note.empty()) jc["note"] = c.note;
    j["checks"].push_back(jc);
  }
  j["discrepancies"] = nlohmann::ordered_json::array();
  for (const auto& d : discrepancies) {
    nlohmann::ordered_json jd;
    jd["what"] = d.what;
    jd["where"] = d.where;
    jd["printed"] = d.printed;
    jd["computed"] = d.computed;
    j["discrepancies"].push_back(jd);
  }
  j["result"] = hard_failure() ? "fail" : "pass";
  return j;
}

std::string csv_escape(const std::string& field) {
  bool need = false;
  for (char c : field)
    if (c == ',' || c == '"' || c == '\n' || c == '\r') need = true;
  if (!need) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += csv_escape(fields[i]);
  }
  out += "\r\n";
  return out;
}

}  // namespace sdqm
