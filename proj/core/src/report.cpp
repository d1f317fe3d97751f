#include "peakpoly/report.hpp"

#include <json.hpp>

namespace peakpoly {

using Json = nlohmann::ordered_json;

ReportDocument make_report(Suite suite, const SuiteConfig& config, std::vector<CheckResult> results) {
  ReportDocument doc;
  doc.suite = suite;
  doc.configuration = config;
  doc.aggregate = aggregate_pass(results);
  doc.results = std::move(results);
  return doc;
}

std::string to_json(const ReportDocument& report) {
  const SuiteConfig& c = report.configuration;
  Json config;
  config["suite"] = std::string(to_string(report.suite));
  config["nmax_exact"] = c.nmax_exact;
  config["oracle_perm_n"] = c.oracle_perm_n;
  config["oracle_signed_n"] = c.oracle_signed_n;
  config["oracle_perm_cap"] = c.oracle.perm_limit;
  config["oracle_signed_cap"] = c.oracle.signed_limit;
  config["gf_order"] = c.gf_order;
  config["roots_nmax"] = c.roots_nmax;
  config["clt_nmax"] = c.clt_nmax;
  config["peak_recurrence_nmax"] = c.peak_recurrence_nmax;

  Json results = Json::array();
  for (const auto& r : report.results) {
    Json entry;
    entry["check_id"] = r.check_id;
    entry["n_range"] = Json::array({r.n_lo, r.n_hi});
    entry["verdict"] = r.pass ? "pass" : "fail";
    if (r.witness) {
      Json w;
      w["n"] = r.witness->n;
      w["index"] = r.witness->index;
      w["lhs"] = r.witness->lhs;
      w["rhs"] = r.witness->rhs;
      if (!r.witness->detail.empty()) w["detail"] = r.witness->detail;
      entry["witness"] = std::move(w);
    }
    results.push_back(std::move(entry));
  }

  Json doc;
  doc["tool_version"] = report.tool_version;
  doc["configuration"] = std::move(config);
  doc["results"] = std::move(results);
  doc["aggregate"] = report.aggregate ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

std::string to_json_array(const std::vector<std::string>& values) { return Json(values).dump(); }

}  // namespace peakpoly
