#include "supmod/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace supmod {

namespace {

using ojson = nlohmann::ordered_json;

ojson number(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

double read_number(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

CheckStatus parse_status(const std::string& s) {
  for (auto st : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Degenerate})
    if (to_string(st) == s) return st;
  throw std::invalid_argument("report json: unknown status '" + s + "'");
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string report_to_json(const InequalityReport& report) {
  ojson j;
  j["space_id"] = report.space_id;
  j["config_fingerprint"] = report.config_fingerprint;
  auto entries = ojson::array();
  for (const auto& e : report.entries) {
    ojson o;
    o["check_id"] = e.check_id;
    o["param"] = number(e.param);
    o["lhs"] = number(e.lhs);
    o["rhs"] = number(e.rhs);
    o["margin"] = number(e.margin);
    o["tolerance"] = number(e.tolerance);
    o["status"] = std::string(to_string(e.status));
    if (!e.witness.empty()) {
      ojson w;
      for (const auto& [name, v] : e.witness) w[name] = v;
      o["witness"] = std::move(w);
    }
    entries.push_back(std::move(o));
  }
  j["entries"] = std::move(entries);
  const auto s = report.summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"degenerate", s.degenerate}};
  return j.dump(2) + "\n";
}

InequalityReport report_from_json(std::string_view text) {
  InequalityReport r;
  try {
    const auto j = nlohmann::json::parse(text);
    r.space_id = j.at("space_id").get<std::string>();
    r.config_fingerprint = j.at("config_fingerprint").get<std::string>();
    for (const auto& o : j.at("entries")) {
      ReportEntry e;
      e.check_id = o.at("check_id").get<std::string>();
      e.space_id = r.space_id;
      e.param = read_number(o.at("param"));
      e.lhs = read_number(o.at("lhs"));
      e.rhs = read_number(o.at("rhs"));
      e.margin = read_number(o.at("margin"));
      e.tolerance = read_number(o.at("tolerance"));
      e.status = parse_status(o.at("status").get<std::string>());
      if (o.contains("witness"))
        for (const auto& [name, v] : o.at("witness").items())
          e.witness.emplace_back(name, v.get<Vector>());
      r.entries.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report json: ") + e.what());
  }
  return r;
}

int report_exit_code(const InequalityReport& report) {
  return report.summary().fail == 0 ? 0 : 1;
}

std::string xi_to_json(const XiEstimate& estimate) {
  ojson j;
  j["space_id"] = estimate.space_id;
  j["config_fingerprint"] = estimate.config_fingerprint;
  j["value"] = estimate.value;
  j["witness_x"] = estimate.witness_x;
  j["witness_y"] = estimate.witness_y;
  j["witness_p"] = estimate.witness_p;
  return j.dump(2) + "\n";
}

std::string conjecture_to_json(std::span<const ConjectureRow> rows) {
  auto arr = ojson::array();
  for (const auto& r : rows)
    arr.push_back({{"p", r.p},
                   {"xi", r.xi},
                   {"lambda_minus_1", r.lambda_minus_1},
                   {"s", r.s},
                   {"upper_bound", r.upper_bound},
                   {"gap", r.gap}});
  ojson j;
  j["rows"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string conjecture_to_csv(std::span<const ConjectureRow> rows) {
  std::string out = "p,xi,lambda_minus_1,s,upper_bound,gap\n";
  for (const auto& r : rows)
    out += fmt12(r.p) + "," + fmt12(r.xi) + "," + fmt12(r.lambda_minus_1) + "," + fmt12(r.s) +
           "," + fmt12(r.upper_bound) + "," + fmt12(r.gap) + "\n";
  return out;
}

}  // namespace supmod
