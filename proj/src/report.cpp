#include "filtreg/report.hpp"

#include <sstream>

#include <json.hpp>

namespace filtreg {

namespace {

using Json = nlohmann::ordered_json;

const BigInt kSafe = BigInt(1) << 53;

Json big(const BigInt& v) {
  if (v <= kSafe && v >= -kSafe) return Json(v.convert_to<std::int64_t>());
  return Json(to_decimal(v));
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json end_degree(const EndDegree& e) { return e ? Json(*e) : Json("-inf"); }

Json end_degrees(const std::vector<EndDegree>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(end_degree(x));
  return out;
}

Json regularity_json(const std::optional<RegularityData>& d) {
  if (!d) return nullptr;
  Json out;
  out["reg"] = end_degree(d->reg);
  out["geom"] = end_degree(d->geom);
  out["dim"] = d->dim;
  out["a"] = end_degrees(d->a);
  out["retries"] = d->retries;
  out["firstRetries"] = d->first_retries;
  return out;
}

Json check_json(const CheckResult& c) {
  Json out;
  out["id"] = c.id;
  out["index"] = opt(c.index);
  out["status"] = to_string(c.status);
  out["computed"] = c.computed ? big(*c.computed) : Json(nullptr);
  out["bound"] = c.bound ? big(*c.bound) : Json(nullptr);
  out["detail"] = c.detail;
  return out;
}

Json report_json(const InvariantReport& r, const EmitOptions& o) {
  const Invariants& v = r.inv;
  Json out;
  out["name"] = r.config.name;
  out["tags"] = r.config.tags;
  out["config"] = to_text(r.config);

  Json inv;
  inv["d"] = opt(v.d);
  inv["depthPositive"] = opt(v.depth_positive);
  inv["cohenMacaulay"] = opt(v.cohen_macaulay);
  inv["r"] = opt(v.r);
  inv["rScaled"] = opt(v.r_scaled);
  inv["lAI"] = opt(v.l_ai);
  inv["eIM"] = opt(v.e_im);
  inv["flavor"] = "hdeg";
  inv["hdegIM"] = opt(v.hdeg_im);
  inv["hdegM"] = opt(v.hdeg_m);
  inv["hdegIMbar"] = opt(v.hdeg_im_bar);
  inv["h0Length"] = opt(v.h0_length);
  inv["regM"] = opt(v.reg_m);
  inv["iM"] = opt(v.i_m);
  inv["muM"] = opt(v.mu_m);
  inv["delta"] = opt(v.delta);
  inv["lMQM"] = opt(v.l_mqm);
  inv["reduction"] = v.reduction;
  inv["G"] = regularity_json(v.g);
  if (v.hilbert) {
    Json h;
    h["e"] = v.hilbert->e;
    h["postulation"] = v.hilbert->postulation;
    h["values"] = v.hilbert->values;
    inv["hilbertSamuel"] = h;
  } else {
    inv["hilbertSamuel"] = nullptr;
  }
  inv["Gbar"] = regularity_json(v.g_bar);
  inv["fiber"] = regularity_json(v.fiber);
  inv["fiberE"] = v.fiber_e;
  inv["ambientG"] = regularity_json(v.ambient);
  out["invariants"] = inv;

  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  out["checks"] = checks;

  Json summary;
  summary["pass"] = r.count(CheckStatus::Pass);
  summary["fail"] = r.count(CheckStatus::Fail);
  summary["skipped"] = r.count(CheckStatus::Skipped);
  out["summary"] = summary;

  if (r.error) {
    Json e;
    e["stage"] = r.error->stage;
    e["kind"] = r.error->kind;
    e["message"] = r.error->message;
    out["error"] = e;
  } else {
    out["error"] = nullptr;
  }

  Json prov;
  prov["seed"] = r.config.seed;
  prov["retries"] = {{"G", v.g ? v.g->retries : 0}, {"fiber", v.fiber ? v.fiber->retries : 0}};
  if (o.timings) {
    Json t;
    for (const auto& [stage, secs] : r.timings) t[stage] = secs;
    prov["timings"] = t;
  }
  out["provenance"] = prov;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

std::size_t InvariantReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

std::string to_json(const InvariantReport& r, const EmitOptions& opt) { return report_json(r, opt).dump(2) + "\n"; }

std::string to_json(const std::vector<InvariantReport>& rs, const EmitOptions& opt) {
  Json out;
  Json reports = Json::array();
  std::size_t pass = 0, fail = 0, skipped = 0, errors = 0;
  for (const auto& r : rs) {
    reports.push_back(report_json(r, opt));
    pass += r.count(CheckStatus::Pass);
    fail += r.count(CheckStatus::Fail);
    skipped += r.count(CheckStatus::Skipped);
    errors += r.error.has_value();
  }
  out["reports"] = reports;
  out["summary"] = {{"instances", rs.size()}, {"pass", pass}, {"fail", fail}, {"skipped", skipped}, {"errors", errors}};
  return out.dump(2) + "\n";
}

std::string to_csv(const std::vector<InvariantReport>& rs) {
  std::ostringstream out;
  out << "instance,id,index,status,computed,bound,detail\n";
  for (const auto& r : rs) {
    for (const auto& c : r.checks) {
      out << csv_field(r.config.name) << ',' << c.id << ',' << (c.index ? std::to_string(*c.index) : "") << ','
          << to_string(c.status) << ',' << (c.computed ? to_decimal(*c.computed) : "") << ','
          << (c.bound ? to_decimal(*c.bound) : "") << ',' << csv_field(c.detail) << '\n';
    }
    if (r.error)
      out << csv_field(r.config.name) << ",error,," << r.error->kind << ",,," << csv_field(r.error->stage + ": " + r.error->message)
          << '\n';
  }
  return out.str();
}

std::vector<CheckResult> checks_from_json(const std::string& text) {
  const Json j = Json::parse(text);
  const auto read_big = [](const Json& v) -> std::optional<BigInt> {
    if (v.is_null()) return std::nullopt;
    if (v.is_string()) return BigInt(v.get<std::string>());
    return BigInt(v.get<std::int64_t>());
  };
  std::vector<CheckResult> out;
  for (const auto& c : j.at("checks")) {
    CheckResult r;
    r.id = c.at("id").get<std::string>();
    if (!c.at("index").is_null()) r.index = c.at("index").get<int>();
    const auto s = c.at("status").get<std::string>();
    r.status = s == "pass" ? CheckStatus::Pass : s == "fail" ? CheckStatus::Fail : CheckStatus::Skipped;
    r.computed = read_big(c.at("computed"));
    r.bound = read_big(c.at("bound"));
    r.detail = c.at("detail").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace filtreg
