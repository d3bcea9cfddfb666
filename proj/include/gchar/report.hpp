#pragma once

#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gchar/errors.hpp"
#include "gchar/rational.hpp"
#include "gchar/sumrule.hpp"

namespace gchar {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kCsvHeader = "two_j,k,form,lhs,rhs,pass,term_count,elapsed_us";

struct ReportSummary {
  long long total = 0;
  long long passed = 0;
  long long failed = 0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

/// Serialized output of a sumrule run. Exact rationals travel as "p/q"
/// strings so no JSON reader rounds them.
struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  std::string generated_at;
  ordered_json parameters = ordered_json::object();
  std::vector<SumRuleReport> reports;
  ReportSummary summary;

  bool all_passed() const { return summary.failed == 0; }
};

inline bool operator==(const SumRuleReport& a, const SumRuleReport& b) {
  return a.two_j == b.two_j && a.k == b.k && a.form == b.form && a.mode == b.mode && a.lhs == b.lhs &&
         a.rhs == b.rhs && a.lhs_float == b.lhs_float && a.pass == b.pass && a.term_count == b.term_count &&
         a.elapsed == b.elapsed;
}

inline bool operator==(const ReportDocument& a, const ReportDocument& b) {
  return a.schema_version == b.schema_version && a.generated_at == b.generated_at &&
         a.parameters == b.parameters && a.reports == b.reports && a.summary == b.summary;
}

inline std::string utc_timestamp(std::chrono::system_clock::time_point t = std::chrono::system_clock::now()) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline ReportDocument make_document(std::vector<SumRuleReport> reports, ordered_json parameters) {
  ReportDocument doc;
  doc.generated_at = utc_timestamp();
  doc.parameters = std::move(parameters);
  doc.summary.total = static_cast<long long>(reports.size());
  for (const auto& r : reports) doc.summary.passed += r.pass ? 1 : 0;
  doc.summary.failed = doc.summary.total - doc.summary.passed;
  doc.reports = std::move(reports);
  return doc;
}

inline Form parse_form(const std::string& s) {
  if (s == "cg") return Form::CG;
  if (s == "3j") return Form::ThreeJ;
  throw DomainError("unknown form '" + s + "'");
}

inline Mode parse_mode(const std::string& s) {
  if (s == "exact") return Mode::Exact;
  if (s == "float") return Mode::Float;
  throw DomainError("unknown mode '" + s + "'");
}

inline ordered_json to_json(const SumRuleReport& r) {
  ordered_json j;
  j["two_j"] = r.two_j;
  j["k"] = r.k;
  j["form"] = to_string(r.form);
  j["mode"] = to_string(r.mode);
  j["lhs"] = r.lhs ? ordered_json(to_string(*r.lhs)) : ordered_json(nullptr);
  j["rhs"] = to_string(r.rhs);
  j["lhs_float"] = r.lhs_float;
  j["pass"] = r.pass;
  j["term_count"] = r.term_count;
  j["elapsed_us"] = r.elapsed.count();
  return j;
}

inline SumRuleReport report_from_json(const ordered_json& j) {
  SumRuleReport r;
  r.two_j = j.at("two_j").get<int>();
  r.k = j.at("k").get<int>();
  r.form = parse_form(j.at("form").get<std::string>());
  r.mode = parse_mode(j.at("mode").get<std::string>());
  if (!j.at("lhs").is_null()) r.lhs = parse_rational(j.at("lhs").get<std::string>());
  r.rhs = parse_rational(j.at("rhs").get<std::string>());
  r.lhs_float = j.at("lhs_float").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.term_count = j.at("term_count").get<long long>();
  r.elapsed = std::chrono::microseconds(j.at("elapsed_us").get<long long>());
  return r;
}

inline ordered_json to_json(const ReportDocument& doc) {
  ordered_json j;
  j["schema_version"] = doc.schema_version;
  j["generated_at"] = doc.generated_at;
  j["parameters"] = doc.parameters;
  ordered_json reports = ordered_json::array();
  for (const auto& r : doc.reports) reports.push_back(to_json(r));
  j["reports"] = std::move(reports);
  j["summary"] = {{"total", doc.summary.total}, {"passed", doc.summary.passed}, {"failed", doc.summary.failed}};
  return j;
}

inline ReportDocument document_from_json(const ordered_json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  if (doc.schema_version != kSchemaVersion) {
    throw DomainError("unsupported schema_version '" + doc.schema_version + "'");
  }
  doc.generated_at = j.at("generated_at").get<std::string>();
  doc.parameters = j.at("parameters");
  for (const auto& r : j.at("reports")) doc.reports.push_back(report_from_json(r));
  const auto& s = j.at("summary");
  doc.summary = {s.at("total").get<long long>(), s.at("passed").get<long long>(), s.at("failed").get<long long>()};
  return doc;
}

inline std::string serialize_json(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline ReportDocument parse_json(const std::string& text) {
  return document_from_json(ordered_json::parse(text));
}

/// lhs column: exact "p/q" in exact mode, %.17g of lhs_float in float mode.
inline std::string serialize_csv(const ReportDocument& doc) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const auto& r : doc.reports) {
    std::string lhs;
    if (r.lhs) {
      lhs = to_string(*r.lhs);
    } else {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", r.lhs_float);
      lhs = buf;
    }
    os << r.two_j << ',' << r.k << ',' << to_string(r.form) << ',' << lhs << ',' << to_string(r.rhs) << ','
       << (r.pass ? "true" : "false") << ',' << r.term_count << ',' << r.elapsed.count() << "\n";
  }
  return os.str();
}

/// JSON text with the run-dependent fields (generated_at, elapsed_us)
/// removed; equal across runs that computed the same results.
inline std::string deterministic_json(const ReportDocument& doc) {
  ordered_json j = to_json(doc);
  j.erase("generated_at");
  for (auto& r : j["reports"]) r.erase("elapsed_us");
  return j.dump(2);
}

}  // namespace gchar
