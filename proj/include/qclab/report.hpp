#pragma once

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qclab/result.hpp"

namespace qclab {

enum class ReportFormat { text, json, csv };

inline ReportFormat parse_format(const std::string& s) {
  if (s == "text") return ReportFormat::text;
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  fail(errc::invalid_params, "unknown report format: " + s);
}

struct ReportCounts {
  std::size_t pass = 0, failed = 0, skipped = 0;
};

inline ReportCounts count_results(const std::vector<CheckResult>& results) {
  ReportCounts c;
  for (const auto& r : results) {
    if (r.status == Status::pass) ++c.pass;
    if (r.status == Status::fail) ++c.failed;
    if (r.status == Status::skipped_precondition) ++c.skipped;
  }
  return c;
}

// Reports are deterministic: results are sorted by (id, params) before the
// call, and timings are emitted as 0 unless explicitly requested, so two runs
// with the same configuration produce byte-identical output.
inline void write_report(const std::vector<CheckResult>& results, ReportFormat format,
                         std::ostream& os, bool include_timing = false) {
  auto elapsed = [&](const CheckResult& r) { return include_timing ? r.elapsed_ms : 0.0; };
  if (format == ReportFormat::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json row;
      row["id"] = r.id;
      row["params"] = nlohmann::ordered_json::object();
      for (const auto& [k, v] : r.params) row["params"][k] = v;
      row["status"] = status_str(r.status);
      if (r.status == Status::pass) {
        row["witness"] = nullptr;
      } else {
        row["witness"] = clip_witness(r.witness);
      }
      row["elapsed_ms"] = elapsed(r);
      arr.push_back(std::move(row));
    }
    os << arr.dump(2) << "\n";
    return;
  }
  if (format == ReportFormat::csv) {
    auto quote = [](const std::string& s) {
      std::string out = "\"";
      for (char ch : s) {
        out += ch;
        if (ch == '"') out += '"';
      }
      return out + "\"";
    };
    os << "id,params,status,witness,elapsed_ms\n";
    for (const auto& r : results) {
      os << quote(r.id) << "," << quote(params_str(r.params)) << "," << status_str(r.status) << ","
         << quote(r.status == Status::pass ? "" : clip_witness(r.witness)) << "," << elapsed(r) << "\n";
    }
    return;
  }
  // text
  std::size_t idw = 2, pw = 6;
  for (const auto& r : results) {
    idw = std::max(idw, r.id.size());
    pw = std::max(pw, params_str(r.params).size());
  }
  for (const auto& r : results) {
    os << std::left << std::setw(static_cast<int>(idw) + 2) << r.id
       << std::setw(static_cast<int>(pw) + 2) << params_str(r.params) << std::setw(22)
       << status_str(r.status);
    if (include_timing) os << std::setw(10) << (std::to_string(r.elapsed_ms) + "ms");
    if (r.status != Status::pass) os << " " << clip_witness(r.witness);
    os << "\n";
  }
  ReportCounts c = count_results(results);
  os << "PASS " << c.pass << " / FAIL " << c.failed << " / SKIP " << c.skipped << "\n";
}

}  // namespace qclab
