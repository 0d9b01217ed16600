#pragma once

#include <map>
#include <sstream>
#include <string>

namespace qclab {

using Params = std::map<std::string, long long>;

inline std::string params_str(const Params& params) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) os << ";";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

enum class Status { pass, fail, skipped_precondition };

inline const char* status_str(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped_precondition: return "skipped-precondition";
  }
  return "?";
}

// One verified (or skipped) instance of a check: which display, at which
// parameters, with the reduced residue/difference as the failure witness.
struct CheckResult {
  std::string id;
  Params params;
  Status status = Status::pass;
  std::string witness;  // empty on pass; residue / reason otherwise
  double elapsed_ms = 0.0;

  static CheckResult passed(std::string id, Params params) {
    return CheckResult{std::move(id), std::move(params), Status::pass, "", 0.0};
  }
  static CheckResult failed(std::string id, Params params, std::string witness) {
    return CheckResult{std::move(id), std::move(params), Status::fail, std::move(witness), 0.0};
  }
  static CheckResult skipped(std::string id, Params params, std::string reason) {
    return CheckResult{std::move(id), std::move(params), Status::skipped_precondition, std::move(reason), 0.0};
  }

  bool ok() const { return status != Status::fail; }
};

inline bool result_order(const CheckResult& lhs, const CheckResult& rhs) {
  if (lhs.id != rhs.id) return lhs.id < rhs.id;
  return lhs.params < rhs.params;
}

// Long witnesses are clipped for reports; the head of the residue plus its
// size is enough to identify the failure.
inline std::string clip_witness(const std::string& w, std::size_t limit = 160) {
  if (w.size() <= limit) return w;
  return w.substr(0, limit) + "...";
}

}  // namespace qclab
