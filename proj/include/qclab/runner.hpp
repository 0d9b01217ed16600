#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qclab/conjecture.hpp"
#include "qclab/enumerate.hpp"
#include "qclab/parallel.hpp"
#include "qclab/report.hpp"
#include "qclab/verifier.hpp"

// Grid runner: expands (id, prime, bounds) into independent check jobs, runs
// them on a worker pool, and returns results sorted by (id, params) so
// reports are deterministic regardless of scheduling.

namespace qclab {

namespace detail {

enum class JobKind { identity, qcong, intcong };

struct Job {
  JobKind kind;
  std::string id;
  long long p = 0;
  Params params;
};

inline std::vector<CheckResult> run_jobs(const std::vector<Job>& jobs, int workers) {
  std::vector<CheckResult> results = parallel_map(
      jobs,
      [](const Job& j) {
        switch (j.kind) {
          case JobKind::identity:
            return run_identity_check(j.id, j.params);
          case JobKind::qcong:
            return run_q_congruence_check(j.id, j.p, j.params);
          case JobKind::intcong:
            return run_int_congruence_check(j.id, j.p, j.params);
        }
        fail(errc::invalid_params, "bad job kind");
      },
      workers);
  std::sort(results.begin(), results.end(), result_order);
  return results;
}

inline std::vector<std::string> resolve_ids(const std::vector<std::string>& requested,
                                            const std::vector<std::string>& family) {
  if (requested.empty()) return family;
  for (const auto& id : requested) {
    if (!contains(family, id)) fail(errc::unknown_check_id, "unknown check id: " + id);
  }
  return requested;
}

}  // namespace detail

inline std::vector<CheckResult> run_identity_suite(const std::vector<std::string>& ids,
                                                   const Params& bounds, int workers) {
  std::vector<detail::Job> jobs;
  for (const auto& id : detail::resolve_ids(ids, detail::identity_ids())) {
    for (const auto& c : enumerate_cases(id, bounds)) {
      jobs.push_back({detail::JobKind::identity, id, 0, c.params});
    }
  }
  return detail::run_jobs(jobs, workers);
}

inline std::vector<CheckResult> run_qcong_suite(const std::vector<std::string>& ids,
                                                const std::vector<long long>& primes,
                                                const Params& bounds, int workers) {
  std::vector<detail::Job> jobs;
  std::vector<CheckResult> extra;
  for (const auto& id : detail::resolve_ids(ids, detail::qcong_ids())) {
    for (long long p : primes) {
      Params b = bounds;
      b["p"] = p;
      auto cases = enumerate_cases(id, b);
      if (cases.empty()) {
        // parity/side conditions exclude this prime entirely; show it
        extra.push_back(CheckResult::skipped(id, {{"p", p}}, "no admissible cases"));
        continue;
      }
      for (const auto& c : cases) {
        Params params = c.params;
        jobs.push_back({detail::JobKind::qcong, id, p, std::move(params)});
      }
    }
  }
  std::vector<CheckResult> results = detail::run_jobs(jobs, workers);
  results.insert(results.end(), extra.begin(), extra.end());
  std::sort(results.begin(), results.end(), result_order);
  return results;
}

inline std::vector<CheckResult> run_int_suite(const std::vector<std::string>& ids, long long prime_max,
                                              const Params& bounds, int workers) {
  std::vector<detail::Job> jobs;
  std::vector<CheckResult> extra;
  for (const auto& id : detail::resolve_ids(ids, detail::int_ids())) {
    for (long long p = 3; p <= prime_max; ++p) {
      if (!is_prime(static_cast<long>(p))) continue;
      Params b = bounds;
      b["p"] = p;
      auto cases = enumerate_cases(id, b);
      if (cases.empty()) {
        extra.push_back(CheckResult::skipped(id, {{"p", p}}, "no admissible cases"));
        continue;
      }
      for (const auto& c : cases) jobs.push_back({detail::JobKind::intcong, id, p, c.params});
    }
  }
  std::vector<CheckResult> results = detail::run_jobs(jobs, workers);
  results.insert(results.end(), extra.begin(), extra.end());
  std::sort(results.begin(), results.end(), result_order);
  return results;
}

inline std::vector<CheckResult> run_conjecture_suite(const std::vector<long long>& primes,
                                                     const Params& bounds, int workers) {
  std::vector<detail::Job> jobs;
  for (const auto& c : enumerate_cases("conj7.2", bounds)) {
    jobs.push_back({detail::JobKind::identity, "conj7.2", 0, c.params});
  }
  for (const std::string id : {"conj7.3", "conj7.4", "conj7.5", "conj7.6"}) {
    for (long long p : primes) {
      Params b = bounds;
      b["p"] = p;
      for (const auto& c : enumerate_cases(id, b)) {
        jobs.push_back({detail::JobKind::qcong, id, p, c.params});
      }
    }
  }
  return detail::run_jobs(jobs, workers);
}

// Exit-code contract: 0 iff every executed non-conjecture check passed;
// conjecture-scan failures are flagged in the report but do not fail a run.
inline int exit_code_for(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (r.status == Status::fail && !detail::is_conjecture_scan(r.id)) return 1;
  }
  return 0;
}

inline std::size_t conjecture_scan_failures(const std::vector<CheckResult>& results) {
  std::size_t n = 0;
  for (const auto& r : results) {
    if (r.status == Status::fail && detail::is_conjecture_scan(r.id)) ++n;
  }
  return n;
}

}  // namespace qclab
