#pragma once

#include <string>
#include <vector>

#include "qclab/residue.hpp"
#include "qclab/result.hpp"
#include "qclab/verifier.hpp"

// Case enumeration: the complete list of parameter tuples within bounds that
// satisfy a statement's hypotheses, each tagged with the conclusion branch it
// exercises. Statements whose hypotheses exclude a prime entirely yield no
// tuples; the runner reports that as an explicit skipped row.

namespace qclab {

struct Case {
  Params params;
  std::string branch;
};

// Bounds keys: "p" (the prime, for congruence ids), "n-max", "m-max",
// "r-max", "s-max", "h-max". Missing keys fall back to the per-id defaults
// sized for the acceptance grids.
inline std::vector<Case> enumerate_cases(const std::string& id, const Params& bounds) {
  std::vector<Case> out;
  auto bound = [&](const std::string& key, long long fallback) {
    return param_or(bounds, key, fallback);
  };

  // --- identity family ---
  if (id == "lemma4.1a" || id == "qbinom-thm") {
    long long nmax = bound("n-max", id == "qbinom-thm" ? 8 : 6);
    for (long long n = 0; n <= nmax; ++n) out.push_back({{{"n", n}}, "identity"});
    return out;
  }
  if (id == "lemma4.1b" || id == "eq4.3") {
    for (long long m = 0; m <= bound("m-max", 6); ++m) out.push_back({{{"m", m}}, "identity"});
    return out;
  }
  if (id == "lemma4.2a" || id == "lemma4.2b") {
    for (long long n = 1; n <= bound("n-max", 6); ++n) out.push_back({{{"n", n}}, "identity"});
    return out;
  }
  if (id == "lemma4.3" || id == "lemma4.4") {
    long long nmax = bound("n-max", 5);
    for (long long n = 1; n <= nmax; ++n) {
      for (long long m = 0; m <= n - 1 && m <= bound("m-max", nmax); ++m) {
        for (long long h = 1; h <= n - m && h <= bound("h-max", nmax); ++h) {
          for (long long s = 0; s <= m && s <= bound("s-max", nmax); ++s) {
            out.push_back({{{"n", n}, {"h", h}, {"m", m}, {"s", s}}, "identity"});
          }
        }
      }
    }
    return out;
  }
  if (id == "eq4.14") {
    for (long long n = 0; n <= bound("n-max", 6); ++n) {
      for (long long i = 0; i <= n; ++i) {
        out.push_back({{{"n", n}, {"i", i}}, i == 0 ? "constant-term" : "vanishing"});
      }
    }
    return out;
  }
  if (id == "qchu-4.19") {
    for (long long n = 0; n <= bound("n-max", 6); ++n) {
      for (long long m = 0; m <= n; ++m) {
        for (long long s = 0; s <= m && s <= bound("s-max", 6); ++s) {
          out.push_back({{{"n", n}, {"m", m}, {"s", s}}, "identity"});
        }
      }
    }
    return out;
  }
  if (id == "qchu-4.21") {
    for (long long n = 0; n <= bound("n-max", 6); ++n) {
      for (long long m = 0; m <= n; ++m) out.push_back({{{"n", n}, {"m", m}}, "identity"});
    }
    return out;
  }
  if (id == "qdixon") {
    long long abc = bound("n-max", 3);
    for (long long a = 0; a <= abc; ++a) {
      for (long long b = 0; b <= abc; ++b) {
        for (long long c = 0; c <= abc; ++c) {
          out.push_back({{{"a", a}, {"b", b}, {"c", c}}, "identity"});
        }
      }
    }
    return out;
  }
  if (id == "andrews-watson") {
    for (long long n = 0; n <= bound("n-max", 6); ++n) {
      out.push_back({{{"n", n}}, n % 2 == 1 ? "zero" : "closed-form"});
    }
    return out;
  }
  if (id == "lemma3.2" || id == "thm2.5" || id == "lemma6.1b" || id == "eq6.4") {
    long long nmax = bound("n-max", (id == "lemma3.2" || id == "thm2.5") ? 8 : 6);
    for (long long n = 0; n <= nmax; ++n) {
      for (long long s = 0; s <= n && s <= bound("s-max", nmax); ++s) {
        std::string branch = "identity";
        if (id == "lemma3.2") branch = (n - s) % 2 == 0 ? "closed-form" : "zero";
        out.push_back({{{"n", n}, {"s", s}}, branch});
      }
    }
    return out;
  }
  if (id == "conj7.2") {
    for (long long n = 0; n <= bound("n-max", 6); ++n) {
      for (long long r = 0; r <= n && r <= bound("r-max", 6); ++r) {
        out.push_back({{{"n", n}, {"r", r}}, "identity"});
      }
    }
    return out;
  }
  if (id == "lemma6.1a" || id == "eq6.3") {
    for (long long n = 0; n <= bound("n-max", 6); ++n) {
      for (long long m = 0; m <= bound("m-max", 6); ++m) {
        out.push_back({{{"n", n}, {"m", m}}, "identity"});
      }
    }
    return out;
  }

  // --- congruence and integer families: p required ---
  long long p = param(bounds, "p");
  auto push = [&out](Params params, std::string branch) {
    out.push_back({std::move(params), std::move(branch)});
  };
  auto resA = [&](long long r, long long m) { return frac_residue(-r, m, static_cast<long>(p)); };

  if (id == "lemma3.1") {
    for (long long k = 0; k <= (p - 1) / 2; ++k) push({{"k", k}}, "congruence");
    return out;
  }
  if (id == "lemma5.1") {
    for (long long m = 2; m <= bound("m-max", 8); ++m) {
      if (m % p == 0) continue;
      for (long long r = 1; r < m && r <= bound("r-max", 8); ++r) {
        long long a = resA(r, m), a2 = resA(m - r, m);
        for (long long s = 0; s <= std::min<long long>(a, a2) && s <= bound("s-max", p); ++s) {
          push({{"m", m}, {"r", r}, {"s", s}}, (a - s) % 2 == 0 ? "closed-form" : "zero");
        }
      }
    }
    return out;
  }
  if (id == "eq6.5" || id == "eq6.6") {
    for (long long m = 2; m <= bound("m-max", 4); ++m) {
      if (m % p == 0) continue;
      for (long long r = 1; r < m; ++r) {
        if (id == "eq6.5") {
          for (long long k = 0; k <= p - 1; ++k) push({{"m", m}, {"r", r}, {"k", k}}, "congruence");
        } else {
          for (long long s = 0; s <= 1; ++s) {
            for (long long k = 0; k <= p - 1 - s; ++k) {
              push({{"m", m}, {"r", r}, {"k", k}, {"s", s}}, "congruence");
            }
          }
        }
      }
    }
    return out;
  }
  if (id == "thm2.1") {
    for (long long s = 0; s <= (p - 1) / 2 && s <= bound("s-max", p); ++s) {
      push({{"s", s}}, (s - (p - 1) / 2) % 2 == 0 ? "closed-form" : "zero");
    }
    return out;
  }
  if (id == "cor2.2") {
    push({}, p % 4 == 1 ? "closed-form" : "zero");
    return out;
  }
  if (id == "remark-cor2.2") {
    if (p % 4 == 3) push({}, "zero");
    return out;
  }
  if (id == "thm2.3-2.5" || id == "thm2.3-2.6" || id == "thm2.3-2.7") {
    bool closed = (id == "thm2.3-2.7");
    for (long long m = 2; m <= bound("m-max", 8); ++m) {
      if (m % p == 0) continue;
      for (long long r = 1; r < m && r <= bound("r-max", 8); ++r) {
        long long a = resA(r, m), a2 = resA(m - r, m);
        for (long long s = 0; s <= std::min<long long>(a, a2) && s <= bound("s-max", p); ++s) {
          if (((a - s) % 2 == 0) != closed) continue;
          push({{"m", m}, {"r", r}, {"s", s}}, closed ? "closed-form" : "vanishing");
        }
      }
    }
    return out;
  }
  if (id == "cor2.4" || id == "conj7.4") {
    if (p < 5) return out;
    for (long long m : {3LL, 4LL, 6LL}) {
      if (m > bound("m-max", 8) || m % p == 0) continue;
      int sym = legendre(m == 3 ? -3 : m == 4 ? -2 : -1, static_cast<long>(p));
      long long smax = (id == "cor2.4") ? (p - 1) / m : p - 1;
      for (long long s = (1 + sym) / 2; s <= std::min(smax, bound("s-max", p)); s += 2) {
        push({{"m", m}, {"s", s}}, "vanishing");
      }
    }
    return out;
  }
  if (id == "thm2.6") {
    for (long long s = 0; s <= (p - 1) / 2 && s <= bound("s-max", p); ++s) {
      push({{"s", s}}, "congruence");
    }
    return out;
  }
  if (id == "thm2.7-2.11" || id == "thm2.7-2.12") {
    for (long long m = 2; m <= bound("m-max", 8); ++m) {
      if (m % p == 0) continue;
      if (id == "thm2.7-2.12" && (p + 1) % m != 0 && (p - 1) % m != 0) continue;
      for (long long r = 1; r < m && r <= bound("r-max", 8); ++r) {
        for (long long s = 0; s <= resA(m - r, m) && s <= bound("s-max", p); ++s) {
          push({{"m", m}, {"r", r}, {"s", s}}, "congruence");
        }
      }
    }
    return out;
  }
  if (id == "cor2.8" || id == "conj7.5") {
    if (p <= 3) return out;
    for (long long m : {3LL, 4LL, 6LL}) {
      if (m > bound("m-max", 8)) continue;
      for (long long r : {1LL, m - 1}) {
        for (long long s = 0; s <= resA(m - r, m) && s <= bound("s-max", p); ++s) {
          push({{"m", m}, {"r", r}, {"s", s}}, "congruence");
        }
      }
    }
    return out;
  }
  if (id == "conj7.3") {
    for (long long m = 2; m <= bound("m-max", 6); ++m) {
      if (m % p == 0) continue;
      for (long long r = 1; r < m && r <= bound("r-max", 6); ++r) {
        long long a = resA(r, m);
        for (long long s = 0; s <= std::min<long long>(p - 1, bound("s-max", p)); ++s) {
          if ((a - s) % 2 == 0) continue;
          bool termwise = s > std::min<long long>(a, resA(m - r, m));
          push({{"m", m}, {"r", r}, {"s", s}}, termwise ? "termwise-zero" : "vanishing");
        }
      }
    }
    return out;
  }
  if (id == "conj7.6") {
    for (long long m : {3LL, 4LL, 6LL}) {
      if (m > bound("m-max", 8) || m % p == 0) continue;
      if ((p + 1) % m != 0 && (p - 1) % m != 0) continue;
      for (long long r = 1; r < m; ++r) {
        for (long long s = 0; s <= resA(m - r, m) && s <= bound("s-max", p); ++s) {
          push({{"m", m}, {"r", r}, {"s", s}}, "congruence");
        }
      }
    }
    return out;
  }

  // --- integer family ---
  if (id == "int1.1" || id == "int1.2" || id == "int1.3") {
    if (id != "int1.1" || p >= 5) push({}, p % 4 == 1 ? "two-square" : "zero");
    return out;
  }
  if (id == "int1.4") {
    if (p > 3 && p % 3 == 2) push({}, "vanishing");
    return out;
  }
  if (id == "int1.5") {
    if (p > 3 && (p % 8 == 5 || p % 8 == 7)) push({}, "vanishing");
    return out;
  }
  if (id == "int1.6") {
    if (p > 3 && p % 4 == 3) push({}, "vanishing");
    return out;
  }
  if (id == "int1.7") {
    for (long long v : {2LL, 3LL, 4LL, 6LL}) {
      if (v % p == 0) continue;
      if (frac_residue(-1, v, static_cast<long>(p)) % 2 != 1) continue;
      push({{"u", 1}, {"v", v}}, "vanishing");
    }
    return out;
  }
  if (id == "int1.8" || id == "int1.9" || id == "int1.10" || id == "int1.11") {
    if (p >= 5) push({}, "legendre");
    return out;
  }
  if (id == "int1.12") {
    for (long long s = 0; s <= (p - 1) / 2 && s <= bound("s-max", p); ++s) {
      push({{"s", s}}, "legendre");
    }
    return out;
  }
  if (id == "int2.1") {
    for (long long s = (p + 1) / 2 % 2; s <= (p - 1) / 2 && s <= bound("s-max", p); s += 2) {
      push({{"s", s}}, "vanishing");
    }
    return out;
  }
  if (id == "int2.4") {
    if (p % 4 == 1) push({}, "two-square");
    return out;
  }

  fail(errc::unknown_check_id, "unknown check id: " + id);
}

}  // namespace qclab
