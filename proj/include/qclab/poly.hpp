#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qclab/errors.hpp"
#include "qclab/rat.hpp"

namespace qclab {

// Fixed global variable registry. Monomials are ordered graded-lexicographic
// over this sequence, so polynomial equality and hashing are deterministic.
enum class Var : int { q = 0, x = 1, a = 2, b = 3, c = 4, z = 5 };
inline constexpr int kNumVars = 6;

inline const char* var_name(Var v) {
  static constexpr const char* names[kNumVars] = {"q", "x", "a", "b", "c", "z"};
  return names[static_cast<int>(v)];
}

// Exponent vector; negative exponents (Laurent terms) are first-class.
// The all-zero vector is the unit monomial.
struct Monomial {
  std::array<std::int32_t, kNumVars> e{};

  long total_degree() const {
    long d = 0;
    for (auto v : e) d += v;
    return d;
  }
  bool is_unit() const {
    for (auto v : e) {
      if (v != 0) return false;
    }
    return true;
  }
  std::int32_t exp(Var v) const { return e[static_cast<int>(v)]; }

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = lhs.e[i] + rhs.e[i];
    return r;
  }
  friend bool operator==(const Monomial& lhs, const Monomial& rhs) = default;
  friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) {
    long dl = lhs.total_degree(), dr = rhs.total_degree();
    if (dl != dr) return dl <=> dr;
    for (int i = 0; i < kNumVars; ++i) {
      if (lhs.e[i] != rhs.e[i]) return lhs.e[i] <=> rhs.e[i];
    }
    return std::strong_ordering::equal;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : m.e) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Sparse multivariate Laurent polynomial over Q. Terms are kept sorted
// ascending in the monomial order with no zero coefficients, so structural
// equality coincides with mathematical equality. Values are immutable in
// spirit: every operation returns a fresh polynomial.
class LPoly {
 public:
  using Term = std::pair<Monomial, Rat>;

  LPoly() = default;
  LPoly(long constant) {
    if (constant != 0) terms_.emplace_back(Monomial{}, Rat(constant));
  }
  LPoly(const Rat& constant) {
    if (constant != 0) terms_.emplace_back(Monomial{}, constant);
  }

  static LPoly variable(Var v, std::int32_t exp = 1) {
    Monomial m;
    m.e[static_cast<int>(v)] = exp;
    return monomial(m, Rat(1));
  }
  static LPoly monomial(const Monomial& m, const Rat& coeff) {
    LPoly p;
    if (coeff != 0) p.terms_.emplace_back(m, coeff);
    return p;
  }
  static LPoly from_terms(std::vector<Term> terms) {
    LPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit()); }
  Rat constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) fail(errc::invalid_params, "polynomial is not constant");
    return terms_[0].second;
  }
  bool is_one() const { return is_constant() && constant_value() == 1; }

  bool uses_var(Var v) const {
    for (const auto& [m, c] : terms_) {
      if (m.exp(v) != 0) return true;
    }
    return false;
  }
  bool univariate_in(Var v) const {
    for (const auto& [m, c] : terms_) {
      for (int i = 0; i < kNumVars; ++i) {
        if (i != static_cast<int>(v) && m.e[i] != 0) return false;
      }
    }
    return true;
  }
  std::int32_t min_exp(Var v) const {
    std::int32_t r = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (first || m.exp(v) < r) r = m.exp(v);
      first = false;
    }
    return r;
  }
  std::int32_t max_exp(Var v) const {
    std::int32_t r = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (first || m.exp(v) > r) r = m.exp(v);
      first = false;
    }
    return r;
  }

  Rat coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rat(0);
  }

  friend bool operator==(const LPoly& lhs, const LPoly& rhs) { return lhs.terms_ == rhs.terms_; }

  friend LPoly operator-(const LPoly& p) {
    LPoly r(p);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend LPoly operator+(const LPoly& lhs, const LPoly& rhs) {
    LPoly r;
    r.terms_.reserve(lhs.terms_.size() + rhs.terms_.size());
    auto i = lhs.terms_.begin(), j = rhs.terms_.begin();
    while (i != lhs.terms_.end() && j != rhs.terms_.end()) {
      if (i->first < j->first) {
        r.terms_.push_back(*i++);
      } else if (j->first < i->first) {
        r.terms_.push_back(*j++);
      } else {
        Rat c = i->second + j->second;
        if (c != 0) r.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    r.terms_.insert(r.terms_.end(), i, lhs.terms_.end());
    r.terms_.insert(r.terms_.end(), j, rhs.terms_.end());
    return r;
  }

  friend LPoly operator-(const LPoly& lhs, const LPoly& rhs) { return lhs + (-rhs); }

  friend LPoly operator*(const LPoly& lhs, const LPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return LPoly();
    if (lhs.terms_.size() == 1) return rhs.mul_term(lhs.terms_[0]);
    if (rhs.terms_.size() == 1) return lhs.mul_term(rhs.terms_[0]);

    std::unordered_map<Monomial, Rat, MonomialHash> acc;
    acc.reserve(lhs.terms_.size() + rhs.terms_.size());
    mpq_t tmp;
    mpq_init(tmp);
    for (const auto& [ml, cl] : lhs.terms_) {
      for (const auto& [mr, cr] : rhs.terms_) {
        mpq_mul(tmp, cl.get_mpq_t(), cr.get_mpq_t());
        auto [it, inserted] = acc.try_emplace(ml * mr);
        if (inserted) {
          mpq_set(it->second.get_mpq_t(), tmp);
        } else {
          mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), tmp);
        }
      }
    }
    mpq_clear(tmp);
    LPoly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, coef] : acc) {
      if (coef != 0) r.terms_.emplace_back(m, std::move(coef));
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& s, const Term& t) { return s.first < t.first; });
    return r;
  }

  LPoly& operator+=(const LPoly& rhs) { return *this = *this + rhs; }
  LPoly& operator-=(const LPoly& rhs) { return *this = *this - rhs; }
  LPoly& operator*=(const LPoly& rhs) { return *this = *this * rhs; }

  // Stable debug rendering: terms in descending order, `^` exponents,
  // `*` products, e.g. "q^4 + 2*q^3 - 1/2*q*x^-1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rat ac = c < 0 ? Rat(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool printed_coeff = false;
      if (ac != 1 || m.is_unit()) {
        os << ac.get_str();
        printed_coeff = true;
      }
      for (int i = 0; i < kNumVars; ++i) {
        if (m.e[i] == 0) continue;
        if (printed_coeff) os << "*";
        os << var_name(static_cast<Var>(i));
        if (m.e[i] != 1) os << "^" << m.e[i];
        printed_coeff = true;
      }
    }
    return os.str();
  }

 private:
  LPoly mul_term(const Term& t) const {
    LPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, coef] : terms_) {
      Rat nc = coef * t.second;
      if (nc != 0) r.terms_.emplace_back(m * t.first, std::move(nc));
    }
    // Multiplying every monomial by the same factor preserves the order.
    return r;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& s, const Term& t) { return s.first < t.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
        if (out.back().second == 0) out.pop_back();
      } else if (t.second != 0) {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

inline LPoly qvar_pow(long e) { return LPoly::variable(Var::q, static_cast<std::int32_t>(e)); }

// a^k with the convention 0^0 = 1.
inline LPoly lp_pow(const LPoly& base, long k) {
  if (k < 0) fail(errc::invalid_params, "lp_pow requires a nonnegative exponent");
  LPoly acc(1), b(base);
  unsigned long u = static_cast<unsigned long>(k);
  while (u) {
    if (u & 1) acc *= b;
    b *= b;
    u >>= 1;
  }
  return acc;
}

// Substitutes `value` for `var`. If `var` occurs with a negative exponent the
// substitution must be invertible, i.e. `value` must be a single nonzero term.
inline LPoly lp_substitute(const LPoly& p, Var var, const LPoly& value) {
  bool has_negative = false;
  for (const auto& [m, c] : p.terms()) {
    if (m.exp(var) < 0) has_negative = true;
  }
  if (has_negative && value.size() != 1) {
    fail(errc::non_invertible_substitution,
         std::string("negative power of ") + var_name(var) + " requires a monomial substitution value");
  }
  std::map<std::int32_t, LPoly> powers;  // value^e for the exponents present
  LPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    std::int32_t e = m.exp(var);
    rest.e[static_cast<int>(var)] = 0;
    LPoly term = LPoly::monomial(rest, c);
    if (e != 0) {
      auto it = powers.find(e);
      if (it == powers.end()) {
        LPoly pw;
        if (e > 0) {
          pw = lp_pow(value, e);
        } else {
          const auto& [vm, vc] = value.terms()[0];
          Monomial im;
          for (int i = 0; i < kNumVars; ++i) im.e[i] = -vm.e[i];
          LPoly inv = LPoly::monomial(im, Rat(1) / vc);
          pw = lp_pow(inv, -e);
        }
        it = powers.emplace(e, std::move(pw)).first;
      }
      term *= it->second;
    }
    out += term;
  }
  return out;
}

// Evaluates at a full assignment of the variables occurring in p.
inline Rat lp_eval(const LPoly& p, const std::map<Var, Rat>& assignment) {
  Rat total(0);
  for (const auto& [m, c] : p.terms()) {
    Rat term = c;
    for (int i = 0; i < kNumVars; ++i) {
      if (m.e[i] == 0) continue;
      auto it = assignment.find(static_cast<Var>(i));
      if (it == assignment.end()) {
        fail(errc::missing_assignment, std::string("no value for ") + var_name(static_cast<Var>(i)));
      }
      if (it->second == 0 && m.e[i] < 0) {
        fail(errc::eval_at_pole, std::string(var_name(static_cast<Var>(i))) + " = 0 with negative exponent");
      }
      term *= rat_pow(it->second, m.e[i]);
    }
    total += term;
  }
  return total;
}

// --- dense univariate helpers (internal) -----------------------------------

// Dense coefficient vector in q; index = exponent. Empty means zero.
inline std::vector<Rat> lp_to_dense_q(const LPoly& p) {
  if (!p.univariate_in(Var::q)) fail(errc::not_univariate, "expected a polynomial in q only");
  if (p.min_exp(Var::q) < 0) fail(errc::negative_exponent, "expected nonnegative powers of q");
  std::vector<Rat> d(p.is_zero() ? 0 : p.max_exp(Var::q) + 1);
  for (const auto& [m, c] : p.terms()) d[m.exp(Var::q)] = c;
  return d;
}

inline LPoly lp_from_dense_q(const std::vector<Rat>& d) {
  std::vector<LPoly::Term> terms;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) {
      Monomial m;
      m.e[static_cast<int>(Var::q)] = static_cast<std::int32_t>(i);
      terms.emplace_back(m, d[i]);
    }
  }
  return LPoly::from_terms(std::move(terms));
}

inline void dense_trim(std::vector<Rat>& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

// In-place schoolbook division; returns the quotient, leaves the remainder in num.
inline std::vector<Rat> dense_divrem(std::vector<Rat>& num, const std::vector<Rat>& den) {
  if (den.empty()) fail(errc::zero_divisor, "division by the zero polynomial");
  dense_trim(num);
  if (num.size() < den.size()) return {};
  std::vector<Rat> quot(num.size() - den.size() + 1);
  const Rat& lead = den.back();
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    std::size_t i = shift + den.size() - 1;
    if (num[i] == 0) continue;
    Rat f = num[i] / lead;
    for (std::size_t j = 0; j < den.size(); ++j) {
      if (den[j] != 0) num[shift + j] -= f * den[j];
    }
    quot[shift] = std::move(f);
  }
  dense_trim(num);
  return quot;
}

// Exact quotient a / m with deg-bounded remainder, for polynomials in q with
// nonnegative exponents. The pair is (quotient, remainder).
inline std::pair<LPoly, LPoly> lp_divrem_q(const LPoly& a, const LPoly& m) {
  if (m.is_zero()) fail(errc::zero_divisor, "lp_divrem_q by zero");
  std::vector<Rat> num = lp_to_dense_q(a);
  std::vector<Rat> den = lp_to_dense_q(m);
  dense_trim(den);
  if (den.empty()) fail(errc::zero_divisor, "lp_divrem_q by zero");
  std::vector<Rat> quot = dense_divrem(num, den);
  return {lp_from_dense_q(quot), lp_from_dense_q(num)};
}

// Exact division in q; throws if the division leaves a remainder.
inline LPoly lp_divexact_q(const LPoly& a, const LPoly& m) {
  auto [quot, rem] = lp_divrem_q(a, m);
  if (!rem.is_zero()) {
    fail(errc::internal_non_exact_division, "division expected to be exact left remainder " + rem.to_string());
  }
  return quot;
}

// --- rational functions -----------------------------------------------------

// Numerator/denominator pair. No gcd reduction is performed; equality is by
// cross-multiplication, which is exact and avoids multivariate gcd machinery.
struct RFunc {
  LPoly num;
  LPoly den;

  RFunc() : num(0), den(1) {}
  RFunc(LPoly n) : num(std::move(n)), den(1) {}
  RFunc(LPoly n, LPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) fail(errc::zero_divisor, "rational function with zero denominator");
  }

  bool is_zero() const { return num.is_zero(); }

  friend RFunc operator+(const RFunc& l, const RFunc& r) {
    if (l.den == r.den) return RFunc(l.num + r.num, l.den);
    return RFunc(l.num * r.den + r.num * l.den, l.den * r.den);
  }
  friend RFunc operator-(const RFunc& l, const RFunc& r) {
    if (l.den == r.den) return RFunc(l.num - r.num, l.den);
    return RFunc(l.num * r.den - r.num * l.den, l.den * r.den);
  }
  friend RFunc operator*(const RFunc& l, const RFunc& r) { return RFunc(l.num * r.num, l.den * r.den); }

  std::string to_string() const {
    if (den.is_one()) return num.to_string();
    return "(" + num.to_string() + ") / (" + den.to_string() + ")";
  }
};

inline bool rf_equal(const RFunc& lhs, const RFunc& rhs) {
  if (lhs.den.is_zero() || rhs.den.is_zero()) fail(errc::zero_divisor, "rf_equal on zero denominator");
  return (lhs.num * rhs.den - rhs.num * lhs.den).is_zero();
}

}  // namespace qclab
