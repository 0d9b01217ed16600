#pragma once

#include <stdexcept>
#include <string>

namespace qclab {

// Failure categories surfaced by the library. The verifier distinguishes
// precondition violations (reported as skipped cases) from hard failures.
enum class errc {
  non_invertible_substitution,
  eval_at_pole,
  missing_assignment,
  not_univariate,
  negative_exponent,
  zero_divisor,
  not_prime,
  even_prime_unsupported,
  not_invertible,
  no_representation,
  denominator_divisible_by_p,
  denominator_not_invertible,
  unknown_check_id,
  invalid_params,
  precondition_violated,
  vanishing_denominator,
  internal_non_exact_division,
  no_classical_counterpart,
  not_found,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_invertible_substitution: return "NonInvertibleSubstitution";
    case errc::eval_at_pole: return "EvalAtPole";
    case errc::missing_assignment: return "MissingAssignment";
    case errc::not_univariate: return "NotUnivariate";
    case errc::negative_exponent: return "NegativeExponent";
    case errc::zero_divisor: return "ZeroDivisor";
    case errc::not_prime: return "NotPrime";
    case errc::even_prime_unsupported: return "EvenPrimeUnsupported";
    case errc::not_invertible: return "NotInvertible";
    case errc::no_representation: return "NoRepresentation";
    case errc::denominator_divisible_by_p: return "DenominatorDivisibleByP";
    case errc::denominator_not_invertible: return "DenominatorNotInvertible";
    case errc::unknown_check_id: return "UnknownCheckId";
    case errc::invalid_params: return "InvalidParams";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::vanishing_denominator: return "VanishingDenominator";
    case errc::internal_non_exact_division: return "InternalNonExactDivision";
    case errc::no_classical_counterpart: return "NoClassicalCounterpart";
    case errc::not_found: return "NotFound";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace qclab
