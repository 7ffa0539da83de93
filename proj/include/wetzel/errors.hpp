#pragma once

#include <stdexcept>
#include <string>

namespace wetzel {

// Division by zero, violated operation precondition, out-of-range index.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Malformed input file: bad JSON, schema mismatch, non-canonical rational.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A caller broke an API contract (e.g. a transrec functional consulted the
// restricted map outside the membership of its argument).
struct ContractViolation : std::logic_error {
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// A search over a finite candidate space ended without a hit; the caller
// should enlarge the space.
struct SearchExhausted : std::runtime_error {
  explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

// An exact certificate check failed; the message names the violated
// inequality.
struct CertificateFailure : std::runtime_error {
  explicit CertificateFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wetzel
