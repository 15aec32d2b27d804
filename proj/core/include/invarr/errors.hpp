#pragma once

#include <stdexcept>
#include <string>

namespace invarr {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidDatum : Error {
  explicit InvalidDatum(const std::string& msg) : Error(msg) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

struct NotReduced : Error {
  explicit NotReduced(const std::string& msg) : Error(msg) {}
};

struct TooManyHyperplanes : Error {
  explicit TooManyHyperplanes(const std::string& msg) : Error(msg) {}
};

struct NotInIdeal : Error {
  explicit NotInIdeal(const std::string& msg) : Error(msg) {}
};

struct NotNBC : Error {
  explicit NotNBC(const std::string& msg) : Error(msg) {}
};

struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};

// Raised when a search that is guaranteed to succeed comes up empty.
// Seeing this exception means a bug, not a bad input.
struct SearchExhausted : Error {
  explicit SearchExhausted(const std::string& msg) : Error(msg) {}
};

// A structural identity that must hold did not.  Thrown by scan records
// and verify suites; turning up here means an implementation bug (or a
// disproved theorem, which would be the bigger news).
struct VerificationError : Error {
  explicit VerificationError(const std::string& msg) : Error(msg) {}
};

}  // namespace invarr
