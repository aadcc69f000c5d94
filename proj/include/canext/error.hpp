#pragma once

#include <stdexcept>
#include <string>

namespace canext {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An operation that enumerates subsets refused a carrier above the
// configured bound, or an enumeration exceeded its step budget.
class SizeGuardError : public Error {
 public:
  explicit SizeGuardError(const std::string& what) : Error(what) {}
};

// A poset was fed to a lattice constructor but some pair has no glb/lub.
class NotALatticeError : public Error {
 public:
  NotALatticeError(const std::string& what, int i, int j)
      : Error(what), first(i), second(j) {}
  int first;
  int second;
};

// A caller violated a documented precondition (non-monotone map,
// arity mismatch, kind mismatch, non-operator input, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Malformed input document.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what, std::string path = "")
      : Error(path.empty() ? what : what + " (at " + path + ")"),
        where(std::move(path)) {}
  std::string where;
};

// An internal dual-route consistency assertion failed. Never expected.
class InternalCheckError : public Error {
 public:
  explicit InternalCheckError(const std::string& what) : Error(what) {}
};

}  // namespace canext
