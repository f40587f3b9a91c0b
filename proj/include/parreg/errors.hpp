#pragma once

#include <stdexcept>
#include <string>

namespace parreg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Element data has the wrong shape for the ring it was given to.
class MalformedElement : public Error {
public:
  using Error::Error;
};

/// Enumeration requested on a ring with infinitely many elements.
class InfiniteRing : public Error {
public:
  using Error::Error;
};

/// Exhaustive search requested on a module with infinitely many elements.
class InfiniteModule : public Error {
public:
  using Error::Error;
};

/// Finite module exceeds the configured exhaustive-search cap.
class ModuleTooLarge : public Error {
public:
  using Error::Error;
};

/// Module data fails the action-matrix validity checks.
class InvalidModule : public Error {
public:
  using Error::Error;
};

/// Every factor coordinate of the target vanishes: it lies in the subgroup.
class NotSeparable : public Error {
public:
  using Error::Error;
};

/// Right-hand side is the zero vector; the decision problem requires b != 0.
class DegenerateSystem : public Error {
public:
  using Error::Error;
};

/// A certificate was presented against a system with a different digest.
class DigestMismatch : public Error {
public:
  using Error::Error;
};

/// Bucket-count derivation needs a strictly positive circle distance.
class ZeroDistance : public Error {
public:
  using Error::Error;
};

/// Input document is syntactically or semantically invalid. Carries the
/// field path of the offending value when known.
class ParseError : public Error {
public:
  ParseError(const std::string& path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what) {}
};

/// A postcondition the library guarantees failed to hold. Always a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace parreg
