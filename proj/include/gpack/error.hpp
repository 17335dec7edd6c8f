#pragma once

#include <stdexcept>
#include <string>

namespace gpack {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied parameters outside the supported domain.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Input file could not be parsed or is internally inconsistent.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Element enumeration stopped because the group is larger than the cap.
class CapExceeded : public Error {
public:
  CapExceeded(std::size_t cap)
      : Error("group order exceeds enumeration cap " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

/// A numerical certificate (orthogonality, idempotency, integrality...) failed.
class NumericalError : public Error {
public:
  using Error::Error;
};

}  // namespace gpack
