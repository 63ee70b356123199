#pragma once

#include <stdexcept>
#include <string>

namespace homcollapse {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad parameters or a violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A construction or search outgrew its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. If this fires on one of the
/// built-in constructions, either the engine or the construction is wrong.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

/// Integer growth during Smith normal form left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace homcollapse
