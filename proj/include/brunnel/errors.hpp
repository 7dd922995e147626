#pragma once

#include <stdexcept>
#include <string>

namespace brunnel {

// Base of every error the library throws. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text (brackets, integers, tokens).
class SyntaxError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input is valid but the requested computation is not supported.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace brunnel
