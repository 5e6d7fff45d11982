#pragma once

#include <stdexcept>
#include <string>

namespace gp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed presentation document or word text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Arguments violate an operation's precondition (unknown vertex, element not
// in its vertex group, input not reduced, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two elements from different presentations were combined.
class PresentationMismatch : public Error {
 public:
  PresentationMismatch() : Error("elements belong to different presentations") {}
};

}  // namespace gp
