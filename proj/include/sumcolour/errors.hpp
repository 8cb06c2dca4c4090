#pragma once

#include <stdexcept>
#include <string>

namespace sumcolour {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SignatureMismatch : public Error {
 public:
  SignatureMismatch() : Error("elements belong to different ambient signatures") {}
};

class NotHalvable : public Error {
 public:
  explicit NotHalvable(const std::string& what) : Error("element cannot be halved: " + what) {}
};

// Hypothesis violated: the group has an element of order 4.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sumcolour
