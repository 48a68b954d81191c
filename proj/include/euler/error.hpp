#pragma once

#include <stdexcept>
#include <string>

namespace euler {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A name used in a query does not occur in the diagram or model.
class UnknownObject : public Error {
 public:
  explicit UnknownObject(const std::string& name)
      : Error("unknown object '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Malformed JSON input (wrong shape, unknown tag).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant; signals a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace euler
