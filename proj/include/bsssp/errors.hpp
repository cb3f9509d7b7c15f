#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsssp {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class BadWeight : public Error {
 public:
  using Error::Error;
};

// Generator spec cannot be realized (bad shape, too few edges for connectivity, ...).
class Infeasible : public Error {
 public:
  using Error::Error;
};

class BadCap : public Error {
 public:
  using Error::Error;
};

class DuplicateKey : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class KeyIncrease : public Error {
 public:
  using Error::Error;
};

// Representatives of one original vertex disagree on a distance. Always a solver bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class BadR : public Error {
 public:
  using Error::Error;
};

class BadBundleStructure : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace bsssp
