#pragma once

#include <stdexcept>
#include <string>

namespace medread {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File system / stream failures. CLI exit code 3.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input content (bad JSON line, bad TSV field, unknown enum
// string). CLI exit code 2.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Data that parses but violates a corpus invariant. CLI exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace medread
