#pragma once

#include <stdexcept>
#include <string>

namespace coxkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Raised when a finite enumeration would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InfiniteType : public Error {
 public:
  using Error::Error;
};

// A closed form disagreed with its brute-force oracle. Always a bug.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace coxkit
