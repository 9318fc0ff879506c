// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#pragma once

#include <stdexcept>
#include <string>

namespace sdg {

// Bad input to an operation (out-of-range agent, malformed partition, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size cap or search budget was exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Combination of inputs the algorithm does not handle (e.g. open tail).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented premise of a bound or reduction does not hold.
class PreconditionViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace sdg
