#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace edgecolor {

using Vertex = int32_t;
using EdgeId = int32_t;
using Color = int32_t;

inline constexpr Color kUncolored = -1;
inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

// Internal consistency failure: a data structure or algorithm invariant broke.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Caller broke an operation precondition.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Assigning a color already present at an endpoint.
class ProperError : public std::runtime_error {
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

class GenerateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotBipartiteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("time budget exceeded") {}
};

}  // namespace edgecolor
