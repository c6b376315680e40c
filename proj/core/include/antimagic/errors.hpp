#pragma once

#include <stdexcept>
#include <string>

namespace antimagic {

// Malformed graph or labeling data (bad index, self-loop, duplicate edge).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside an operation's contract.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A construction reached a state its correctness argument rules out.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace antimagic
