#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ofa {

// Input validation failure while reading a string tuple document.
class ParseError : public std::runtime_error {
public:
  enum class Kind {
    EmptyInput,         // no lines at all
    RaggedLengths,      // a line whose length differs from line 1
    AdjacentDuplicate,  // S_i == S_{i+1}
    EmptyString,        // blank line (m = 0 is not a legal string)
    BadUtf8,            // malformed byte sequence
  };

  ParseError(Kind kind, std::size_t line, const std::string& message)
      : std::runtime_error(message), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  // 1-based line (== string index) the error refers to; 0 when the whole
  // document is at fault.
  std::size_t line() const { return line_; }

private:
  Kind kind_;
  std::size_t line_;
};

class NoCostModel : public std::logic_error {
public:
  NoCostModel() : std::logic_error("operation requires a cost model, but none was supplied") {}
};

class CostModelMismatch : public std::invalid_argument {
public:
  explicit CostModelMismatch(const std::string& message) : std::invalid_argument(message) {}
};

class CostOverflow : public std::overflow_error {
public:
  explicit CostOverflow(const std::string& message) : std::overflow_error(message) {}
};

class FlavorMismatch : public std::logic_error {
public:
  explicit FlavorMismatch(const std::string& message) : std::logic_error(message) {}
};

class InstanceTooLarge : public std::invalid_argument {
public:
  explicit InstanceTooLarge(const std::string& message) : std::invalid_argument(message) {}
};

}  // namespace ofa
