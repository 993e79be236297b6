#pragma once

#include <cassert>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ofa/errors.hpp"

namespace ofa {

// One symbol of the input alphabet. Equality is the only semantic
// operation; the numeric order is used for deterministic serialization
// alone.
using Symbol = char32_t;

// Ordered tuple (S_0, ..., S_{n-1}) of n strings of equal length m over
// an opaque alphabet. Immutable after construction. Adjacent strings
// are guaranteed distinct; a pair of equal neighbours admits no valid
// factoring automaton, so such inputs are rejected up front.
// Non-adjacent duplicates are legal.
class StringTuple {
public:
  // Validates n >= 1, m >= 1, equal lengths and adjacent distinctness.
  // Throws ParseError; `line` in the error is the 1-based string index.
  explicit StringTuple(std::vector<std::u32string> strings);

  // Parses a line-oriented document: one string per line, UTF-8, LF or
  // CRLF endings, optional leading BOM, optional trailing newline.
  // Blank interior lines are an error.
  static StringTuple parse(std::string_view text);

  std::size_t size() const { return strings_.size(); }  // n
  std::size_t length() const { return length_; }        // m

  Symbol at(std::size_t i, std::size_t j) const {
    assert(i < size() && j < length());
    return strings_[i][j];
  }

  const std::u32string& operator[](std::size_t i) const {
    assert(i < size());
    return strings_[i];
  }

  // Inverse of parse: one string per line, LF endings, trailing newline.
  std::string serialize() const;

  friend bool operator==(const StringTuple&, const StringTuple&) = default;

private:
  std::vector<std::u32string> strings_;
  std::size_t length_ = 0;
};

}  // namespace ofa
