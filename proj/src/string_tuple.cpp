#include "ofa/string_tuple.hpp"

#include <utility>

#include "ofa/utf8.hpp"

namespace ofa {

StringTuple::StringTuple(std::vector<std::u32string> strings) {
  if (strings.empty()) {
    throw ParseError(ParseError::Kind::EmptyInput, 0, "input contains no strings");
  }
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if (strings[i].empty()) {
      throw ParseError(ParseError::Kind::EmptyString, i + 1,
                       "line " + std::to_string(i + 1) + " is empty (strings must have length >= 1)");
    }
  }
  length_ = strings[0].size();
  for (std::size_t i = 1; i < strings.size(); ++i) {
    if (strings[i].size() != length_) {
      throw ParseError(ParseError::Kind::RaggedLengths, i + 1,
                       "line " + std::to_string(i + 1) + " has length " +
                           std::to_string(strings[i].size()) + ", expected " + std::to_string(length_));
    }
    if (strings[i] == strings[i - 1]) {
      throw ParseError(ParseError::Kind::AdjacentDuplicate, i,
                       "strings " + std::to_string(i) + " and " + std::to_string(i + 1) +
                           " are identical; equal neighbours admit no factoring automaton");
    }
  }
  strings_ = std::move(strings);
}

StringTuple StringTuple::parse(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  if (text.empty()) {
    throw ParseError(ParseError::Kind::EmptyInput, 0, "input contains no strings");
  }

  std::vector<std::u32string> strings;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line;
    if (nl == std::string_view::npos) {
      if (pos == text.size()) break;  // trailing newline already consumed
      line = text.substr(pos);
      pos = text.size() + 1;
    } else {
      line = text.substr(pos, nl - pos);
      pos = nl + 1;
    }
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    std::u32string decoded;
    if (!utf8::decode(line, decoded)) {
      throw ParseError(ParseError::Kind::BadUtf8, line_no,
                       "line " + std::to_string(line_no) + " is not valid UTF-8");
    }
    strings.push_back(std::move(decoded));
  }
  return StringTuple(std::move(strings));
}

std::string StringTuple::serialize() const {
  std::string out;
  for (const auto& s : strings_) {
    out += utf8::encode(s);
    out += '\n';
  }
  return out;
}

}  // namespace ofa
