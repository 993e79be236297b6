#pragma once

#include <string>
#include <string_view>

namespace ofa::utf8 {

// Decodes UTF-8 into code points, appending to `out`. Returns false on
// malformed input (truncated sequences, overlong encodings, surrogates,
// values past U+10FFFF).
bool decode(std::string_view in, std::u32string& out);

std::string encode(char32_t cp);
std::string encode(std::u32string_view s);

}  // namespace ofa::utf8
