#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace bwlf {

/// ASCII-only case folding; bytes >= 0x80 pass through untouched.
std::string ascii_lower(std::string_view s);

/// Number of UTF-8 code points in `s` (continuation bytes are not counted).
std::size_t utf8_length(std::string_view s);

}  // namespace bwlf
