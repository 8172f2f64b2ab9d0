#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace qrkit::utf8 {

/// Decode the codepoint starting at byte offset `i`. On success advances `i`
/// past the sequence and stores the codepoint in `cp`. Rejects truncated
/// sequences, overlong encodings, surrogates and values above U+10FFFF.
bool decode(std::string_view s, std::size_t& i, char32_t& cp);

/// Append `cp` to `out` as UTF-8.
void append(std::string& out, char32_t cp);

/// True when `s` is entirely well-formed UTF-8.
bool valid(std::string_view s);

/// Number of codepoints in `s`; undecodable bytes count as one each.
std::size_t length(std::string_view s);

}  // namespace qrkit::utf8
