#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace jdcloud::utf8 {

/// U+FFFD encoded as UTF-8.
inline constexpr std::string_view replacement = "\xEF\xBF\xBD";

struct Sanitized {
    std::string text;
    std::size_t invalid_sequences = 0;
};

/// Replaces every maximal invalid subsequence with U+FFFD.
Sanitized sanitize(std::string_view bytes);

/// Appends the UTF-8 encoding of a code point. Surrogates and values past
/// U+10FFFF are written as U+FFFD.
void append(std::string& out, char32_t cp);

/// Length in bytes of the sequence starting with `lead`, or 1 for a stray byte.
std::size_t sequence_length(unsigned char lead) noexcept;

/// Number of code points in already-valid UTF-8.
std::size_t count_code_points(std::string_view text) noexcept;

} // namespace jdcloud::utf8
