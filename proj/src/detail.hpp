#pragma once

#include <string>

namespace jdcloud::detail {

inline bool is_ascii_letter(char c) noexcept
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline char ascii_lower(char c) noexcept
{
    return c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c;
}

// '<' that would read as an element tag becomes a space.
inline void neutralize_tag_openers(std::string& text)
{
    for(std::size_t i = 0; i + 1 < text.size(); ++i)
        if(text[i] == '<' && (is_ascii_letter(text[i + 1]) || text[i + 1] == '/'))
            text[i] = ' ';
}

} // namespace jdcloud::detail
