#include "jdcloud/utf8.hpp"

namespace jdcloud::utf8 {

namespace {

bool is_continuation(unsigned char c) noexcept
{
    return (c & 0xC0) == 0x80;
}

// Length of the valid sequence at `pos`, or 0 if the bytes there do not
// start a well-formed sequence (overlongs and surrogates rejected).
std::size_t valid_length(std::string_view s, std::size_t pos) noexcept
{
    auto const c0 = static_cast<unsigned char>(s[pos]);
    if(c0 < 0x80)
        return 1;
    std::size_t len = 0;
    unsigned char lo = 0x80, hi = 0xBF;
    if(c0 >= 0xC2 && c0 <= 0xDF)
        len = 2;
    else if(c0 >= 0xE0 && c0 <= 0xEF)
    {
        len = 3;
        if(c0 == 0xE0)
            lo = 0xA0;
        else if(c0 == 0xED)
            hi = 0x9F;
    }
    else if(c0 >= 0xF0 && c0 <= 0xF4)
    {
        len = 4;
        if(c0 == 0xF0)
            lo = 0x90;
        else if(c0 == 0xF4)
            hi = 0x8F;
    }
    else
        return 0;
    if(pos + len > s.size())
        return 0;
    auto const c1 = static_cast<unsigned char>(s[pos + 1]);
    if(c1 < lo || c1 > hi)
        return 0;
    for(std::size_t i = 2; i < len; ++i)
        if(!is_continuation(static_cast<unsigned char>(s[pos + i])))
            return 0;
    return len;
}

} // namespace

Sanitized sanitize(std::string_view bytes)
{
    Sanitized result;
    result.text.reserve(bytes.size());
    std::size_t pos = 0;
    while(pos < bytes.size())
    {
        std::size_t const len = valid_length(bytes, pos);
        if(len != 0)
        {
            result.text.append(bytes.substr(pos, len));
            pos += len;
            continue;
        }
        // Skip the lead byte and any continuation bytes that belong to it.
        ++pos;
        while(pos < bytes.size() &&
              is_continuation(static_cast<unsigned char>(bytes[pos])) &&
              valid_length(bytes, pos) == 0)
            ++pos;
        result.text.append(replacement);
        ++result.invalid_sequences;
    }
    return result;
}

void append(std::string& out, char32_t cp)
{
    if(cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
    {
        out.append(replacement);
        return;
    }
    if(cp < 0x80)
        out.push_back(static_cast<char>(cp));
    else if(cp < 0x800)
    {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    else if(cp < 0x10000)
    {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    else
    {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::size_t sequence_length(unsigned char lead) noexcept
{
    if(lead < 0x80)
        return 1;
    if((lead & 0xE0) == 0xC0)
        return 2;
    if((lead & 0xF0) == 0xE0)
        return 3;
    if((lead & 0xF8) == 0xF0)
        return 4;
    return 1;
}

std::size_t count_code_points(std::string_view text) noexcept
{
    std::size_t n = 0;
    for(char c : text)
        if(!is_continuation(static_cast<unsigned char>(c)))
            ++n;
    return n;
}

} // namespace jdcloud::utf8
