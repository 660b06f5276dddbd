#include "jdcloud/ingest.hpp"
#include "jdcloud/utf8.hpp"
#include "detail.hpp"

#include <array>
#include <charconv>
#include <utility>

namespace jdcloud {

namespace {

bool starts_with_ci(std::string_view s, std::size_t pos, std::string_view prefix)
{
    if(pos + prefix.size() > s.size())
        return false;
    for(std::size_t i = 0; i < prefix.size(); ++i)
        if(detail::ascii_lower(s[pos + i]) != prefix[i])
            return false;
    return true;
}

bool is_name_char(char c) noexcept
{
    return detail::is_ascii_letter(c) || (c >= '0' && c <= '9') || c == '-';
}

// Index of the '>' closing the tag opened at `pos`, skipping quoted
// attribute values, or npos.
std::size_t find_tag_end(std::string_view s, std::size_t pos)
{
    char quote = 0;
    for(std::size_t i = pos + 1; i < s.size(); ++i)
    {
        char const c = s[i];
        if(quote)
        {
            if(c == quote)
                quote = 0;
        }
        else if(c == '"' || c == '\'')
        {
            // Only an attribute value if it follows '='.
            std::size_t j = i;
            while(j > pos && (s[j - 1] == ' ' || s[j - 1] == '\t' || s[j - 1] == '\n'))
                --j;
            if(j > pos && s[j - 1] == '=')
                quote = c;
        }
        else if(c == '>')
            return i;
    }
    return std::string_view::npos;
}

// Index just past the end tag of a raw-text element, or end of input.
std::size_t skip_raw_text(std::string_view s, std::size_t pos, std::string_view name)
{
    for(std::size_t i = s.find('<', pos); i != std::string_view::npos; i = s.find('<', i + 1))
    {
        if(i + 1 < s.size() && s[i + 1] == '/' && starts_with_ci(s, i + 2, name))
        {
            std::size_t const after = i + 2 + name.size();
            if(after >= s.size() || !detail::is_ascii_letter(s[after]))
            {
                std::size_t const end = s.find('>', after);
                return end == std::string_view::npos ? s.size() : end + 1;
            }
        }
    }
    return s.size();
}

struct Entity {
    std::size_t length = 0; // bytes consumed, 0 if not an entity
    std::string text;
};

Entity decode_entity(std::string_view s, std::size_t pos)
{
    constexpr std::size_t max_name = 32;
    std::size_t const semi = s.find(';', pos + 1);
    if(semi == std::string_view::npos || semi - pos - 1 == 0 || semi - pos - 1 > max_name)
        return {};
    std::string_view const body = s.substr(pos + 1, semi - pos - 1);
    std::size_t const length = semi - pos + 1;

    if(body[0] == '#')
    {
        std::string_view digits = body.substr(1);
        int base = 10;
        if(!digits.empty() && (digits[0] == 'x' || digits[0] == 'X'))
        {
            digits.remove_prefix(1);
            base = 16;
        }
        std::uint32_t value = 0;
        auto const [end, ec] =
            std::from_chars(digits.data(), digits.data() + digits.size(), value, base);
        if(digits.empty() || ec != std::errc() || end != digits.data() + digits.size())
            return {};
        Entity e{length, {}};
        utf8::append(e.text, value == 0 ? char32_t{0xFFFD} : char32_t{value});
        return e;
    }

    for(char c : body)
        if(!detail::is_ascii_letter(c) && !(c >= '0' && c <= '9'))
            return {};

    static constexpr std::array<std::pair<std::string_view, std::string_view>, 5> known{{
        {"amp", "&"}, {"lt", "<"}, {"gt", ">"}, {"quot", "\""}, {"nbsp", " "},
    }};
    for(auto const& [name, value] : known)
        if(body == name)
            return {length, std::string(value)};
    return {length, " "};
}

} // namespace

std::string strip_html(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while(i < s.size())
    {
        char const c = s[i];
        if(c == '&')
        {
            auto entity = decode_entity(s, i);
            if(entity.length == 0)
            {
                out.push_back('&');
                ++i;
            }
            else
            {
                out.append(entity.text);
                i += entity.length;
            }
            continue;
        }
        if(c != '<' || i + 1 >= s.size())
        {
            out.push_back(c);
            ++i;
            continue;
        }

        char const next = s[i + 1];
        if(s.compare(i, 4, "<!--") == 0)
        {
            std::size_t const end = s.find("-->", i + 4);
            out.push_back(' ');
            i = end == std::string_view::npos ? s.size() : end + 3;
            continue;
        }
        if(!detail::is_ascii_letter(next) && next != '/' && next != '!' && next != '?')
        {
            out.push_back(c);
            ++i;
            continue;
        }

        std::size_t const end = find_tag_end(s, i);
        if(end == std::string_view::npos)
        {
            // Unclosed tag: drop only the bracket.
            out.push_back(' ');
            ++i;
            continue;
        }
        out.push_back(' ');
        std::size_t next_pos = end + 1;
        if(detail::is_ascii_letter(next) && s[end - 1] != '/')
        {
            for(std::string_view raw : {std::string_view("script"), std::string_view("style")})
            {
                std::size_t const after = i + 1 + raw.size();
                if(starts_with_ci(s, i + 1, raw) &&
                   (after >= s.size() || !is_name_char(s[after])))
                {
                    next_pos = skip_raw_text(s, end + 1, raw);
                    break;
                }
            }
        }
        i = next_pos;
    }
    detail::neutralize_tag_openers(out);
    return out;
}

} // namespace jdcloud
