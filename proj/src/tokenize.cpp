#include "jdcloud/tokenize.hpp"
#include "jdcloud/error.hpp"
#include "jdcloud/utf8.hpp"
#include "detail.hpp"

#include <algorithm>
#include <utility>

namespace jdcloud {

namespace {

bool is_upper(char c) noexcept { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) noexcept { return c >= 'a' && c <= 'z'; }

} // namespace

std::string normalize(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while(i < text.size())
    {
        char const c = text[i];
        if(detail::is_ascii_letter(c))
        {
            out.push_back(c);
            ++i;
            continue;
        }
        out.push_back(' ');
        std::size_t const len = utf8::sequence_length(static_cast<unsigned char>(c));
        i += std::min(len, text.size() - i);
    }
    return out;
}

std::vector<std::string> camel_split(std::string_view word)
{
    if(!std::all_of(word.begin(), word.end(), detail::is_ascii_letter))
        throw ContractError("camel_split expects a purely alphabetic word");

    std::vector<std::string> parts;
    std::string part;
    for(std::size_t i = 0; i < word.size(); ++i)
    {
        if(i > 0)
        {
            char const prev = word[i - 1];
            char const cur = word[i];
            bool const lower_upper = is_lower(prev) && is_upper(cur);
            bool const acronym_end = is_upper(prev) && is_upper(cur) &&
                                     i + 1 < word.size() && is_lower(word[i + 1]);
            if(lower_upper || acronym_end)
                parts.push_back(std::exchange(part, {}));
        }
        part.push_back(detail::ascii_lower(word[i]));
    }
    if(!part.empty())
        parts.push_back(std::move(part));
    return parts;
}

std::vector<std::string> tokenize(std::string_view text, std::size_t min_len)
{
    if(min_len == 0)
        throw ContractError("minimum token length must be at least 1");

    std::string const plain = normalize(text);
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while(i < plain.size())
    {
        if(plain[i] == ' ')
        {
            ++i;
            continue;
        }
        std::size_t const end = std::min(plain.find(' ', i), plain.size());
        for(auto& part : camel_split(std::string_view(plain).substr(i, end - i)))
            if(part.size() >= min_len)
                tokens.push_back(std::move(part));
        i = end;
    }
    return tokens;
}

} // namespace jdcloud
