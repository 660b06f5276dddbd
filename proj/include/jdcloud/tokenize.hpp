#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace jdcloud {

/// Replaces every character that is not an ASCII letter with one space.
/// A multi-byte UTF-8 sequence counts as one character.
std::string normalize(std::string_view text);

/** Splits an alphabetic word at camel-case boundaries and lowercases the parts.

    A boundary falls between a lowercase letter and the uppercase letter
    after it, and before an uppercase letter that starts an Upper-lower pair
    following another uppercase letter, so "XMLParser" gives "xml", "parser".
    Mixed words such as "GeTSettingS" are split mechanically.
*/
std::vector<std::string> camel_split(std::string_view word);

/// normalize, split on whitespace, camel_split, then drop parts shorter than
/// `min_len`. Order follows the text. Throws ContractError when min_len is 0.
std::vector<std::string> tokenize(std::string_view text, std::size_t min_len = 1);

} // namespace jdcloud
