#pragma once

#include "jdcloud/diagnostics.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace jdcloud {

/// Rewrites a trailing `suffix` to `replacement`. A rule whose replacement
/// equals its suffix is a blocking rule: it matches and leaves the word alone.
struct SuffixRule {
    std::string suffix;
    std::string replacement;

    bool operator==(const SuffixRule&) const = default;
};

using ExceptionMap = std::map<std::string, std::string, std::less<>>;

/** Suffix-detachment rules plus an exception lexicon.

    `stem` looks the word up in `exceptions` first. Otherwise words of at
    most two letters are returned as is, and the first rule in `rules`
    that matches and yields an acceptable root is applied once. A root is
    acceptable when it has at least three letters and a vowel ('y' counts
    after the first letter). The bare "s" rule does not fire on words that
    end in any pattern of `guard`.
*/
struct StemRuleSet {
    std::vector<SuffixRule> rules;
    ExceptionMap exceptions;
    std::vector<std::string> guard;

    /// Default rules and guard with the given lexicon.
    static StemRuleSet english(ExceptionMap exceptions = {});
};

/// The default ordered rule list.
const std::vector<SuffixRule>& default_suffix_rules();

/// Word endings exempt from the bare "s" rule: "ss", "us", "is".
const std::vector<std::string>& default_s_guard();

/// Reduces a lowercase token to its tag.
std::string stem(std::string_view word, const StemRuleSet& rules);

/** Parses lexicon text: one "word<TAB>root" per line.

    '#' starts a comment and blank lines are ignored. A repeated word keeps
    the last entry and adds a warning. A line without exactly one tab, or
    with an empty field, throws LineError naming `source` and the line.
*/
ExceptionMap parse_exceptions(std::string_view text, std::string_view source,
                              Diagnostics* diag = nullptr);

/// Reads a lexicon file. An unreadable file throws ConfigError.
ExceptionMap load_exceptions(const std::filesystem::path& path,
                             Diagnostics* diag = nullptr);

/// Raw text of the lexicon shipped with the library.
std::string_view bundled_exceptions_text() noexcept;

/// The shipped lexicon, parsed once.
const ExceptionMap& bundled_exceptions();

} // namespace jdcloud
