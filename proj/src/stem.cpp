#include "jdcloud/stem.hpp"
#include "jdcloud/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace jdcloud {

namespace {

struct Ending {
    std::string_view stem_end;
    std::string_view root_end;
};

// Stem endings left behind once "ed" or "ing" is detached, and what the
// root should end with instead. Entries are tried in order, so blocking
// entries (root_end == stem_end) precede the shorter endings they shadow.
constexpr Ending inflection_endings[] = {
    // kept as they are
    {"ss", "ss"},   {"eat", "eat"}, {"oat", "oat"}, {"ain", "ain"}, {"oin", "oin"},
    {"ein", "ein"}, {"uin", "uin"}, {"our", "our"}, {"ook", "ook"}, {"eak", "eak"},
    {"oak", "oak"}, {"ear", "ear"}, {"oar", "oar"}, {"air", "air"}, {"aim", "aim"},
    {"eam", "eam"}, {"oam", "oam"}, {"oid", "oid"}, {"ood", "ood"}, {"oud", "oud"},
    {"oul", "oul"}, {"ail", "ail"}, {"oil", "oil"}, {"eil", "eil"}, {"eap", "eap"},
    {"oop", "oop"}, {"lop", "lop"}, {"out", "out"}, {"oot", "oot"}, {"eet", "eet"},
    {"ret", "ret"}, {"get", "get"}, {"ket", "ket"},
    // doubled final consonant
    {"bb", "b"}, {"dd", "d"}, {"gg", "g"}, {"mm", "m"},
    {"nn", "n"}, {"pp", "p"}, {"rr", "r"}, {"tt", "t"},
    // silent e restored
    {"at", "ate"}, {"bl", "ble"}, {"cl", "cle"}, {"dl", "dle"}, {"fl", "fle"},
    {"gl", "gle"}, {"kl", "kle"}, {"pl", "ple"}, {"tl", "tle"}, {"zl", "zle"},
    {"iz", "ize"}, {"yz", "yze"}, {"v", "ve"},    {"ur", "ure"}, {"in", "ine"},
    {"ok", "oke"}, {"ak", "ake"}, {"ang", "ange"}, {"ag", "age"}, {"rg", "rge"},
    {"dg", "dge"}, {"c", "ce"},   {"ut", "ute"},  {"ot", "ote"}, {"et", "ete"},
    {"id", "ide"}, {"od", "ode"}, {"ud", "ude"},  {"um", "ume"}, {"am", "ame"},
    {"im", "ime"}, {"ir", "ire"}, {"ar", "are"},  {"ap", "ape"}, {"op", "ope"},
    {"yp", "ype"}, {"ib", "ibe"}, {"ul", "ule"},  {"il", "ile"}, {"u", "ue"},
    {"s", "se"},
};

void add_inflection(std::vector<SuffixRule>& rules, std::string_view suffix)
{
    for(auto const& e : inflection_endings)
        rules.push_back({std::string(e.stem_end) + std::string(suffix),
                         std::string(e.root_end)});
    rules.push_back({std::string(suffix), ""});
}

std::vector<SuffixRule> make_default_rules()
{
    std::vector<SuffixRule> rules = {
        {"ies", "y"}, {"sses", "ss"}, {"ches", "ch"}, {"shes", "sh"},
        {"xes", "x"}, {"zzes", "zz"}, {"ied", "y"},   {"eed", "eed"},
    };
    add_inflection(rules, "ed");
    add_inflection(rules, "ings");
    add_inflection(rules, "ing");
    rules.push_back({"oes", "o"});
    rules.push_back({"s", ""});
    return rules;
}

bool is_vowel_at(std::string_view w, std::size_t i) noexcept
{
    switch(w[i])
    {
    case 'a': case 'e': case 'i': case 'o': case 'u':
        return true;
    case 'y':
        return i > 0;
    default:
        return false;
    }
}

bool acceptable_root(std::string_view root) noexcept
{
    if(root.size() < 3)
        return false;
    for(std::size_t i = 0; i < root.size(); ++i)
        if(is_vowel_at(root, i))
            return true;
    return false;
}

bool ends_with_any(std::string_view word, const std::vector<std::string>& endings)
{
    return std::any_of(endings.begin(), endings.end(),
                       [&](const std::string& e) { return word.ends_with(e); });
}

} // namespace

const std::vector<SuffixRule>& default_suffix_rules()
{
    static const std::vector<SuffixRule> rules = make_default_rules();
    return rules;
}

const std::vector<std::string>& default_s_guard()
{
    static const std::vector<std::string> guard = {"ss", "us", "is"};
    return guard;
}

StemRuleSet StemRuleSet::english(ExceptionMap exceptions)
{
    return {default_suffix_rules(), std::move(exceptions), default_s_guard()};
}

std::string stem(std::string_view word, const StemRuleSet& set)
{
    if(auto it = set.exceptions.find(word); it != set.exceptions.end())
        return it->second;
    if(word.size() <= 2)
        return std::string(word);

    for(auto const& rule : set.rules)
    {
        if(!word.ends_with(rule.suffix))
            continue;
        if(rule.replacement == rule.suffix)
            return std::string(word);
        if(rule.suffix == "s" && rule.replacement.empty() && ends_with_any(word, set.guard))
            continue;
        std::string root(word.substr(0, word.size() - rule.suffix.size()));
        root += rule.replacement;
        if(acceptable_root(root))
            return root;
    }
    return std::string(word);
}

//------------------------------------------------

ExceptionMap parse_exceptions(std::string_view text, std::string_view source,
                              Diagnostics* diag)
{
    ExceptionMap map;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while(pos < text.size())
    {
        std::size_t end = text.find('\n', pos);
        if(end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if(auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        while(!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.remove_suffix(1);
        while(!line.empty() && line.front() == ' ')
            line.remove_prefix(1);
        if(line.empty())
            continue;

        auto const tab = line.find('\t');
        if(tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos)
            throw LineError(std::string(source), line_no,
                            "expected exactly one tab between word and root");
        std::string_view word = line.substr(0, tab);
        std::string_view root = line.substr(tab + 1);
        while(!word.empty() && word.back() == ' ')
            word.remove_suffix(1);
        while(!root.empty() && root.front() == ' ')
            root.remove_prefix(1);
        if(word.empty() || root.empty())
            throw LineError(std::string(source), line_no, "empty word or root");

        auto [it, inserted] = map.try_emplace(std::string(word), root);
        if(!inserted)
        {
            if(diag)
                diag->warn(fmt::format("{}:{}: duplicate entry for '{}', last one wins",
                                       source, line_no, word));
            it->second = std::string(root);
        }
    }
    return map;
}

ExceptionMap load_exceptions(const std::filesystem::path& path, Diagnostics* diag)
{
    std::ifstream in(path, std::ios::binary);
    if(!in)
        throw ConfigError(fmt::format("{}: cannot read exception lexicon",
                                      path.generic_string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_exceptions(buffer.str(), path.generic_string(), diag);
}

const ExceptionMap& bundled_exceptions()
{
    static const ExceptionMap map = parse_exceptions(bundled_exceptions_text(), "<bundled>");
    return map;
}

} // namespace jdcloud
