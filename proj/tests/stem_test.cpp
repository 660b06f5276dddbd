#include "jdcloud/error.hpp"
#include "jdcloud/stem.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <sstream>

using namespace jdcloud;
using namespace jdcloud::test;

namespace {

std::vector<std::string> validation_words()
{
    std::istringstream in(read_file(data_file("validation_words.txt")));
    std::vector<std::string> words;
    std::string line;
    while(std::getline(in, line))
    {
        if(line.starts_with('#'))
            continue;
        std::istringstream ws(line);
        for(std::string w; ws >> w;)
            words.push_back(w);
    }
    return words;
}

} // namespace

TEST_SUITE("stem") {

TEST_CASE("worked examples")
{
    auto const rules = StemRuleSet::english();
    CHECK(stem("combined", rules) == "combine");
    CHECK(stem("combine", rules) == "combine");
    CHECK(stem("glasses", rules) == "glass");
    CHECK(stem("validates", rules) == "validate");
    CHECK(stem("parsing", rules) == "parse");
    CHECK(stem("message", rules) == "message");
}

TEST_CASE("rule families without a lexicon")
{
    auto const rules = StemRuleSet::english();
    struct Case { std::string_view word, tag; };
    // Cross-checked against tests/oracle/oracle.py with no exceptions.
    static constexpr Case cases[] = {
        {"properties", "property"}, {"entries", "entry"},   {"applied", "apply"},
        {"classes", "class"},       {"matches", "match"},   {"pushes", "push"},
        {"indexes", "index"},       {"buzzes", "buzz"},     {"strings", "string"},
        {"string", "string"},       {"settings", "set"},    {"getting", "get"},
        {"added", "add"},           {"needs", "need"},      {"need", "need"},
        {"used", "use"},            {"uses", "use"},        {"running", "run"},
        {"logging", "log"},         {"handled", "handle"},  {"enabled", "enable"},
        {"configured", "configure"},{"derived", "derive"},  {"removed", "remove"},
        {"joined", "join"},         {"opened", "open"},     {"developed", "develop"},
        {"targeted", "target"},     {"interpreted", "interpret"},
        {"completed", "complete"},  {"based", "base"},      {"closed", "close"},
        {"cases", "case"},          {"things", "thing"},    {"heroes", "hero"},
        {"created", "creat"},       {"nothing", "noth"},    {"always", "alway"},
    };
    for(auto const& c : cases)
    {
        INFO(c.word);
        CHECK(stem(c.word, rules) == c.tag);
    }
}

TEST_CASE("guards and length limits")
{
    auto const rules = StemRuleSet::english();
    CHECK(stem("class", rules) == "class");
    CHECK(stem("status", rules) == "status");
    CHECK(stem("analysis", rules) == "analysis");
    CHECK(stem("this", rules) == "this");
    // roots under three letters are rejected
    CHECK(stem("has", rules) == "has");
    CHECK(stem("was", rules) == "was");
    CHECK(stem("bed", rules) == "bed");
    CHECK(stem("ties", rules) == "tie");
    // words of two letters or fewer are never touched
    CHECK(stem("as", rules) == "as");
    CHECK(stem("is", rules) == "is");
    CHECK(stem("s", rules) == "s");
}

TEST_CASE("stem never returns an empty tag")
{
    auto const rules = StemRuleSet::english();
    for(std::string_view w : {"s", "es", "ed", "ing", "ings", "ies", "ses", "ss", "eed", "oes", "ied"})
        CHECK_FALSE(stem(w, rules).empty());
}

TEST_CASE("exceptions win over rules and length limits")
{
    auto rules = StemRuleSet::english({{"parsing", "parse"}, {"men", "man"}, {"is", "be"}});
    CHECK(stem("parsing", rules) == "parse");
    CHECK(stem("men", rules) == "man");
    CHECK(stem("is", rules) == "be");

    auto const bundled = StemRuleSet::english(bundled_exceptions());
    CHECK(stem("children", bundled) == "child");
    CHECK(stem("created", bundled) == "create");
    CHECK(stem("nothing", bundled) == "nothing");
    CHECK(stem("does", bundled) == "do");
    for(auto const& [word, root] : bundled.exceptions)
        CHECK(stem(word, bundled) == root);
}

TEST_CASE("custom rule sets apply the first matching rule once")
{
    StemRuleSet set{{{"ing", ""}, {"s", ""}}, {}, {"ss"}};
    CHECK(stem("walkings", set) == "walking");
    CHECK(stem("walking", set) == "walk");
    CHECK(stem("boss", set) == "boss");
    StemRuleSet blocking{{{"eed", "eed"}, {"ed", ""}}, {}, {}};
    CHECK(stem("speed", blocking) == "speed");
    CHECK(stem("walked", blocking) == "walk");
}

TEST_CASE("idempotent over the validation lexicon")
{
    auto const rules = StemRuleSet::english(bundled_exceptions());
    auto const words = validation_words();
    REQUIRE(words.size() >= 100);
    for(auto const& w : words)
    {
        auto const once = stem(w, rules);
        INFO(w << " -> " << once);
        CHECK(stem(once, rules) == once);
    }
}

TEST_CASE("parse_exceptions")
{
    CHECK(parse_exceptions("men\tman", "t") == ExceptionMap{{"men", "man"}});
    CHECK(parse_exceptions("", "t").empty());
    CHECK(parse_exceptions("# only a comment\n\n", "t").empty());
    CHECK(parse_exceptions("mice\tmouse # trailing\r\n", "t") == ExceptionMap{{"mice", "mouse"}});

    Diagnostics diag;
    auto const dup = parse_exceptions("a\tb\nx\ty\na\tc\n", "t", &diag);
    CHECK(dup.at("a") == "c");
    CHECK(diag.count() == 1);

    try
    {
        parse_exceptions("ok\tfine\nbroken line\n", "lex.tsv");
        FAIL("expected a line error");
    }
    catch(const LineError& e)
    {
        CHECK(e.line() == 2);
        CHECK(e.file() == "lex.tsv");
    }
    CHECK_THROWS_AS(parse_exceptions("a\tb\tc", "t"), LineError);
    CHECK_THROWS_AS(parse_exceptions("\tb", "t"), LineError);
}

TEST_CASE("load_exceptions")
{
    TempDir dir;
    write_file(dir / "lex.tsv", "men\tman\n");
    CHECK(load_exceptions(dir / "lex.tsv") == ExceptionMap{{"men", "man"}});
    write_file(dir / "empty.tsv", "");
    CHECK(load_exceptions(dir / "empty.tsv").empty());
    CHECK_THROWS_AS(load_exceptions(dir / "missing.tsv"), ConfigError);
}

TEST_CASE("bundled lexicon matches the data file")
{
    CHECK(bundled_exceptions() == load_exceptions(data_file("exceptions.tsv")));
    CHECK(bundled_exceptions().size() > 50);
}

} // TEST_SUITE
