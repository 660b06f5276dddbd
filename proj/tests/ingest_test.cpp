#include "jdcloud/error.hpp"
#include "jdcloud/ingest.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace jdcloud;
using namespace jdcloud::test;

namespace {

bool has_tag_opener(std::string_view s)
{
    for(std::size_t i = 0; i + 1 < s.size(); ++i)
    {
        char const n = s[i + 1];
        if(s[i] == '<' && ((n >= 'a' && n <= 'z') || (n >= 'A' && n <= 'Z') || n == '/'))
            return true;
    }
    return false;
}

std::string source_line(std::string_view src, std::size_t line)
{
    std::size_t pos = 0;
    for(std::size_t i = 1; i < line; ++i)
        pos = src.find('\n', pos) + 1;
    return std::string(src.substr(pos, src.find('\n', pos) - pos));
}

} // namespace

TEST_SUITE("ingest") {

TEST_CASE("kind follows the extension")
{
    CHECK(kind_from_extension("a/B.java") == DocumentKind::java_source);
    CHECK(kind_from_extension("index.html") == DocumentKind::javadoc_html);
    CHECK(kind_from_extension("INDEX.HTM") == DocumentKind::javadoc_html);
    CHECK(kind_from_extension("README") == DocumentKind::plain_text);
    CHECK(kind_from_extension("notes.txt") == DocumentKind::plain_text);
}

TEST_CASE("single-line doc comment")
{
    auto const c = extract_doc_comments("/** Checks the JVM Version. */ void f(){}");
    REQUIRE(c.size() == 1);
    CHECK(c[0].text == "Checks the JVM Version.");
    CHECK(c[0].line == 1);
}

TEST_CASE("openers in line comments and literals are ignored")
{
    CHECK(extract_doc_comments("// not /** a doc */").empty());
    CHECK(extract_doc_comments(R"(String s = "/** no */";)").empty());
    CHECK(extract_doc_comments(R"(String s = "esc \" /** no */";)").empty());
    CHECK(extract_doc_comments("char q = '\"'; /** yes */").size() == 1);
    CHECK(extract_doc_comments("String t = \"\"\"\n /** no */\n\"\"\";").empty());
    CHECK(extract_doc_comments("/* plain /** nested */ x").empty());
    CHECK(extract_doc_comments("/**/ int x;").empty());
}

TEST_CASE("leading asterisks and whitespace are stripped per line")
{
    auto const c = extract_doc_comments("  /**\n   * First line.\n   ** Second {@link Foo}.\n   * @param x the x\n   */");
    REQUIRE(c.size() == 1);
    CHECK(c[0].text == "First line.\n Second {@link Foo}.\n @param x the x");
}

TEST_CASE("CRLF sources")
{
    auto const c = extract_doc_comments("/**\r\n * Windows.\r\n */\r\nclass A {}\r\n");
    REQUIRE(c.size() == 1);
    CHECK(c[0].text == "Windows.");
}

TEST_CASE("fixture with several doc comments keeps file order and lines")
{
    auto const src = read_file(fixture("mini/Parser.java"));
    auto const c = extract_doc_comments(src);
    REQUIRE(c.size() == 3);
    CHECK(c[0].line == 3);
    CHECK(c[1].line == 13);
    CHECK(c[2].line == 21);
    CHECK(c[0].text.starts_with("Parses XML documents"));
    CHECK(c[1].text == "Creates a parser reading from the given reader.\n @param reader the source of characters");
    CHECK(c[2].text.starts_with("Skips whitespace"));

    auto const main = extract_doc_comments(read_file(fixture("table1/Main.java")));
    REQUIRE(main.size() == 6);
    CHECK(main[4].text == "Checks the JVM Version.");
    CHECK(main[4].line == 29);
}

TEST_CASE("unterminated doc comment runs to end of file with a warning")
{
    Diagnostics diag;
    auto const c = extract_doc_comments("class A {}\n/** dangling\n * text", &diag);
    REQUIRE(c.size() == 1);
    CHECK(c[0].text == "dangling\n text");
    CHECK(c[0].line == 2);
    CHECK(diag.count() == 1);
}

TEST_CASE("nested opener never survives in the text")
{
    auto const c = extract_doc_comments("/** outer /** inner */");
    REQUIRE(c.size() == 1);
    CHECK(c[0].text.find("/**") == std::string::npos);
}

TEST_CASE("doc comment invariants on generated sources")
{
    static constexpr std::string_view fragments[] = {
        "/** Doc comment. */", "/**\n * Multi\n * line\n */", "// line /** comment\n",
        "\"str /** ing */\"", "'x'", "'\\''", "/* block */", "/**/", "\n", "int x = 1;",
        "\"\"\"\ntext /** block */\n\"\"\"", "/** a * b ** c */", "*/", "/", "*", "\"",
        "/** {@link Foo#bar} <p>html</p> */", "\t**", "/*** stars */",
    };
    std::mt19937_64 rng(7);
    for(int round = 0; round < 200; ++round)
    {
        std::string src;
        auto const n = 1 + pick(rng, 12);
        for(std::size_t i = 0; i < n; ++i)
            src += fragments[pick(rng, std::size(fragments))];

        Diagnostics diag;
        auto const comments = extract_doc_comments(src, &diag);
        std::size_t last_line = 0;
        for(auto const& c : comments)
        {
            CHECK(c.line >= 1);
            CHECK(c.line >= last_line);
            last_line = c.line;
            CHECK(c.text.find("/**") == std::string::npos);
            CHECK(c.text.find("*/") == std::string::npos);
            CHECK(source_line(src, c.line).find("/**") != std::string::npos);
        }
    }
}

TEST_CASE("strip_html removes tags and decodes entities")
{
    CHECK(strip_html("<b>Checks</b>&nbsp;the&nbsp;JVM") == " Checks  the JVM");
    CHECK(strip_html("<script>var x=1;</script>ok") == " ok");
    CHECK(strip_html("<STYLE type=\"text/css\">p { x: 1 }</STYLE>ok") == " ok");
    CHECK(strip_html("a &amp; b &lt; c &gt; d &quot;e&quot;") == "a & b < c > d \"e\"");
    CHECK(strip_html("&#65;&#x42;&#X43;") == "ABC");
    CHECK(strip_html("x&copy;y") == "x y");
    CHECK(strip_html("AT&T; x & y") == "AT  x & y");
    CHECK(strip_html("a<!-- hidden -->b") == "a b");
    CHECK(strip_html("1 < 2 and 3 > 2") == "1 < 2 and 3 > 2");
    CHECK(strip_html("<a href=\"x>y\">link</a>") == " link ");
    CHECK(strip_html("<br/>") == " ");
}

TEST_CASE("strip_html on the ArgoUML sample page")
{
    auto const text = strip_html(read_file(fixture("table1/table1.html")));
    CHECK(text.find("The main entry point of ArgoUML") != std::string::npos);
    CHECK(text.find("windowTitle") == std::string::npos);
    CHECK(text.find("START OF CLASS DATA") == std::string::npos);
    CHECK(text.find("static java.lang.String") != std::string::npos);
}

TEST_CASE("strip_html output never contains a tag opener")
{
    static constexpr std::string_view fragments[] = {
        "<", ">", "/", "a", "B", "<p>", "</p>", "&lt;", "&lt;b", "&#60;/", "<!--", "-->",
        "<script>", "</script>", "\"", "'", "=", " ", "&", ";", "<x y='", "text", "&#0;",
        "&#x3c;i", "<?xml?>", "<!DOCTYPE html>",
    };
    std::mt19937_64 rng(11);
    for(int round = 0; round < 300; ++round)
    {
        std::string page;
        auto const n = pick(rng, 20);
        for(std::size_t i = 0; i < n; ++i)
            page += fragments[pick(rng, std::size(fragments))];
        auto const text = strip_html(page);
        INFO(page);
        CHECK_FALSE(has_tag_opener(text));
    }
}

TEST_CASE("doc_text of every kind is markup free")
{
    CHECK(extract_doc_text("/** A <code>List</code> of x. */", DocumentKind::java_source) ==
          "A  List  of x.");
    CHECK_FALSE(has_tag_opener(extract_doc_text("a<b and </c", DocumentKind::plain_text)));
}

TEST_CASE("glob matching")
{
    CHECK(glob_match("*.java", "Main.java"));
    CHECK_FALSE(glob_match("*.java", "Main.javax"));
    CHECK(glob_match("?ain.*", "Main.txt"));
    CHECK(glob_match("[A-Z]*.htm", "Index.htm"));
}

TEST_CASE("scan_corpus lists matching files in sorted order")
{
    Diagnostics diag;
    auto const docs = scan_corpus({fixture("mini")}, {"*.java"}, diag);
    REQUIRE(docs.size() == 3);
    CHECK(docs[0].path.filename() == "Element.java");
    CHECK(docs[1].path.filename() == "Parser.java");
    CHECK(docs[2].path.filename() == "XMLWriter.java");
    for(auto const& d : docs)
    {
        CHECK(d.kind == DocumentKind::java_source);
        CHECK_FALSE(has_tag_opener(d.doc_text));
    }
    CHECK(docs[0].doc_text.find("Children are kept in insertion order.") != std::string::npos);

    auto const again = scan_corpus({fixture("mini")}, {"*.java"}, diag);
    REQUIRE(again.size() == docs.size());
    for(std::size_t i = 0; i < docs.size(); ++i)
        CHECK(again[i].path == docs[i].path);
}

TEST_CASE("scan_corpus honours a kind override and explicit files")
{
    Diagnostics diag;
    auto const docs = scan_corpus({fixture("table1/Main.java")}, {"*.txt"}, diag,
                                  DocumentKind::plain_text);
    REQUIRE(docs.size() == 1);
    CHECK(docs[0].kind == DocumentKind::plain_text);
    CHECK(docs[0].doc_text.find("import java.util.List;") != std::string::npos);
}

TEST_CASE("scan_corpus errors")
{
    Diagnostics diag;
    TempDir empty;
    CHECK_THROWS_AS(scan_corpus({empty.path()}, {}, diag), EmptyCorpusError);
    CHECK_THROWS_AS(scan_corpus({"/nonexistent/jdcloud"}, {}, diag), CorpusError);
    CHECK_THROWS_AS(scan_corpus({fixture("mini")}, {"*.cpp"}, diag), EmptyCorpusError);

    Diagnostics partial;
    auto const docs = scan_corpus({"/nonexistent/jdcloud", fixture("mini/notes.txt")}, {}, partial);
    CHECK(docs.size() == 1);
    CHECK(partial.count() == 1);
}

TEST_CASE("unreadable files are skipped with a warning")
{
    Diagnostics diag;
    CHECK_FALSE(load_document("/nonexistent/jdcloud/A.java", std::nullopt, diag).has_value());
    CHECK(diag.count() == 1);
}

TEST_CASE("invalid UTF-8 is replaced and counted")
{
    TempDir dir;
    write_file(dir / "bad.txt", "caf\xC3\xA9 \xFF\xFE ok \xE2\x82");
    Diagnostics diag;
    auto const doc = load_document(dir / "bad.txt", std::nullopt, diag);
    REQUIRE(doc.has_value());
    CHECK(doc->raw == "caf\xC3\xA9 \xEF\xBF\xBD\xEF\xBF\xBD ok \xEF\xBF\xBD");
    CHECK(diag.count() == 1);
    CHECK(diag.warnings()[0].find("3 invalid") != std::string::npos);
}

} // TEST_SUITE
