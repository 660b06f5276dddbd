#include "jdcloud/ingest.hpp"
#include "jdcloud/error.hpp"
#include "jdcloud/utf8.hpp"
#include "detail.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fnmatch.h>
#include <fstream>
#include <sstream>
#include <system_error>

namespace fs = std::filesystem;

namespace jdcloud {

std::string_view to_string(DocumentKind kind) noexcept
{
    switch(kind)
    {
    case DocumentKind::java_source: return "java-source";
    case DocumentKind::javadoc_html: return "javadoc-html";
    case DocumentKind::plain_text: return "plain-text";
    }
    return "plain-text";
}

DocumentKind kind_from_extension(const fs::path& path)
{
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), detail::ascii_lower);
    if(ext == ".java")
        return DocumentKind::java_source;
    if(ext == ".html" || ext == ".htm")
        return DocumentKind::javadoc_html;
    return DocumentKind::plain_text;
}

//------------------------------------------------
//
// Doc comment extraction
//
//------------------------------------------------

namespace {

class LineCounter {
public:
    explicit LineCounter(std::string_view text) : text_(text) {}

    std::size_t at(std::size_t pos)
    {
        line_ += static_cast<std::size_t>(
            std::count(text_.begin() + static_cast<std::ptrdiff_t>(pos_),
                       text_.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
        pos_ = pos;
        return line_;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

// Index just past a quoted literal that opened at `pos`. Literals end at an
// unescaped closing quote or, when unterminated, at the end of the line.
std::size_t skip_literal(std::string_view s, std::size_t pos, char quote)
{
    std::size_t i = pos + 1;
    while(i < s.size())
    {
        char const c = s[i];
        if(c == '\\')
            i += 2;
        else if(c == quote)
            return i + 1;
        else if(c == '\n')
            return i;
        else
            ++i;
    }
    return s.size();
}

std::size_t skip_text_block(std::string_view s, std::size_t pos)
{
    std::size_t i = pos + 3;
    while(i < s.size())
    {
        if(s[i] == '\\')
            i += 2;
        else if(s.compare(i, 3, R"(""")") == 0)
            return i + 3;
        else
            ++i;
    }
    return s.size();
}

bool is_blank(char c) noexcept
{
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v' || c == '\n';
}

std::string clean_body(std::string_view body)
{
    std::string text;
    std::size_t start = 0;
    bool first = true;
    while(start <= body.size())
    {
        std::size_t end = body.find('\n', start);
        if(end == std::string_view::npos)
            end = body.size();
        std::string_view line = body.substr(start, end - start);

        // one leading run of whitespace followed by asterisks
        std::size_t i = 0;
        while(i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        if(i < line.size() && line[i] == '*')
        {
            while(i < line.size() && line[i] == '*')
                ++i;
            line.remove_prefix(i);
        }
        while(!line.empty() && is_blank(line.back()))
            line.remove_suffix(1);

        if(!first)
            text.push_back('\n');
        text.append(line);
        first = false;
        start = end + 1;
    }

    // A nested opener is plain text in Java; keep it out of the result.
    for(std::size_t p = text.find("/**"); p != std::string::npos; p = text.find("/**", p))
        text.replace(p, 3, " ");

    auto const b = text.find_first_not_of(" \t\r\n\f\v");
    if(b == std::string::npos)
        return {};
    auto const e = text.find_last_not_of(" \t\r\n\f\v");
    return text.substr(b, e - b + 1);
}

} // namespace

std::vector<DocComment> extract_doc_comments(std::string_view s, Diagnostics* diag)
{
    std::vector<DocComment> comments;
    LineCounter lines(s);
    std::size_t i = 0;
    while(i < s.size())
    {
        char const c = s[i];
        if(c == '/' && i + 1 < s.size() && s[i + 1] == '/')
        {
            std::size_t const nl = s.find('\n', i);
            i = nl == std::string_view::npos ? s.size() : nl;
        }
        else if(c == '/' && i + 1 < s.size() && s[i + 1] == '*')
        {
            bool const doc = i + 2 < s.size() && s[i + 2] == '*' &&
                             !(i + 3 < s.size() && s[i + 3] == '/');
            std::size_t const body = doc ? i + 3 : i + 2;
            std::size_t const close = s.find("*/", body);
            if(doc)
            {
                std::size_t const line = lines.at(i);
                std::string_view const content = close == std::string_view::npos
                    ? s.substr(body)
                    : s.substr(body, close - body);
                if(close == std::string_view::npos && diag)
                    diag->warn(fmt::format(
                        "line {}: unterminated doc comment runs to end of file", line));
                comments.push_back({clean_body(content), line});
            }
            i = close == std::string_view::npos ? s.size() : close + 2;
        }
        else if(c == '"')
        {
            i = s.compare(i, 3, R"(""")") == 0 ? skip_text_block(s, i)
                                                : skip_literal(s, i, '"');
        }
        else if(c == '\'')
        {
            i = skip_literal(s, i, '\'');
        }
        else
        {
            ++i;
        }
    }
    return comments;
}

//------------------------------------------------
//
// Documents
//
//------------------------------------------------

std::string extract_doc_text(std::string_view raw, DocumentKind kind, Diagnostics* diag)
{
    switch(kind)
    {
    case DocumentKind::java_source:
    {
        std::string joined;
        for(auto const& comment : extract_doc_comments(raw, diag))
        {
            if(!joined.empty())
                joined.push_back('\n');
            joined.append(comment.text);
        }
        // Javadoc bodies are HTML fragments.
        return strip_html(joined);
    }
    case DocumentKind::javadoc_html:
        return strip_html(raw);
    case DocumentKind::plain_text:
        break;
    }
    std::string text(raw);
    detail::neutralize_tag_openers(text);
    return text;
}

std::optional<SourceDocument> load_document(const fs::path& path,
                                            std::optional<DocumentKind> kind_override,
                                            Diagnostics& diag)
{
    std::ifstream in(path, std::ios::binary);
    if(!in)
    {
        diag.warn(fmt::format("{}: cannot open file, skipped", path.generic_string()));
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if(in.bad())
    {
        diag.warn(fmt::format("{}: read error, skipped", path.generic_string()));
        return std::nullopt;
    }

    auto sanitized = utf8::sanitize(buffer.str());
    if(sanitized.invalid_sequences != 0)
        diag.warn(fmt::format("{}: {} invalid UTF-8 sequence(s) replaced",
                              path.generic_string(), sanitized.invalid_sequences));

    SourceDocument doc;
    doc.path = path;
    doc.kind = kind_override.value_or(kind_from_extension(path));
    doc.raw = std::move(sanitized.text);

    Diagnostics local;
    doc.doc_text = extract_doc_text(doc.raw, doc.kind, &local);
    for(auto const& w : local.warnings())
        diag.warn(fmt::format("{}: {}", path.generic_string(), w));
    return doc;
}

//------------------------------------------------
//
// Corpus discovery
//
//------------------------------------------------

bool glob_match(std::string_view pattern, std::string_view name)
{
    std::string const p(pattern);
    std::string const n(name);
    return ::fnmatch(p.c_str(), n.c_str(), 0) == 0;
}

namespace {

bool matches_any(const std::vector<std::string>& globs, const fs::path& file)
{
    if(globs.empty())
        return true;
    std::string const name = file.filename().string();
    return std::any_of(globs.begin(), globs.end(),
                       [&](const std::string& g) { return glob_match(g, name); });
}

} // namespace

std::vector<fs::path> list_corpus(const std::vector<fs::path>& roots,
                                  const std::vector<std::string>& include_globs,
                                  Diagnostics& diag)
{
    std::vector<fs::path> files;
    std::size_t existing = 0;
    for(auto const& root : roots)
    {
        std::error_code ec;
        auto const st = fs::status(root, ec);
        if(ec || !fs::exists(st))
        {
            diag.warn(fmt::format("{}: no such file or directory", root.generic_string()));
            continue;
        }
        ++existing;
        if(fs::is_regular_file(st))
        {
            files.push_back(root);
            continue;
        }
        if(!fs::is_directory(st))
        {
            diag.warn(fmt::format("{}: not a regular file or directory, skipped",
                                  root.generic_string()));
            continue;
        }
        fs::recursive_directory_iterator it(
            root, fs::directory_options::skip_permission_denied, ec);
        if(ec)
        {
            diag.warn(fmt::format("{}: {}", root.generic_string(), ec.message()));
            continue;
        }
        for(; it != fs::recursive_directory_iterator(); it.increment(ec))
        {
            if(ec)
            {
                diag.warn(fmt::format("{}: {}", root.generic_string(), ec.message()));
                break;
            }
            std::error_code fec;
            if(it->is_regular_file(fec) && matches_any(include_globs, it->path()))
                files.push_back(it->path());
        }
    }

    if(existing == 0)
        throw CorpusError("none of the input paths exist");

    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.generic_string() < b.generic_string();
    });
    files.erase(std::unique(files.begin(), files.end(),
                            [](const fs::path& a, const fs::path& b) {
                                return a.generic_string() == b.generic_string();
                            }),
                files.end());

    if(files.empty())
        throw EmptyCorpusError("no input files matched");
    return files;
}

std::vector<SourceDocument> scan_corpus(const std::vector<fs::path>& roots,
                                        const std::vector<std::string>& include_globs,
                                        Diagnostics& diag,
                                        std::optional<DocumentKind> kind_override)
{
    std::vector<SourceDocument> docs;
    for(auto const& path : list_corpus(roots, include_globs, diag))
        if(auto doc = load_document(path, kind_override, diag))
            docs.push_back(std::move(*doc));
    if(docs.empty())
        throw EmptyCorpusError("no input file could be read");
    return docs;
}

} // namespace jdcloud
