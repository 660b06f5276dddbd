#pragma once

#include "jdcloud/diagnostics.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jdcloud {

enum class DocumentKind { java_source, javadoc_html, plain_text };

std::string_view to_string(DocumentKind kind) noexcept;

/// Kind implied by the file extension: .java, .html/.htm, anything else.
DocumentKind kind_from_extension(const std::filesystem::path& path);

/// One Javadoc block. `line` is the 1-based line of the opening delimiter.
struct DocComment {
    std::string text;
    std::size_t line = 1;

    bool operator==(const DocComment&) const = default;
};

struct SourceDocument {
    std::filesystem::path path;
    DocumentKind kind = DocumentKind::plain_text;
    std::string raw;
    std::string doc_text;
};

/** Returns the Javadoc blocks of a Java source file in file order.

    A small lexer tracks string, character, text-block, line-comment and
    ordinary block-comment state, so an opener inside any of those is not a
    doc comment. Per body line one leading run of whitespace followed by
    asterisks is removed. Block and inline tags are left in place.

    An unterminated block runs to end of input and adds a warning to
    `diag` when one is supplied.
*/
std::vector<DocComment> extract_doc_comments(std::string_view source,
                                             Diagnostics* diag = nullptr);

/** Reduces HTML to its text content.

    Script and style content is dropped, every other element tag becomes a
    single space, and the entities amp, lt, gt, quot, nbsp plus numeric
    references are decoded. Any other entity becomes a space. Whitespace
    runs are kept. Never fails on malformed markup, and the result never
    contains '<' directly followed by an ASCII letter or '/'.
*/
std::string strip_html(std::string_view page);

/// Computes `doc_text` for a document of the given kind.
std::string extract_doc_text(std::string_view raw, DocumentKind kind,
                             Diagnostics* diag = nullptr);

/// Reads and decodes one file. Returns nullopt (with a warning) when it
/// cannot be read.
std::optional<SourceDocument> load_document(const std::filesystem::path& path,
                                            std::optional<DocumentKind> kind_override,
                                            Diagnostics& diag);

/// Shell-style glob match (`*`, `?`, `[...]`) against a file name.
bool glob_match(std::string_view pattern, std::string_view name);

/** Lists the corpus files under `roots`, sorted by path.

    Directories are walked recursively and a regular file is kept when its
    file name matches any of `include_globs` (an empty list matches every
    file). A root that names a regular file is always kept. Missing roots
    are reported as warnings; if none of them exist a CorpusError is thrown,
    and if nothing matched an EmptyCorpusError is thrown.
*/
std::vector<std::filesystem::path> list_corpus(
    const std::vector<std::filesystem::path>& roots,
    const std::vector<std::string>& include_globs, Diagnostics& diag);

/// list_corpus followed by load_document on every path, in sorted order.
/// Unreadable files are skipped with a warning.
std::vector<SourceDocument> scan_corpus(
    const std::vector<std::filesystem::path>& roots,
    const std::vector<std::string>& include_globs, Diagnostics& diag,
    std::optional<DocumentKind> kind_override = std::nullopt);

} // namespace jdcloud
