#pragma once

#include "jdcloud/diagnostics.hpp"
#include "jdcloud/ingest.hpp"
#include "jdcloud/render.hpp"
#include "jdcloud/stem.hpp"
#include "jdcloud/tagstats.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace jdcloud {

enum class InputMode { automatic, java, html, text };
enum class OutputFormat { svg, html, tsv };

struct RunConfig {
    std::vector<std::filesystem::path> inputs;
    InputMode mode = InputMode::automatic;
    OutputFormat format = OutputFormat::svg;
    /// Empty means the artifact goes to the output stream.
    std::filesystem::path output;
    /// Empty means the default patterns for `mode`.
    std::vector<std::string> include_globs;
    std::size_t min_token_len = 1;
    std::optional<std::filesystem::path> stopword_path;
    /// Replaces the bundled lexicon when set.
    std::optional<std::filesystem::path> exception_path;
    std::size_t report_k = 5;
    /// 0 picks the hardware concurrency.
    unsigned jobs = 0;
    CloudStyle style;
};

struct RunReport {
    std::size_t documents = 0;
    std::uint64_t tokens = 0;
    std::size_t distinct_tags = 0;
    std::vector<TagEntry> top;
    std::vector<TagEntry> bottom;
    std::size_t warnings = 0;
    double elapsed_ms = 0;
};

/// Exit statuses of `run`.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_corpus = 2,
    exit_output = 3,
};

/// Glob patterns used when RunConfig::include_globs is empty.
std::vector<std::string> default_globs(InputMode mode);

/// Reads a stop list: one word per line, '#' comments, lowercased.
std::set<std::string, std::less<>> load_stopwords(const std::filesystem::path& path);

/// Everything the pipeline computed, before rendering.
struct CorpusAnalysis {
    std::size_t documents = 0;
    TagTable table;
    Diagnostics diagnostics;
};

/** Runs extraction, tokenization, stemming, stop-word removal and counting.

    Per-document work runs on `config.jobs` threads; results are merged in
    sorted-path order so the table never depends on scheduling. Throws
    CorpusError/EmptyCorpusError for input problems and ConfigError for
    unusable lexicon or stop-list files.
*/
CorpusAnalysis analyze_corpus(const RunConfig& config);

/// The artifact for `config.format`.
std::string render_artifact(const TagTable& table, const RunConfig& config);

/// Two-column common/uncommon listing followed by totals and timing.
std::string format_report(const RunReport& report);

/** Full pipeline: analyze, render, write the artifact, report to `diag`.

    Writes the artifact to `config.output`, or to `out` when no path is
    set. Nothing is written when analysis fails. Returns an ExitCode value.
*/
int run(const RunConfig& config, std::ostream& out, std::ostream& diag,
        RunReport* report = nullptr);

} // namespace jdcloud
