#include "jdcloud/pipeline.hpp"
#include "jdcloud/error.hpp"
#include "jdcloud/tokenize.hpp"
#include "detail.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace fs = std::filesystem;

namespace jdcloud {

std::vector<std::string> default_globs(InputMode mode)
{
    switch(mode)
    {
    case InputMode::java: return {"*.java"};
    case InputMode::html: return {"*.html", "*.htm"};
    case InputMode::text: return {};
    case InputMode::automatic: break;
    }
    return {"*.java", "*.html", "*.htm", "*.txt"};
}

std::set<std::string, std::less<>> load_stopwords(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if(!in)
        throw ConfigError(fmt::format("{}: cannot read stop-word list", path.generic_string()));
    std::set<std::string, std::less<>> words;
    std::string line;
    while(std::getline(in, line))
    {
        if(auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto const b = line.find_first_not_of(" \t\r");
        if(b == std::string::npos)
            continue;
        auto const e = line.find_last_not_of(" \t\r");
        std::string word = line.substr(b, e - b + 1);
        std::transform(word.begin(), word.end(), word.begin(), detail::ascii_lower);
        words.insert(std::move(word));
    }
    return words;
}

namespace {

std::optional<DocumentKind> kind_for(InputMode mode)
{
    switch(mode)
    {
    case InputMode::java: return DocumentKind::java_source;
    case InputMode::html: return DocumentKind::javadoc_html;
    case InputMode::text: return DocumentKind::plain_text;
    case InputMode::automatic: break;
    }
    return std::nullopt;
}

unsigned worker_count(unsigned requested, std::size_t items)
{
    unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(n, items)));
}

// Calls fn(i) for every i in [0, n) on `workers` threads.
template<class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn)
{
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for(std::size_t i = next++; i < n; i = next++)
            fn(i);
    };
    std::vector<std::jthread> threads;
    for(unsigned w = 1; w < workers; ++w)
        threads.emplace_back(work);
    work();
}

struct DocumentTags {
    bool loaded = false;
    std::vector<std::string> tags;
    Diagnostics diagnostics;
};

} // namespace

CorpusAnalysis analyze_corpus(const RunConfig& config)
{
    if(config.inputs.empty())
        throw ConfigError("no input paths given");
    if(config.min_token_len == 0)
        throw ConfigError("minimum token length must be at least 1");

    CorpusAnalysis result;
    StemRuleSet const rules = StemRuleSet::english(
        config.exception_path ? load_exceptions(*config.exception_path, &result.diagnostics)
                              : bundled_exceptions());
    std::set<std::string, std::less<>> stopwords;
    if(config.stopword_path)
        stopwords = load_stopwords(*config.stopword_path);

    auto const globs = config.include_globs.empty() ? default_globs(config.mode)
                                                    : config.include_globs;
    auto const paths = list_corpus(config.inputs, globs, result.diagnostics);
    auto const kind = kind_for(config.mode);

    std::vector<DocumentTags> per_doc(paths.size());
    unsigned const workers = worker_count(config.jobs, paths.size());
    parallel_for(paths.size(), workers, [&](std::size_t i) {
        auto& slot = per_doc[i];
        auto doc = load_document(paths[i], kind, slot.diagnostics);
        if(!doc)
            return;
        slot.loaded = true;
        std::unordered_map<std::string, std::string> cache;
        for(auto const& token : tokenize(doc->doc_text, config.min_token_len))
        {
            auto it = cache.find(token);
            if(it == cache.end())
                it = cache.emplace(token, stem(token, rules)).first;
            if(!stopwords.contains(it->second))
                slot.tags.push_back(it->second);
        }
    });

    std::vector<std::vector<std::string>> tag_lists;
    tag_lists.reserve(per_doc.size());
    for(auto& slot : per_doc)
    {
        result.diagnostics.merge(std::move(slot.diagnostics));
        if(!slot.loaded)
            continue;
        ++result.documents;
        tag_lists.push_back(std::move(slot.tags));
    }
    if(result.documents == 0)
        throw EmptyCorpusError("no input file could be read");

    result.table = count_parallel(tag_lists, workers);
    return result;
}

std::string render_artifact(const TagTable& table, const RunConfig& config)
{
    switch(config.format)
    {
    case OutputFormat::svg: return render_svg(table, config.style);
    case OutputFormat::html: return render_html(table, config.style);
    case OutputFormat::tsv: break;
    }
    return render_text(table);
}

std::string format_report(const RunReport& report)
{
    std::size_t tag_w = 3;
    for(auto const* list : {&report.top, &report.bottom})
        for(auto const& e : *list)
            tag_w = std::max(tag_w, e.tag.size());
    std::size_t const col = tag_w + 2 + 9;

    std::string out;
    out += fmt::format("{:<{}}    {}\n", "The most common tags", col, "The uncommon tags");
    out += fmt::format("{:<{}}  {:<9}    {:<{}}  {}\n", "Tag", tag_w, "Frequency", "Tag", tag_w,
                       "Frequency");
    std::size_t const rows = std::max(report.top.size(), report.bottom.size());
    for(std::size_t i = 0; i < rows; ++i)
    {
        std::string left(col, ' ');
        if(i < report.top.size())
            left = fmt::format("{:<{}}  {:<9}", report.top[i].tag, tag_w, report.top[i].frequency);
        std::string right;
        if(i < report.bottom.size())
            right = fmt::format("{:<{}}  {}", report.bottom[i].tag, tag_w,
                                report.bottom[i].frequency);
        std::string line = fmt::format("{}    {}", left, right);
        while(!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line;
        out += '\n';
    }
    out += fmt::format("The number of tags = {} tags\n", report.distinct_tags);
    out += fmt::format("documents: {}, tokens: {}, warnings: {}\n", report.documents,
                       report.tokens, report.warnings);
    out += fmt::format("elapsed: {:.1f} ms\n", report.elapsed_ms);
    return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& diag, RunReport* report)
{
    auto const start = std::chrono::steady_clock::now();
    try
    {
        if(config.report_k == 0)
            throw ConfigError("report size must be at least 1");
        config.style.validate();

        auto analysis = analyze_corpus(config);
        std::string const artifact = render_artifact(analysis.table, config);

        if(config.output.empty())
        {
            out << artifact;
            out.flush();
        }
        else
        {
            std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
            if(file)
                file << artifact;
            if(!file || !file.flush())
            {
                diag << fmt::format("error: cannot write {}\n", config.output.generic_string());
                return exit_output;
            }
        }

        RunReport r;
        r.documents = analysis.documents;
        r.tokens = analysis.table.total_tokens;
        r.distinct_tags = analysis.table.size();
        auto ext = extremes(analysis.table, config.report_k);
        r.top = std::move(ext.top);
        r.bottom = std::move(ext.bottom);
        r.warnings = analysis.diagnostics.count();
        r.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();

        for(auto const& w : analysis.diagnostics.warnings())
            diag << "warning: " << w << '\n';
        diag << format_report(r);
        if(report)
            *report = std::move(r);
        return exit_ok;
    }
    catch(const CorpusError& e)
    {
        diag << "error: " << e.what() << '\n';
        return exit_corpus;
    }
    catch(const ConfigError& e)
    {
        diag << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace jdcloud
