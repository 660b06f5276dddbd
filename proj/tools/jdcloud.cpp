// jdcloud: build a frequency-weighted tag cloud from Javadoc.

#include "jdcloud/error.hpp"
#include "jdcloud/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

using namespace jdcloud;

template<class E>
std::map<std::string, E> choices(std::initializer_list<std::pair<const std::string, E>> list)
{
    return std::map<std::string, E>(list);
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig config;
    CLI::App app{"Turn Javadoc comments or Javadoc HTML pages into a tag cloud."};
    app.name("jdcloud");

    std::vector<std::string> inputs;
    app.add_option("inputs", inputs, "Files or directories to read")->required();

    app.add_option("--mode", config.mode, "Input kind: auto, java, html or text")
        ->transform(CLI::CheckedTransformer(
            choices<InputMode>({{"auto", InputMode::automatic},
                                {"java", InputMode::java},
                                {"html", InputMode::html},
                                {"text", InputMode::text}}),
            CLI::ignore_case));
    app.add_option("--format", config.format, "Artifact format: svg, html or tsv")
        ->transform(CLI::CheckedTransformer(
            choices<OutputFormat>({{"svg", OutputFormat::svg},
                                   {"html", OutputFormat::html},
                                   {"tsv", OutputFormat::tsv}}),
            CLI::ignore_case));
    std::string output;
    app.add_option("--out,-o", output, "Artifact path (default: standard output)");
    app.add_option("--include", config.include_globs,
                   "File-name glob to read inside directories (repeatable)");

    app.add_option("--min-font", config.style.f_min, "Smallest font size in px")
        ->capture_default_str();
    app.add_option("--max-font", config.style.f_max, "Largest font size in px")
        ->capture_default_str();
    app.add_option("--scale", config.style.scale, "Font scale: linear or log")
        ->transform(CLI::CheckedTransformer(
            choices<FontScale>({{"linear", FontScale::linear}, {"log", FontScale::log}}),
            CLI::ignore_case));
    app.add_option("--seed", config.style.seed, "Seed for tag colors")->capture_default_str();
    app.add_flag("--show-frequency", config.style.show_frequency,
                 "Print each tag's frequency beside it");
    app.add_option("--width", config.style.canvas_width, "Canvas width in px")
        ->capture_default_str();
    app.add_option("--padding", config.style.padding, "Gap between tags in px")
        ->capture_default_str();
    std::vector<std::string> palette;
    app.add_option("--palette", palette, "Tag colors as #rrggbb (repeatable)");

    std::string stopwords, exceptions;
    app.add_option("--stopwords", stopwords, "Drop the words listed in FILE after stemming")
        ->check(CLI::ExistingFile);
    app.add_option("--exceptions", exceptions,
                   "Stemming lexicon (word<TAB>root) replacing the bundled one")
        ->check(CLI::ExistingFile);
    app.add_option("--min-token-len", config.min_token_len, "Drop shorter tokens")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--report-k", config.report_k, "Common and uncommon tags to report")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--jobs,-j", config.jobs, "Worker threads (0: one per core)")
        ->capture_default_str();

    try
    {
        app.parse(argc, argv);
        if(!palette.empty())
        {
            config.style.palette.clear();
            for(auto const& color : palette)
                config.style.palette.push_back(parse_rgb(color));
        }
    }
    catch(const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch(const CLI::CallForVersion& e)
    {
        return app.exit(e);
    }
    catch(const CLI::ParseError& e)
    {
        app.exit(e);
        std::cerr << app.help();
        return exit_usage;
    }
    catch(const ConfigError& e)
    {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return exit_usage;
    }

    config.inputs.assign(inputs.begin(), inputs.end());
    config.output = output;
    if(!stopwords.empty())
        config.stopword_path = stopwords;
    if(!exceptions.empty())
        config.exception_path = exceptions;

    return run(config, std::cout, std::cerr);
}
