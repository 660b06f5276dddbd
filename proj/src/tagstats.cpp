#include "jdcloud/tagstats.hpp"
#include "jdcloud/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace jdcloud {

std::uint64_t TagTable::min_weight() const noexcept
{
    if(entries.empty())
        return 0;
    return std::min_element(entries.begin(), entries.end(),
                            [](auto const& a, auto const& b) { return a.weight < b.weight; })
        ->weight;
}

std::uint64_t TagTable::max_weight() const noexcept
{
    if(entries.empty())
        return 0;
    return std::max_element(entries.begin(), entries.end(),
                            [](auto const& a, auto const& b) { return a.weight < b.weight; })
        ->weight;
}

void accumulate(TagCounts& counts, std::span<const std::string> tags)
{
    for(auto const& tag : tags)
        ++counts[tag];
}

void merge(TagCounts& into, const TagCounts& from)
{
    for(auto const& [tag, n] : from)
        into[tag] += n;
}

TagTable to_table(const TagCounts& counts)
{
    TagTable table;
    table.entries.reserve(counts.size());
    for(auto const& [tag, n] : counts)
    {
        table.entries.push_back({tag, n, n});
        table.total_tokens += n;
    }
    return table;
}

TagTable count(std::span<const std::string> tags)
{
    TagCounts counts;
    accumulate(counts, tags);
    return to_table(counts);
}

TagTable count_parallel(std::span<const std::vector<std::string>> documents, unsigned workers)
{
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(documents.size())));
    std::vector<TagCounts> partial(workers);
    std::atomic<std::size_t> next{0};
    auto work = [&](TagCounts& counts) {
        for(std::size_t i = next++; i < documents.size(); i = next++)
            accumulate(counts, documents[i]);
    };
    {
        std::vector<std::jthread> threads;
        for(unsigned w = 1; w < workers; ++w)
            threads.emplace_back(work, std::ref(partial[w]));
        work(partial[0]);
    }
    for(unsigned w = 1; w < workers; ++w)
        merge(partial[0], partial[w]);
    return to_table(partial[0]);
}

double font_size(std::uint64_t weight, std::uint64_t min_w, std::uint64_t max_w,
                 double f_min, double f_max, FontScale scale)
{
    if(min_w > max_w || weight < min_w || weight > max_w)
        throw ContractError(fmt::format("weight {} outside [{}, {}]", weight, min_w, max_w));
    if(f_min > f_max)
        throw ContractError(fmt::format("font bounds inverted: {} > {}", f_min, f_max));
    if(scale == FontScale::log && min_w == 0)
        throw ContractError("log scale needs weights of at least 1");

    double size = 0;
    if(min_w == max_w)
        size = (f_min + f_max) / 2;
    else
    {
        auto map = [scale](std::uint64_t w) {
            return scale == FontScale::log ? std::log(static_cast<double>(w))
                                           : static_cast<double>(w);
        };
        double const t = (map(weight) - map(min_w)) / (map(max_w) - map(min_w));
        size = f_min + t * (f_max - f_min);
    }
    return std::round(size * 10.0) / 10.0;
}

Extremes extremes(const TagTable& table, std::size_t k)
{
    if(k == 0)
        throw ContractError("k must be at least 1");
    std::size_t const n = std::min(k, table.entries.size());

    Extremes out;
    out.top = table.entries;
    std::stable_sort(out.top.begin(), out.top.end(),
                     [](auto const& a, auto const& b) { return a.frequency > b.frequency; });
    out.top.resize(n);

    out.bottom = table.entries;
    std::stable_sort(out.bottom.begin(), out.bottom.end(),
                     [](auto const& a, auto const& b) { return a.frequency < b.frequency; });
    out.bottom.resize(n);
    return out;
}

} // namespace jdcloud
