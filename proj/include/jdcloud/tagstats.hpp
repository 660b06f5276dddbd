#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace jdcloud {

struct TagEntry {
    std::string tag;
    std::uint64_t frequency = 0;
    /// Identical to `frequency`: a tag weighs as much as it occurs.
    std::uint64_t weight = 0;

    bool operator==(const TagEntry&) const = default;
};

/// Entries strictly ascending by tag; frequencies sum to `total_tokens`.
struct TagTable {
    std::vector<TagEntry> entries;
    std::uint64_t total_tokens = 0;

    bool empty() const noexcept { return entries.empty(); }
    std::size_t size() const noexcept { return entries.size(); }
    std::uint64_t min_weight() const noexcept;
    std::uint64_t max_weight() const noexcept;

    bool operator==(const TagTable&) const = default;
};

/// Byte-wise ordered tag counts. Merging is commutative and associative.
using TagCounts = std::map<std::string, std::uint64_t>;

void accumulate(TagCounts& counts, std::span<const std::string> tags);
void merge(TagCounts& into, const TagCounts& from);
TagTable to_table(const TagCounts& counts);

/// One entry per distinct tag, sorted alphabetically.
TagTable count(std::span<const std::string> tags);

/// Counts per-document tag lists on up to `workers` threads and merges the
/// partial maps. The result equals count() over the concatenated lists.
TagTable count_parallel(std::span<const std::vector<std::string>> documents,
                        unsigned workers);

enum class FontScale { linear, log };

/** Maps a weight onto [f_min, f_max] px, rounded to one decimal.

    Linear interpolates the weight itself; log interpolates ln(weight).
    When min_w == max_w the midpoint is returned. A weight outside
    [min_w, max_w], f_min > f_max, or a non-positive min_w in log mode
    throws ContractError.
*/
double font_size(std::uint64_t weight, std::uint64_t min_w, std::uint64_t max_w,
                 double f_min, double f_max, FontScale scale);

struct Extremes {
    std::vector<TagEntry> top;
    std::vector<TagEntry> bottom;
};

/// The k most and k least frequent entries, ties broken alphabetically.
/// Throws ContractError when k is 0.
Extremes extremes(const TagTable& table, std::size_t k);

} // namespace jdcloud
