#pragma once

#include "jdcloud/tagstats.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace jdcloud {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb&) const = default;
};

/// "#rrggbb"
std::string to_hex(Rgb color);

/// Parses "#rrggbb" or "rrggbb". Throws ConfigError otherwise.
Rgb parse_rgb(std::string_view text);

const std::vector<Rgb>& default_palette();

struct CloudStyle {
    double f_min = 10.0;
    double f_max = 48.0;
    FontScale scale = FontScale::linear;
    std::vector<Rgb> palette = default_palette();
    std::uint64_t seed = 42;
    bool show_frequency = false;
    double canvas_width = 960.0;
    double padding = 8.0;

    /// Throws ConfigError unless f_min <= f_max, canvas_width > f_max,
    /// the palette is nonempty and sizes are positive.
    void validate() const;
};

/// Width estimate for monospace text: 0.6 em per glyph.
inline constexpr double glyph_width_factor = 0.6;

/// Palette colors for `n` tags in table order, drawn from a 64-bit Mersenne
/// Twister seeded with `style.seed`.
std::vector<Rgb> draw_colors(const CloudStyle& style, std::size_t n);

/// Position and size of one tag in the SVG flow layout.
struct PlacedTag {
    std::size_t entry = 0;
    double x = 0;
    double baseline = 0;
    double font_size = 0;
    /// Estimated advance of the tag text (and annotation when shown).
    double width = 0;
    /// Set when a single tag is wider than the canvas and is compressed.
    bool compressed = false;
};

struct CloudLayout {
    std::vector<PlacedTag> tags;
    double width = 0;
    double height = 0;
};

/// Alphabetical left-to-right flow layout with wrapping at canvas_width.
CloudLayout layout_cloud(const TagTable& table, const CloudStyle& style);

std::string render_svg(const TagTable& table, const CloudStyle& style);
std::string render_html(const TagTable& table, const CloudStyle& style);

/// "tag<TAB>frequency" header then one row per entry.
std::string render_text(const TagTable& table);

} // namespace jdcloud
