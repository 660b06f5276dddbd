#include "jdcloud/render.hpp"
#include "jdcloud/error.hpp"
#include "jdcloud/utf8.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

namespace jdcloud {

std::string to_hex(Rgb c)
{
    return fmt::format("#{:02x}{:02x}{:02x}", c.r, c.g, c.b);
}

Rgb parse_rgb(std::string_view text)
{
    if(text.starts_with('#'))
        text.remove_prefix(1);
    if(text.size() != 6 || !std::all_of(text.begin(), text.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
       }))
        throw ConfigError(fmt::format("'{}' is not an #rrggbb color", text));
    auto const v = std::strtoul(std::string(text).c_str(), nullptr, 16);
    return {static_cast<std::uint8_t>(v >> 16), static_cast<std::uint8_t>(v >> 8),
            static_cast<std::uint8_t>(v)};
}

const std::vector<Rgb>& default_palette()
{
    static const std::vector<Rgb> palette = {
        {0x1f, 0x77, 0xb4}, {0xff, 0x7f, 0x0e}, {0x2c, 0xa0, 0x2c}, {0xd6, 0x27, 0x28},
        {0x94, 0x67, 0xbd}, {0x8c, 0x56, 0x4b}, {0xe3, 0x77, 0xc2}, {0x17, 0xbe, 0xcf},
    };
    return palette;
}

void CloudStyle::validate() const
{
    if(!(f_min > 0) || !(f_max > 0))
        throw ConfigError("font sizes must be positive");
    if(f_min > f_max)
        throw ConfigError(fmt::format("minimum font size {} exceeds maximum {}", f_min, f_max));
    if(!(canvas_width > f_max))
        throw ConfigError(fmt::format("canvas width {} must exceed the maximum font size {}",
                                      canvas_width, f_max));
    if(padding < 0)
        throw ConfigError("padding must not be negative");
    if(!(canvas_width > 2 * padding))
        throw ConfigError("canvas width must exceed twice the padding");
    if(palette.empty())
        throw ConfigError("palette is empty");
}

std::vector<Rgb> draw_colors(const CloudStyle& style, std::size_t n)
{
    std::mt19937_64 rng(style.seed);
    std::vector<Rgb> colors;
    colors.reserve(n);
    for(std::size_t i = 0; i < n; ++i)
        colors.push_back(style.palette[rng() % style.palette.size()]);
    return colors;
}

//------------------------------------------------
//
// Layout
//
//------------------------------------------------

namespace {

// Layout works in whole tenths of a pixel so emitted coordinates are exact.
using Tenths = std::int64_t;

Tenths to_tenths(double px)
{
    return static_cast<Tenths>(std::llround(px * 10.0));
}

Tenths ceil_tenths(double px)
{
    return static_cast<Tenths>(std::ceil(px * 10.0 - 1e-6));
}

std::string px(Tenths t)
{
    return fmt::format("{}.{}", t / 10, t % 10);
}

std::string px(double value)
{
    return px(to_tenths(value));
}

std::string annotation(const TagEntry& e)
{
    return fmt::format("({})", e.frequency);
}

double annotation_size(double tag_size)
{
    return std::round(tag_size / 2.0 * 10.0) / 10.0;
}

std::vector<double> font_sizes(const TagTable& table, const CloudStyle& style)
{
    std::vector<double> sizes;
    sizes.reserve(table.size());
    auto const lo = table.min_weight();
    auto const hi = table.max_weight();
    for(auto const& e : table.entries)
        sizes.push_back(font_size(e.weight, lo, hi, style.f_min, style.f_max, style.scale));
    return sizes;
}

std::string escape_xml(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    for(char c : s)
    {
        switch(c)
        {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

} // namespace

CloudLayout layout_cloud(const TagTable& table, const CloudStyle& style)
{
    style.validate();
    CloudLayout layout;
    layout.width = style.canvas_width;

    Tenths const pad = to_tenths(style.padding);
    Tenths const right = to_tenths(style.canvas_width) - pad;
    Tenths const available = right - pad;
    auto const sizes = font_sizes(table, style);

    struct Item {
        std::size_t entry;
        Tenths x;
        Tenths width;
        bool compressed;
    };
    std::vector<Item> line;
    Tenths line_top = pad;
    Tenths line_font = 0;
    Tenths x = pad;

    auto flush = [&] {
        if(line.empty())
            return;
        for(auto const& item : line)
        {
            layout.tags.push_back({item.entry, static_cast<double>(item.x) / 10.0,
                                   static_cast<double>(line_top + line_font) / 10.0,
                                   sizes[item.entry], static_cast<double>(item.width) / 10.0,
                                   item.compressed});
        }
        line_top += line_font + pad;
        line.clear();
        line_font = 0;
        x = pad;
    };

    for(std::size_t i = 0; i < table.size(); ++i)
    {
        auto const& entry = table.entries[i];
        double const size = sizes[i];
        double raw = glyph_width_factor * size *
                     static_cast<double>(utf8::count_code_points(entry.tag));
        if(style.show_frequency)
            raw += glyph_width_factor * annotation_size(size) *
                   static_cast<double>(annotation(entry).size() + 1);
        Tenths width = ceil_tenths(raw);

        if(!line.empty() && x + width > right)
            flush();
        bool const compressed = width > available;
        if(compressed)
            width = available;
        line.push_back({i, x, width, compressed});
        line_font = std::max(line_font, to_tenths(size));
        x += width + pad;
    }
    flush();

    if(table.empty())
        line_top += to_tenths(style.f_max) + pad;
    layout.height = static_cast<double>(line_top) / 10.0;
    return layout;
}

//------------------------------------------------
//
// Output formats
//
//------------------------------------------------

std::string render_svg(const TagTable& table, const CloudStyle& style)
{
    auto const layout = layout_cloud(table, style);
    auto const colors = draw_colors(style, table.size());

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" "
        "height=\"{1}\" viewBox=\"0 0 {0} {1}\" font-family=\"monospace\">\n",
        px(layout.width), px(layout.height));
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    out += "<g class=\"cloud\">\n";

    if(table.empty())
    {
        out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"{}\" fill=\"#000000\">no tags</text>\n",
                           px(style.padding), px(style.padding + style.f_max),
                           px(style.f_max));
    }
    for(auto const& placed : layout.tags)
    {
        auto const& entry = table.entries[placed.entry];
        out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"{}\" fill=\"{}\"",
                           px(placed.x), px(placed.baseline), px(placed.font_size),
                           to_hex(colors[placed.entry]));
        if(placed.compressed)
            out += fmt::format(" textLength=\"{}\" lengthAdjust=\"spacingAndGlyphs\"",
                               px(placed.width));
        out += '>';
        out += escape_xml(entry.tag);
        if(style.show_frequency)
            out += fmt::format("<tspan font-size=\"{}\"> {}</tspan>",
                               px(annotation_size(placed.font_size)), annotation(entry));
        out += "</text>\n";
    }

    out += "</g>\n</svg>\n";
    return out;
}

std::string render_html(const TagTable& table, const CloudStyle& style)
{
    style.validate();
    auto const colors = draw_colors(style, table.size());
    auto const sizes = font_sizes(table, style);

    std::string out;
    out += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
    out += "<title>Tag cloud</title>\n<style>\n";
    out += fmt::format(".cloud {{ max-width: {}px; padding: {}px; font-family: monospace; "
                       "line-height: 1.2; }}\n",
                       px(style.canvas_width), px(style.padding));
    out += fmt::format(".cloud .tag {{ margin-right: {}px; }}\n", px(style.padding));
    out += "</style>\n</head>\n<body>\n<div class=\"cloud\">\n";

    if(table.empty())
        out += "<p class=\"empty\">no tags</p>\n";
    for(std::size_t i = 0; i < table.size(); ++i)
    {
        auto const& entry = table.entries[i];
        out += fmt::format("<span class=\"tag\" style=\"font-size: {}px; color: {}\">{}",
                           px(sizes[i]), to_hex(colors[i]), escape_xml(entry.tag));
        if(style.show_frequency)
            out += fmt::format("<span class=\"freq\" style=\"font-size: {}px\"> {}</span>",
                               px(annotation_size(sizes[i])), annotation(entry));
        out += "</span>\n";
    }

    out += "</div>\n</body>\n</html>\n";
    return out;
}

std::string render_text(const TagTable& table)
{
    std::string out = "tag\tfrequency\n";
    for(auto const& e : table.entries)
        out += fmt::format("{}\t{}\n", e.tag, e.frequency);
    return out;
}

} // namespace jdcloud
