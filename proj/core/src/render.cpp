#include "carpetlab/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string>

#include "carpetlab/errors.hpp"
#include "word_enum.hpp"

namespace carpetlab {

namespace {

// Pixel px is painted when its center (px+0.5)/size lies in
// [index/base^level, (index+1)/base^level]; solved in integers so shared
// cylinder boundaries never flicker with rounding.
struct PixelRange {
    int lo = 0;
    int hi = -1;  // inclusive; empty when hi < lo
};

PixelRange pixel_range(uint128 index, uint128 cells, int size) {
    // center in [index/cells, (index+1)/cells]
    //   <=>  index * 2 * size <= (2*px + 1) * cells <= (index+1) * 2 * size
    const uint128 two_size = static_cast<uint128>(2) * static_cast<uint128>(size);
    const uint128 lo_num = index * two_size;
    const uint128 hi_num = (index + 1) * two_size;
    PixelRange range;
    if (hi_num < cells) return range;  // entirely left of the first center
    // smallest px with (2*px+1)*cells >= lo_num
    const uint128 lo = lo_num <= cells ? 0 : (lo_num - cells + 2 * cells - 1) / (2 * cells);
    // largest px with (2*px+1)*cells <= hi_num
    const uint128 hi = (hi_num - cells) / (2 * cells);
    range.lo = static_cast<int>(lo);
    range.hi = std::min(static_cast<int>(hi), size - 1);
    return range;
}

void fill_rect(RasterImage& image, const PixelRange& xr, const PixelRange& yr_bottom) {
    for (int qy = yr_bottom.lo; qy <= yr_bottom.hi; ++qy) {
        const int py = image.height - 1 - qy;  // row 0 is the top edge
        for (int px = xr.lo; px <= xr.hi; ++px) image.at(px, py) = 0;
    }
}

// F stencil on a 3x5 block grid, y-up: spine, long top arm, short middle arm.
// Chiral and vertically asymmetric, so each of the four signature classes
// produces a distinct pixel pattern.
constexpr std::pair<int, int> kGlyphBlocks[] = {
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4},  // spine
    {1, 4}, {2, 4},                          // top arm
    {1, 2},                                  // middle arm
};
constexpr double kGlyphInsetX = 0.15, kGlyphSpanX = 0.70;
constexpr double kGlyphInsetY = 0.10, kGlyphSpanY = 0.80;

void paint_glyph(RasterImage& image, const CarpetSpec& spec, const Digit& d) {
    const auto [mx, my] = axis_maps(d, spec);
    const int size = image.width;
    for (const auto& [col, row] : kGlyphBlocks) {
        const double u0 = kGlyphInsetX + col * (kGlyphSpanX / 3.0);
        const double u1 = u0 + kGlyphSpanX / 3.0;
        const double v0 = kGlyphInsetY + row * (kGlyphSpanY / 5.0);
        const double v1 = v0 + kGlyphSpanY / 5.0;
        const double x0 = std::min(mx(u0), mx(u1));
        const double x1 = std::max(mx(u0), mx(u1));
        const double y0 = std::min(my(v0), my(v1));
        const double y1 = std::max(my(v0), my(v1));
        const int px_lo = std::max(0, static_cast<int>(std::ceil(x0 * size - 0.5)));
        const int px_hi = std::min(size - 1, static_cast<int>(std::floor(x1 * size - 0.5)));
        const int qy_lo = std::max(0, static_cast<int>(std::ceil(y0 * size - 0.5)));
        const int qy_hi = std::min(size - 1, static_cast<int>(std::floor(y1 * size - 0.5)));
        fill_rect(image, PixelRange{px_lo, px_hi}, PixelRange{qy_lo, qy_hi});
    }
}

}  // namespace

RasterImage render_raster(const CarpetSpec& spec, int level, int size, bool glyph,
                          std::uint64_t budget) {
    if (size < 16) throw SpecError("render size " + std::to_string(size) + " < 16");
    if (level < 0) throw SpecError("render level must be non-negative");
    if (glyph && level != 1)
        throw SpecError("glyph rendering is defined for level 1 only");
    {
        const std::uint64_t words = detail::word_count(spec.digits.size(), level);
        if (words > budget)
            throw BudgetError("render at level " + std::to_string(level) + " needs " +
                              std::to_string(words) + " cylinders, budget " +
                              std::to_string(budget));
    }

    RasterImage image;
    image.width = size;
    image.height = size;
    image.pixels.assign(static_cast<std::size_t>(size) * size, 255);
    image.provenance = "n=" + std::to_string(spec.n) + " m=" + std::to_string(spec.m) +
                       " digits=" + std::to_string(spec.digits.size()) +
                       " level=" + std::to_string(level) +
                       " size=" + std::to_string(size) + (glyph ? " glyph" : "");

    if (glyph) {
        for (const Digit& d : spec.digits) paint_glyph(image, spec, d);
        return image;
    }

    const uint128 x_cells = ipow128(spec.n, level);
    const uint128 y_cells = ipow128(spec.m, level);
    // 2 * size * base^level must stay in range for the exact pixel predicate.
    if (x_cells > (~static_cast<uint128>(0)) / (2 * static_cast<uint128>(size) + 2) ||
        y_cells > (~static_cast<uint128>(0)) / (2 * static_cast<uint128>(size) + 2))
        throw BudgetError("render level too deep for exact pixel arithmetic");

    std::vector<int> idx(static_cast<std::size_t>(level), 0);
    std::vector<detail::AxisState> xs(static_cast<std::size_t>(level) + 1);
    std::vector<detail::AxisState> ys(static_cast<std::size_t>(level) + 1);
    detail::enumerate_from(spec, level, 0, idx, xs, ys, nullptr, nullptr,
                           [&](const detail::WordView& view) {
                               fill_rect(image,
                                         pixel_range(view.x[level].index, x_cells, size),
                                         pixel_range(view.y[level].index, y_cells, size));
                           });
    return image;
}

void write_pgm(const RasterImage& image, std::ostream& out) {
    out << "P5\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels.data()),
              static_cast<std::streamsize>(image.pixels.size()));
}

void write_pgm(const RasterImage& image, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SpecError("cannot open " + path + " for writing");
    write_pgm(image, out);
    if (!out) throw SpecError("failed writing " + path);
}

}  // namespace carpetlab
