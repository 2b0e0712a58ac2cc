#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "carpetlab/boxcount.hpp"
#include "carpetlab/carpet.hpp"

namespace carpetlab {

/// 8-bit grayscale raster, row 0 at the top edge (y near 1). Background 255,
/// foreground 0.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;
    std::string provenance;

    std::uint8_t& at(int px, int py) { return pixels[static_cast<std::size_t>(py) * width + px]; }
    std::uint8_t at(int px, int py) const { return pixels[static_cast<std::size_t>(py) * width + px]; }
};

/// Paints every pixel whose center lies in some level-`level` cylinder; the
/// pixel ranges per cylinder are resolved with exact integer arithmetic, so
/// boundary pixels never depend on rounding. With `glyph` (level 1 only) an
/// asymmetric F-shaped stencil is drawn inside each digit cell through that
/// digit's axis maps, which makes all four signature classes visually
/// distinct. size >= 16.
RasterImage render_raster(const CarpetSpec& spec, int level, int size,
                          bool glyph = false,
                          std::uint64_t budget = kDefaultWordBudget);

/// Binary PGM (P5), maxval 255.
void write_pgm(const RasterImage& image, std::ostream& out);
void write_pgm(const RasterImage& image, const std::string& path);

}  // namespace carpetlab
