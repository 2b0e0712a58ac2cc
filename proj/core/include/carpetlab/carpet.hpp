#pragma once

#include <utility>
#include <vector>

#include "carpetlab/errors.hpp"

namespace carpetlab {

/// One map of the iterated function system: a grid cell (column, row) plus a
/// reflection signature (sx, sy), each in {-1, +1}. The induced affine map is
///
///   x -> (sx * x + offset_x) / n,   y -> (sy * y + offset_y) / m
///
/// with offsets fixed so that the image of the unit square is exactly the cell
/// [column/n, (column+1)/n] x [row/m, (row+1)/m].
struct Digit {
    int column = 0;
    int row = 0;
    int sx = +1;
    int sy = +1;

    int offset_x() const { return sx == +1 ? column : column + 1; }
    int offset_y() const { return sy == +1 ? row : row + 1; }

    friend bool operator==(const Digit&, const Digit&) = default;
};

/// A validated carpet description: an n x m grid and a list of digits with
/// pairwise-distinct cells. Digit order is canonical: weight vectors and all
/// reports index digits in this order.
struct CarpetSpec {
    int n = 0;  ///< horizontal subdivisions (columns); contraction 1/n
    int m = 0;  ///< vertical subdivisions (rows); contraction 1/m
    std::vector<Digit> digits;

    friend bool operator==(const CarpetSpec&, const CarpetSpec&) = default;
};

/// Checks 1 < m < n, at least two digits, indices in range, signs in {-1,+1}
/// and cell distinctness. Throws SpecError naming the offending digit index
/// and field. Digit order is preserved.
CarpetSpec validate_spec(int n, int m, std::vector<Digit> digits);

/// One axis of a digit map: t -> scale * t + offset.
struct AxisMap {
    double scale = 1.0;
    double offset = 0.0;
    double operator()(double t) const { return scale * t + offset; }
};

/// The two affine axis maps of a digit; slope magnitudes are exactly 1/n and
/// 1/m. `d` must be one of `spec.digits`.
std::pair<AxisMap, AxisMap> axis_maps(const Digit& d, const CarpetSpec& spec);

}  // namespace carpetlab
