#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "carpetlab/carpet.hpp"

namespace carpetlab {

using uint128 = unsigned __int128;

std::string to_string(uint128 v);

/// base^exp, assuming it fits in 128 bits (see level_capacity).
uint128 ipow128(std::int64_t base, int exp);

/// Largest L such that base^L is representable in 128 bits. Cells at level L
/// are the deepest the exact integer representation can index.
int level_capacity(std::int64_t base);

/// Exact interval [index * base^-level, (index+1) * base^-level] on one axis,
/// together with the sign of the composed affine slope on that axis. All
/// subdivision bookkeeping is integer-only; the floating accessors are views.
struct AxisCell {
    std::int64_t base = 2;
    int level = 0;
    uint128 index = 0;
    int orientation = +1;

    double extent() const;  ///< base^-level
    double lower() const;   ///< index * base^-level
    double upper() const;

    friend bool operator==(const AxisCell&, const AxisCell&) = default;
};

/// Child cell after applying a digit with cell index `cell` and sign `sign`
/// on this axis:
///
///   index' = index * base + (orientation == +1 ? cell : base - 1 - cell)
///   orientation' = orientation * sign
///
/// Throws BudgetError when base^(level+1) no longer fits in 128 bits.
AxisCell extend_axis(const AxisCell& parent, int cell, int sign);

/// Image of the unit square under the composition of the word's digit maps,
/// outermost symbol first: width exactly n^-k, height exactly m^-k at k = |word|.
struct CylinderRect {
    AxisCell x;  ///< base n
    AxisCell y;  ///< base m
    std::vector<Digit> word;
};

CylinderRect unit_square(const CarpetSpec& spec);

/// Child cylinder; appends `d` to the word. `d` must be one of spec's digits.
CylinderRect extend_cylinder(const CylinderRect& parent, const Digit& d);

/// Left fold of extend_cylinder over the word, starting from the unit square.
CylinderRect cylinder_of_word(const CarpetSpec& spec, std::span<const Digit> word);

}  // namespace carpetlab
