#include "carpetlab/cylinder.hpp"

#include <algorithm>
#include <limits>

#include "carpetlab/errors.hpp"

namespace carpetlab {

namespace {

constexpr uint128 kMax128 = ~static_cast<uint128>(0);

}  // namespace

std::string to_string(uint128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

uint128 ipow128(std::int64_t base, int exp) {
    uint128 out = 1;
    for (int i = 0; i < exp; ++i) out *= static_cast<uint128>(base);
    return out;
}

int level_capacity(std::int64_t base) {
    const auto b = static_cast<uint128>(base);
    uint128 value = 1;
    int level = 0;
    while (value <= kMax128 / b) {
        value *= b;
        ++level;
    }
    return level;
}

double AxisCell::extent() const {
    return 1.0 / static_cast<double>(ipow128(base, level));
}

double AxisCell::lower() const {
    return static_cast<double>(index) / static_cast<double>(ipow128(base, level));
}

double AxisCell::upper() const {
    return static_cast<double>(index + 1) / static_cast<double>(ipow128(base, level));
}

AxisCell extend_axis(const AxisCell& parent, int cell, int sign) {
    if (parent.level + 1 > level_capacity(parent.base))
        throw BudgetError("depth overflow: level " + std::to_string(parent.level + 1) +
                          " exceeds the exact-integer capacity of base " +
                          std::to_string(parent.base));
    AxisCell child;
    child.base = parent.base;
    child.level = parent.level + 1;
    const int effective = parent.orientation == +1
                              ? cell
                              : static_cast<int>(parent.base) - 1 - cell;
    child.index = parent.index * static_cast<uint128>(parent.base) +
                  static_cast<uint128>(effective);
    child.orientation = parent.orientation * sign;
    return child;
}

CylinderRect unit_square(const CarpetSpec& spec) {
    CylinderRect rect;
    rect.x = AxisCell{spec.n, 0, 0, +1};
    rect.y = AxisCell{spec.m, 0, 0, +1};
    return rect;
}

CylinderRect extend_cylinder(const CylinderRect& parent, const Digit& d) {
    CylinderRect child;
    child.x = extend_axis(parent.x, d.column, d.sx);
    child.y = extend_axis(parent.y, d.row, d.sy);
    child.word = parent.word;
    child.word.push_back(d);
    return child;
}

CylinderRect cylinder_of_word(const CarpetSpec& spec, std::span<const Digit> word) {
    CylinderRect rect = unit_square(spec);
    rect.word.reserve(word.size());
    for (const Digit& d : word) {
        rect.x = extend_axis(rect.x, d.column, d.sx);
        rect.y = extend_axis(rect.y, d.row, d.sy);
        rect.word.push_back(d);
    }
    return rect;
}

}  // namespace carpetlab
