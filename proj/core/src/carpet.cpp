#include "carpetlab/carpet.hpp"

#include <set>
#include <string>
#include <utility>

namespace carpetlab {

namespace {

[[noreturn]] void reject(const std::string& message) { throw SpecError(message); }

std::string digit_prefix(std::size_t index) {
    return "digit " + std::to_string(index) + ": ";
}

}  // namespace

CarpetSpec validate_spec(int n, int m, std::vector<Digit> digits) {
    if (m <= 1) reject("m = " + std::to_string(m) + " violates 1 < m < n");
    if (m >= n) reject("m = " + std::to_string(m) + ", n = " + std::to_string(n) +
                       " violates 1 < m < n");
    if (digits.size() < 2)
        reject("digit set has " + std::to_string(digits.size()) +
               " entries; at least 2 are required");

    std::set<std::pair<int, int>> seen;
    for (std::size_t idx = 0; idx < digits.size(); ++idx) {
        const Digit& d = digits[idx];
        if (d.column < 0 || d.column >= n)
            reject(digit_prefix(idx) + "column " + std::to_string(d.column) +
                   " out of range [0, " + std::to_string(n) + ")");
        if (d.row < 0 || d.row >= m)
            reject(digit_prefix(idx) + "row " + std::to_string(d.row) +
                   " out of range [0, " + std::to_string(m) + ")");
        if (d.sx != +1 && d.sx != -1)
            reject(digit_prefix(idx) + "sx = " + std::to_string(d.sx) +
                   " is not in {-1, +1}");
        if (d.sy != +1 && d.sy != -1)
            reject(digit_prefix(idx) + "sy = " + std::to_string(d.sy) +
                   " is not in {-1, +1}");
        if (!seen.insert({d.column, d.row}).second)
            reject(digit_prefix(idx) + "cell (" + std::to_string(d.column) + ", " +
                   std::to_string(d.row) + ") appears more than once");
    }

    CarpetSpec spec;
    spec.n = n;
    spec.m = m;
    spec.digits = std::move(digits);
    return spec;
}

std::pair<AxisMap, AxisMap> axis_maps(const Digit& d, const CarpetSpec& spec) {
    AxisMap x{static_cast<double>(d.sx) / spec.n,
              static_cast<double>(d.offset_x()) / spec.n};
    AxisMap y{static_cast<double>(d.sy) / spec.m,
              static_cast<double>(d.offset_y()) / spec.m};
    return {x, y};
}

}  // namespace carpetlab
