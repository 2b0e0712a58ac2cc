#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "carpetlab/boxcount.hpp"
#include "carpetlab/carpet.hpp"

namespace carpetlab {

struct InvarianceTrial {
    std::vector<std::pair<int, int>> signs;    ///< (sx, sy) per digit
    double hausdorff = 0.0;
    double slope = 0.0;                        ///< exact-count fit over [l_min, l_max]
    std::vector<std::uint64_t> exact_counts;   ///< N_l for l = 1..l_max
};

struct InvarianceReport {
    CarpetSpec base;
    int trials = 0;
    std::uint64_t seed = 0;
    int l_min = 4;
    int l_max = 8;
    std::vector<InvarianceTrial> results;
    double max_slope_deviation = 0.0;
    bool dimensions_identical = false;  ///< all Hausdorff values bit-identical
    bool counts_identical = false;      ///< collision fingerprint: every N_l equal across trials
};

/// Draws `trials` uniform random signature assignments over the spec's fixed
/// cells (seeded, deterministic) and compares dimensions, exact counts and
/// count slopes across them. trials >= 2.
InvarianceReport invariance_report(const CarpetSpec& spec, int trials,
                                   std::uint64_t seed, int l_min = 4, int l_max = 8,
                                   std::uint64_t budget = kDefaultWordBudget,
                                   int workers = 0);

/// JSON document with the base spec, per-trial rows and the summary flags.
std::string invariance_to_json(const InvarianceReport& report);

}  // namespace carpetlab
