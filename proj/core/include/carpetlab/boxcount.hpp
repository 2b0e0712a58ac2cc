#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "carpetlab/carpet.hpp"
#include "carpetlab/cylinder.hpp"
#include "carpetlab/sampler.hpp"
#include "carpetlab/weights.hpp"

namespace carpetlab {

/// Words enumerated per level before exact counting refuses to run.
inline constexpr std::uint64_t kDefaultWordBudget = 10'000'000;

/// Truncation depth for approximate squares at level l: the largest k >= 0
/// with n^k <= m^l. This is floor(l * log m / log n) computed exactly in
/// integers, so rational exponent ratios (e.g. n = 8, m = 4) cannot be
/// misrounded.
int truncation_level(int n, int m, int level);

/// Names the near-square region
///   [x_index * n^-k, (x_index+1) * n^-k] x [y_index * m^-l, (y_index+1) * m^-l]
/// of height m^-l and width within a factor n of m^-l.
struct ApproxSquareKey {
    int level = 0;       ///< l
    int truncation = 0;  ///< k = truncation_level(n, m, l)
    uint128 x_index = 0; ///< in [0, n^k)
    uint128 y_index = 0; ///< in [0, m^l)

    friend bool operator==(const ApproxSquareKey&, const ApproxSquareKey&) = default;
};

/// Key of a word's cylinder: the level-k ancestor of its x-interval paired
/// with its level-l y-interval. |word| >= 1.
ApproxSquareKey approx_square_key(const CarpetSpec& spec, std::span<const Digit> word);

struct CountEntry {
    int level = 0;
    std::uint64_t count = 0;
    double side = 0.0;  ///< m^-level
};

struct CountProvenance {
    enum Kind { Exact, Sampled } kind = Exact;
    std::uint64_t points = 0;  // sampled only
    int depth = 0;             // sampled only
    std::uint64_t seed = 0;    // sampled only
};

struct CountSeries {
    std::vector<CountEntry> entries;
    CountProvenance provenance;
};

/// Number of distinct approximate-square keys over all |D|^l words, for each
/// l in [l_min, l_max]. Deterministic and independent of worker count.
/// Throws BudgetError naming the level whose word count exceeds the budget.
CountSeries exact_box_counts(const CarpetSpec& spec, int l_min, int l_max,
                             std::uint64_t budget = kDefaultWordBudget,
                             int workers = 0);

/// Occupied cells of the uniform square grid of side m^-l over [0,1]^2 for
/// each l in [l_min, l_max]. Coordinates equal to 1.0 clamp into the last
/// cell. Throws BudgetError when m^l exceeds 64-bit cell indexing.
CountSeries sampled_box_counts(const SampleSet& samples, int l_min, int l_max, int m);

struct SlopeFit {
    double slope = 0.0;      ///< dimension estimate
    double intercept = 0.0;
    double std_error = 0.0;  ///< standard error of the slope
    std::vector<double> residuals;
    int l_min = 0;
    int l_max = 0;
};

/// Ordinary least squares of log(count) against level * log m.
/// Requires at least 3 levels; throws SpecError otherwise.
SlopeFit fit_dimension_slope(const CountSeries& series, int m);

struct EntropyLevel {
    int level = 0;
    int truncation = 0;
    double entropy = 0.0;            ///< H_l of the key partition, nats
    double estimate = 0.0;           ///< H_l / (l * log m)
    std::uint64_t collisions = 0;    ///< pairwise merges of aggregation classes into keys
    std::uint64_t occupied = 0;      ///< distinct keys (equals the exact box count)
    double mass_total = 0.0;         ///< should be 1 up to rounding
};

struct EntropySeries {
    std::vector<EntropyLevel> levels;
};

/// Exact measure mass per approximate-square key: every length-l word
/// contributes the product of its digit weights to its key, which after
/// grouping the words of a common prefix and common suffix rows equals
/// p(prefix) * q(suffix rows) per aggregation class. Classes merged into one
/// key are the reported collisions. H_l is the Shannon entropy of the key
/// masses; results are bit-identical for any worker count.
EntropySeries partition_entropy_series(const CarpetSpec& spec, const Weights& w,
                                       int l_min, int l_max,
                                       std::uint64_t budget = kDefaultWordBudget,
                                       int workers = 0);

}  // namespace carpetlab
