#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "carpetlab/carpet.hpp"
#include "carpetlab/weights.hpp"

namespace carpetlab {

/// Chaos-game sample: each point is the image of the start point (1/2, 1/2)
/// under a composition of `depth` digit maps, outermost drawn symbol first.
/// Every point is within m^-depth * sqrt(2) of the attractor.
struct SampleSet {
    std::vector<std::array<double, 2>> points;
    Weights weights;
    int depth = 0;
    std::uint64_t seed = 0;
};

/// Draws `count` independent points with i.i.d. digit words distributed by
/// `weights`. Point i consumes its own counter-based substream of (seed, i),
/// so the result is identical no matter how the work is partitioned.
/// workers = 0 means worker_count() default.
SampleSet sample_points(const CarpetSpec& spec, const Weights& weights,
                        std::size_t count, int depth = 40,
                        std::uint64_t seed = 0, int workers = 0);

}  // namespace carpetlab
