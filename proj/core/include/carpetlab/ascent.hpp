#pragma once

#include <vector>

#include "carpetlab/dimension.hpp"
#include "carpetlab/weights.hpp"

namespace carpetlab {

struct AscentConfig {
    int max_iterations = 10'000;
    double step = 0.5;         ///< initial eta per iteration
    double tolerance = 1e-14;  ///< stop when the objective change drops below
    double backtrack = 0.5;    ///< step shrink factor while the objective would decrease
};

struct AscentTrace {
    std::vector<double> objective;  ///< objective[0] = initial value, then one per iteration
    Weights weights;                ///< final iterate
    int iterations = 0;
    bool converged = false;
};

/// Euclidean gradient of the measure-dimension objective in p, before any
/// simplex projection. Component for a digit in row j:
///   -(log q_j + 1) (1/log m - 1/log n) - (log p_d + 1)/log n
/// Throws SpecError on zero weight components (log singularity).
std::vector<double> objective_gradient(const RowProfile& profile, const Weights& w);

/// Exponentiated-gradient ascent on the probability simplex:
/// p <- normalize(p * exp(eta * g)), halving eta within an iteration while the
/// objective would decrease. Iterates stay strictly positive and normalized.
/// Non-convergence within max_iterations is reported, not thrown.
AscentTrace maximize_dimension(const RowProfile& profile, const Weights& init,
                               const AscentConfig& cfg = {});

}  // namespace carpetlab
