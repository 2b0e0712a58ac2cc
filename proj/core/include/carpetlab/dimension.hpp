#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "carpetlab/carpet.hpp"
#include "carpetlab/weights.hpp"

namespace carpetlab {

/// Row statistics of a carpet plus the derived exponents. Signatures do not
/// enter anywhere here: two carpets on the same cells always produce
/// bit-identical profiles.
struct RowProfile {
    std::vector<std::int64_t> row_counts;  ///< t_j, length m
    int nonempty_rows = 0;                 ///< r = #{j : t_j > 0}
    std::int64_t digit_count = 0;          ///< |D|
    double beta = 0.0;                     ///< log m / log n, in (0, 1)
    double lambda1 = 0.0;                  ///< -log m (weak, vertical contraction)
    double lambda2 = 0.0;                  ///< -log n (strong, horizontal contraction)
    std::vector<int> digit_rows;           ///< row of each digit, canonical order
};

RowProfile row_profile(const CarpetSpec& spec);

/// -sum v_i log v_i in nats, with 0 log 0 = 0. Entries must be non-negative
/// and sum to 1 within kWeightTolerance; throws SpecError otherwise.
double shannon_entropy(std::span<const double> v);

/// Closed-form Hausdorff dimension: log(sum over non-empty rows of
/// t_j^beta) / log m.
double hausdorff_dimension(const RowProfile& profile);

/// Dimension of the Bernoulli measure with the given weights:
///   H(q)/log m + (H(p) - H(q))/log n.
double ly_dimension(const RowProfile& profile, const Weights& w);

/// The maximizing weights: q_j = t_j^beta / S with S = sum_k t_k^beta over
/// non-empty rows, split uniformly across each row's digits.
Weights optimal_weights(const RowProfile& profile);

struct DimensionReport {
    double hausdorff = 0.0;
    double row_weight_sum = 0.0;  ///< S = sum_j t_j^beta
    Weights optimal;              ///< maximizing p and q
    double entropy_p = 0.0;       ///< H(p) at the optimum, nats
    double entropy_q = 0.0;       ///< H(q) at the optimum, nats
};

DimensionReport dimension_report(const RowProfile& profile);

}  // namespace carpetlab
