#pragma once

#include <vector>

#include "carpetlab/carpet.hpp"

namespace carpetlab {

/// Normalization slack accepted for probability vectors; covers the rounding
/// of weights loaded from text files.
inline constexpr double kWeightTolerance = 1e-12;

/// A Bernoulli weight vector over the digits (canonical order) together with
/// its row marginals q_j = sum of p over the digits in row j.
struct Weights {
    std::vector<double> p;  ///< one strictly positive entry per digit
    std::vector<double> q;  ///< length m; zero exactly on empty rows
};

/// Validates p (size, strict positivity, sum within kWeightTolerance of 1)
/// and derives q. Throws SpecError otherwise.
Weights make_weights(const CarpetSpec& spec, std::vector<double> p);

Weights uniform_weights(const CarpetSpec& spec);

}  // namespace carpetlab
