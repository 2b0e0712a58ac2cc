#include "carpetlab/weights.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "carpetlab/errors.hpp"

namespace carpetlab {

Weights make_weights(const CarpetSpec& spec, std::vector<double> p) {
    if (p.size() != spec.digits.size())
        throw SpecError("weight vector has " + std::to_string(p.size()) +
                        " entries for " + std::to_string(spec.digits.size()) +
                        " digits");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] > 0.0))
            throw SpecError("weight " + std::to_string(i) +
                            " is not strictly positive");
        sum += p[i];
    }
    if (std::abs(sum - 1.0) > kWeightTolerance)
        throw SpecError("weights sum to " + std::to_string(sum) +
                        ", expected 1 within 1e-12");

    Weights w;
    w.p = std::move(p);
    w.q.assign(static_cast<std::size_t>(spec.m), 0.0);
    for (std::size_t i = 0; i < w.p.size(); ++i)
        w.q[static_cast<std::size_t>(spec.digits[i].row)] += w.p[i];
    return w;
}

Weights uniform_weights(const CarpetSpec& spec) {
    const double share = 1.0 / static_cast<double>(spec.digits.size());
    return make_weights(spec, std::vector<double>(spec.digits.size(), share));
}

}  // namespace carpetlab
