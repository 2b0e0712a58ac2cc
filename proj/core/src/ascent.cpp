#include "carpetlab/ascent.hpp"

#include <cmath>
#include <string>

#include "carpetlab/errors.hpp"

namespace carpetlab {

namespace {

constexpr double kMinStep = 1e-18;

// q rebuilt from p so the marginal matches the iterate exactly.
Weights with_marginals(const RowProfile& profile, std::vector<double> p) {
    Weights w;
    w.p = std::move(p);
    w.q.assign(profile.row_counts.size(), 0.0);
    for (std::size_t i = 0; i < w.p.size(); ++i)
        w.q[static_cast<std::size_t>(profile.digit_rows[i])] += w.p[i];
    return w;
}

Weights exp_update(const RowProfile& profile, const Weights& w,
                   const std::vector<double>& direction, double step) {
    std::vector<double> p(w.p.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = w.p[i] * std::exp(step * direction[i]);
        sum += p[i];
    }
    for (double& x : p) x /= sum;
    return with_marginals(profile, p);
}

}  // namespace

std::vector<double> objective_gradient(const RowProfile& profile, const Weights& w) {
    if (w.p.size() != profile.digit_rows.size())
        throw SpecError("weight vector has " + std::to_string(w.p.size()) +
                        " entries for " + std::to_string(profile.digit_rows.size()) +
                        " digits");
    const double inv_log_m = 1.0 / -profile.lambda1;
    const double inv_log_n = 1.0 / -profile.lambda2;
    std::vector<double> g(w.p.size());
    for (std::size_t i = 0; i < w.p.size(); ++i) {
        const double p_d = w.p[i];
        const double q_j = w.q[static_cast<std::size_t>(profile.digit_rows[i])];
        if (!(p_d > 0.0) || !(q_j > 0.0))
            throw SpecError("gradient undefined: weight component " +
                            std::to_string(i) + " is zero");
        g[i] = -(std::log(q_j) + 1.0) * (inv_log_m - inv_log_n) -
               (std::log(p_d) + 1.0) * inv_log_n;
    }
    return g;
}

AscentTrace maximize_dimension(const RowProfile& profile, const Weights& init,
                               const AscentConfig& cfg) {
    AscentTrace trace;
    trace.weights = with_marginals(profile, init.p);
    double objective = ly_dimension(profile, trace.weights);
    trace.objective.push_back(objective);

    for (int it = 1; it <= cfg.max_iterations; ++it) {
        std::vector<double> g = objective_gradient(profile, trace.weights);
        double mean = 0.0;
        for (double x : g) mean += x;
        mean /= static_cast<double>(g.size());
        for (double& x : g) x -= mean;  // simplex-tangent component

        double step = cfg.step;
        Weights candidate = exp_update(profile, trace.weights, g, step);
        double next = ly_dimension(profile, candidate);
        while (next < objective && step > kMinStep) {
            step *= cfg.backtrack;
            candidate = exp_update(profile, trace.weights, g, step);
            next = ly_dimension(profile, candidate);
        }
        if (next < objective) {  // no ascent at any step size; hold position
            candidate = trace.weights;
            next = objective;
        }

        const double gain = next - objective;
        trace.weights = std::move(candidate);
        objective = next;
        trace.objective.push_back(objective);
        trace.iterations = it;
        if (gain < cfg.tolerance) {
            trace.converged = true;
            break;
        }
    }
    return trace;
}

}  // namespace carpetlab
