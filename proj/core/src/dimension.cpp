#include "carpetlab/dimension.hpp"

#include <cmath>
#include <string>

#include "carpetlab/errors.hpp"

namespace carpetlab {

RowProfile row_profile(const CarpetSpec& spec) {
    RowProfile profile;
    profile.row_counts.assign(static_cast<std::size_t>(spec.m), 0);
    profile.digit_rows.reserve(spec.digits.size());
    for (const Digit& d : spec.digits) {
        ++profile.row_counts[static_cast<std::size_t>(d.row)];
        profile.digit_rows.push_back(d.row);
    }
    for (std::int64_t t : profile.row_counts)
        if (t > 0) ++profile.nonempty_rows;
    profile.digit_count = static_cast<std::int64_t>(spec.digits.size());
    profile.beta = std::log(static_cast<double>(spec.m)) /
                   std::log(static_cast<double>(spec.n));
    profile.lambda1 = -std::log(static_cast<double>(spec.m));
    profile.lambda2 = -std::log(static_cast<double>(spec.n));
    return profile;
}

double shannon_entropy(std::span<const double> v) {
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0.0)
            throw SpecError("entropy input component " + std::to_string(i) +
                            " is negative");
        sum += v[i];
    }
    if (std::abs(sum - 1.0) > kWeightTolerance)
        throw SpecError("entropy input sums to " + std::to_string(sum) +
                        ", expected 1 within 1e-12");
    double h = 0.0;
    for (double x : v)
        if (x > 0.0) h -= x * std::log(x);
    return h;
}

double hausdorff_dimension(const RowProfile& profile) {
    double s = 0.0;
    for (std::int64_t t : profile.row_counts)
        if (t > 0) s += std::pow(static_cast<double>(t), profile.beta);
    return std::log(s) / -profile.lambda1;
}

double ly_dimension(const RowProfile& profile, const Weights& w) {
    const double log_m = -profile.lambda1;
    const double log_n = -profile.lambda2;
    const double h_p = shannon_entropy(w.p);
    const double h_q = shannon_entropy(w.q);
    return h_q / log_m + (h_p - h_q) / log_n;
}

Weights optimal_weights(const RowProfile& profile) {
    const std::size_t m = profile.row_counts.size();
    double s = 0.0;
    std::vector<double> q(m, 0.0);
    for (std::size_t j = 0; j < m; ++j)
        if (profile.row_counts[j] > 0) {
            q[j] = std::pow(static_cast<double>(profile.row_counts[j]), profile.beta);
            s += q[j];
        }
    for (double& x : q) x /= s;

    Weights w;
    w.p.reserve(profile.digit_rows.size());
    for (int row : profile.digit_rows)
        w.p.push_back(q[static_cast<std::size_t>(row)] /
                      static_cast<double>(profile.row_counts[static_cast<std::size_t>(row)]));
    // Rebuild q as actual row sums of p so the marginal invariant holds bit-exactly.
    w.q.assign(m, 0.0);
    for (std::size_t i = 0; i < w.p.size(); ++i)
        w.q[static_cast<std::size_t>(profile.digit_rows[i])] += w.p[i];
    return w;
}

DimensionReport dimension_report(const RowProfile& profile) {
    DimensionReport report;
    double s = 0.0;
    for (std::int64_t t : profile.row_counts)
        if (t > 0) s += std::pow(static_cast<double>(t), profile.beta);
    report.row_weight_sum = s;
    report.hausdorff = hausdorff_dimension(profile);
    report.optimal = optimal_weights(profile);
    report.entropy_p = shannon_entropy(report.optimal.p);
    report.entropy_q = shannon_entropy(report.optimal.q);
    return report;
}

}  // namespace carpetlab
