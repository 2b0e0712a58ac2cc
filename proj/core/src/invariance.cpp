#include "carpetlab/invariance.hpp"

#include <algorithm>
#include <cstring>

#include <json.hpp>

#include "carpetlab/dimension.hpp"
#include "carpetlab/errors.hpp"
#include "carpetlab/rng.hpp"

namespace carpetlab {

namespace {

bool bitwise_equal(double a, double b) {
    return std::memcmp(&a, &b, sizeof(double)) == 0;
}

}  // namespace

InvarianceReport invariance_report(const CarpetSpec& spec, int trials,
                                   std::uint64_t seed, int l_min, int l_max,
                                   std::uint64_t budget, int workers) {
    if (trials < 2) throw SpecError("invariance report needs at least 2 trials");
    if (l_min < 1 || l_max < l_min + 2)
        throw SpecError("invariance report needs a fit range of at least 3 levels");

    InvarianceReport report;
    report.base = spec;
    report.trials = trials;
    report.seed = seed;
    report.l_min = l_min;
    report.l_max = l_max;

    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(t));
        std::vector<Digit> digits = spec.digits;
        InvarianceTrial trial;
        for (Digit& d : digits) {
            const std::uint64_t bits = rng.next();
            d.sx = (bits & 1u) ? +1 : -1;
            d.sy = (bits & 2u) ? +1 : -1;
            trial.signs.emplace_back(d.sx, d.sy);
        }
        const CarpetSpec variant = validate_spec(spec.n, spec.m, std::move(digits));

        trial.hausdorff = hausdorff_dimension(row_profile(variant));
        const CountSeries counts = exact_box_counts(variant, 1, l_max, budget, workers);
        for (const CountEntry& e : counts.entries) trial.exact_counts.push_back(e.count);

        CountSeries fit_window;
        fit_window.provenance = counts.provenance;
        for (const CountEntry& e : counts.entries)
            if (e.level >= l_min) fit_window.entries.push_back(e);
        trial.slope = fit_dimension_slope(fit_window, variant.m).slope;

        report.results.push_back(std::move(trial));
    }

    report.dimensions_identical = true;
    report.counts_identical = true;
    double slope_min = report.results.front().slope;
    double slope_max = slope_min;
    for (const InvarianceTrial& trial : report.results) {
        if (!bitwise_equal(trial.hausdorff, report.results.front().hausdorff))
            report.dimensions_identical = false;
        if (trial.exact_counts != report.results.front().exact_counts)
            report.counts_identical = false;
        slope_min = std::min(slope_min, trial.slope);
        slope_max = std::max(slope_max, trial.slope);
    }
    report.max_slope_deviation = slope_max - slope_min;
    return report;
}

std::string invariance_to_json(const InvarianceReport& report) {
    using nlohmann::json;
    json doc;
    doc["spec"]["n"] = report.base.n;
    doc["spec"]["m"] = report.base.m;
    doc["spec"]["digits"] = json::array();
    for (const Digit& d : report.base.digits)
        doc["spec"]["digits"].push_back(
            {{"i", d.column}, {"j", d.row}, {"sx", d.sx}, {"sy", d.sy}});
    doc["trials"] = report.trials;
    doc["seed"] = report.seed;
    doc["fit_levels"] = {{"min", report.l_min}, {"max", report.l_max}};
    doc["results"] = json::array();
    for (const InvarianceTrial& trial : report.results) {
        json row;
        row["signs"] = json::array();
        for (const auto& [sx, sy] : trial.signs) row["signs"].push_back({sx, sy});
        row["hausdorff"] = trial.hausdorff;
        row["slope"] = trial.slope;
        row["exact_counts"] = trial.exact_counts;
        doc["results"].push_back(std::move(row));
    }
    doc["max_slope_deviation"] = report.max_slope_deviation;
    doc["dimensions_identical"] = report.dimensions_identical;
    doc["counts_identical"] = report.counts_identical;
    return doc.dump(2) + "\n";
}

}  // namespace carpetlab
