#include "carpetlab/boxcount.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "carpetlab/dimension.hpp"
#include "carpetlab/errors.hpp"
#include "word_enum.hpp"

namespace carpetlab {

namespace {

struct Key {
    uint128 x = 0;
    uint128 y = 0;
    friend bool operator==(const Key&, const Key&) = default;
    friend bool operator<(const Key& a, const Key& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

// One word's contribution to the entropy aggregation. `cls` encodes the
// aggregation class (prefix digits + suffix rows); words of one class carry
// the same key unless reflections split them.
struct MassItem {
    Key key;
    std::uint64_t cls = 0;
    double mass = 0.0;
};

void check_budget(const CarpetSpec& spec, int level, std::uint64_t budget,
                  const char* what) {
    const std::uint64_t words = detail::word_count(spec.digits.size(), level);
    if (words > budget)
        throw BudgetError(std::string(what) + " at level " + std::to_string(level) +
                          " needs " + std::to_string(words) + " words, budget " +
                          std::to_string(budget));
}

double level_side(int m, int level) {
    return 1.0 / static_cast<double>(ipow128(m, level));
}

// Dense rank of each row that actually occurs, for compact class codes.
std::vector<int> row_ranks(const CarpetSpec& spec, int* distinct) {
    std::vector<int> rank(static_cast<std::size_t>(spec.m), -1);
    int next = 0;
    for (int j = 0; j < spec.m; ++j)
        for (const Digit& d : spec.digits)
            if (d.row == j) {
                rank[static_cast<std::size_t>(j)] = next++;
                break;
            }
    *distinct = next;
    return rank;
}

}  // namespace

int truncation_level(int n, int m, int level) {
    const uint128 m_pow = ipow128(m, level);
    int k = 0;
    uint128 n_pow = 1;
    while (n_pow <= m_pow / static_cast<uint128>(n)) {
        n_pow *= static_cast<uint128>(n);
        ++k;
    }
    return k;
}

ApproxSquareKey approx_square_key(const CarpetSpec& spec, std::span<const Digit> word) {
    if (word.empty()) throw SpecError("approximate-square key needs a non-empty word");
    const CylinderRect rect = cylinder_of_word(spec, word);
    const int level = rect.x.level;
    const int k = truncation_level(spec.n, spec.m, level);
    ApproxSquareKey key;
    key.level = level;
    key.truncation = k;
    key.x_index = rect.x.index / ipow128(spec.n, level - k);
    key.y_index = rect.y.index;
    return key;
}

CountSeries exact_box_counts(const CarpetSpec& spec, int l_min, int l_max,
                             std::uint64_t budget, int workers) {
    if (l_min < 1 || l_max < l_min)
        throw SpecError("invalid level range [" + std::to_string(l_min) + ", " +
                        std::to_string(l_max) + "]");
    for (int l = l_min; l <= l_max; ++l)
        check_budget(spec, l, budget, "exact enumeration");

    CountSeries series;
    series.provenance.kind = CountProvenance::Exact;
    for (int l = l_min; l <= l_max; ++l) {
        const int k = truncation_level(spec.n, spec.m, l);
        auto chunks = detail::enumerate_chunked<std::vector<Key>>(
            spec, l, workers, nullptr,
            [k](const CarpetSpec& s, int length, int start, std::vector<int>& idx,
                std::vector<detail::AxisState>& xs, std::vector<detail::AxisState>& ys,
                std::vector<double>* mass, const std::vector<double>* w) {
                std::vector<Key> keys;
                detail::enumerate_from(s, length, start, idx, xs, ys, mass, w,
                                       [&](const detail::WordView& view) {
                                           keys.push_back(Key{view.x[k].index,
                                                              view.y[length].index});
                                       });
                return keys;
            });

        std::vector<Key> all;
        std::size_t total = 0;
        for (const auto& c : chunks) total += c.size();
        all.reserve(total);
        for (auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
        std::sort(all.begin(), all.end());
        const auto unique_end = std::unique(all.begin(), all.end());
        series.entries.push_back(
            CountEntry{l, static_cast<std::uint64_t>(unique_end - all.begin()),
                       level_side(spec.m, l)});
    }
    return series;
}

CountSeries sampled_box_counts(const SampleSet& samples, int l_min, int l_max, int m) {
    if (l_min < 1 || l_max < l_min)
        throw SpecError("invalid level range [" + std::to_string(l_min) + ", " +
                        std::to_string(l_max) + "]");
    if (samples.points.empty()) throw SpecError("sampled counting needs a non-empty point set");

    CountSeries series;
    series.provenance.kind = CountProvenance::Sampled;
    series.provenance.points = samples.points.size();
    series.provenance.depth = samples.depth;
    series.provenance.seed = samples.seed;

    for (int l = l_min; l <= l_max; ++l) {
        if (l > 62 || std::pow(static_cast<double>(m), l) > 0x1p62)
            throw BudgetError("grid side m^" + std::to_string(l) +
                              " exceeds 64-bit cell indexing");
        const auto cells_per_side = static_cast<std::uint64_t>(ipow128(m, l));
        const double scale = static_cast<double>(cells_per_side);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> cells;
        cells.reserve(samples.points.size());
        for (const auto& pt : samples.points) {
            auto cx = static_cast<std::uint64_t>(pt[0] * scale);
            auto cy = static_cast<std::uint64_t>(pt[1] * scale);
            cx = std::min(cx, cells_per_side - 1);  // clamp 1.0 into the last cell
            cy = std::min(cy, cells_per_side - 1);
            cells.emplace_back(cx, cy);
        }
        std::sort(cells.begin(), cells.end());
        const auto unique_end = std::unique(cells.begin(), cells.end());
        series.entries.push_back(
            CountEntry{l, static_cast<std::uint64_t>(unique_end - cells.begin()),
                       level_side(m, l)});
    }
    return series;
}

SlopeFit fit_dimension_slope(const CountSeries& series, int m) {
    const std::size_t points = series.entries.size();
    if (points < 3)
        throw SpecError("slope fit needs at least 3 levels, got " +
                        std::to_string(points));
    const double log_m = std::log(static_cast<double>(m));

    double x_mean = 0.0, y_mean = 0.0;
    for (const CountEntry& e : series.entries) {
        x_mean += e.level * log_m;
        y_mean += std::log(static_cast<double>(e.count));
    }
    x_mean /= static_cast<double>(points);
    y_mean /= static_cast<double>(points);

    double sxx = 0.0, sxy = 0.0;
    for (const CountEntry& e : series.entries) {
        const double dx = e.level * log_m - x_mean;
        const double dy = std::log(static_cast<double>(e.count)) - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
    }

    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = y_mean - fit.slope * x_mean;
    fit.l_min = series.entries.front().level;
    fit.l_max = series.entries.back().level;
    double ssr = 0.0;
    for (const CountEntry& e : series.entries) {
        const double r = std::log(static_cast<double>(e.count)) -
                         (fit.intercept + fit.slope * e.level * log_m);
        fit.residuals.push_back(r);
        ssr += r * r;
    }
    fit.std_error = points > 2 ? std::sqrt(ssr / static_cast<double>(points - 2) / sxx)
                               : 0.0;
    return fit;
}

EntropySeries partition_entropy_series(const CarpetSpec& spec, const Weights& w,
                                       int l_min, int l_max,
                                       std::uint64_t budget, int workers) {
    if (l_min < 1 || l_max < l_min)
        throw SpecError("invalid level range [" + std::to_string(l_min) + ", " +
                        std::to_string(l_max) + "]");
    if (w.p.size() != spec.digits.size())
        throw SpecError("weight vector does not match the digit set");
    for (int l = l_min; l <= l_max; ++l)
        check_budget(spec, l, budget, "entropy enumeration");

    const double log_m = std::log(static_cast<double>(spec.m));
    int distinct_rows = 0;
    const std::vector<int> rank = row_ranks(spec, &distinct_rows);

    EntropySeries series;
    for (int l = l_min; l <= l_max; ++l) {
        const int k = truncation_level(spec.n, spec.m, l);
        const auto digit_base = static_cast<std::uint64_t>(spec.digits.size());
        const auto row_base = static_cast<std::uint64_t>(distinct_rows);

        auto chunks = detail::enumerate_chunked<std::vector<MassItem>>(
            spec, l, workers, &w.p,
            [&, k](const CarpetSpec& s, int length, int start, std::vector<int>& idx,
                   std::vector<detail::AxisState>& xs, std::vector<detail::AxisState>& ys,
                   std::vector<double>* mass, const std::vector<double>* weights) {
                std::vector<MassItem> items;
                detail::enumerate_from(
                    s, length, start, idx, xs, ys, mass, weights,
                    [&](const detail::WordView& view) {
                        std::uint64_t cls = 0;
                        for (int d = 0; d < k; ++d)
                            cls = cls * digit_base +
                                  static_cast<std::uint64_t>(view.digit_index[d]);
                        for (int d = k; d < length; ++d) {
                            const int row =
                                s.digits[static_cast<std::size_t>(view.digit_index[d])].row;
                            cls = cls * row_base +
                                  static_cast<std::uint64_t>(rank[static_cast<std::size_t>(row)]);
                        }
                        items.push_back(MassItem{Key{view.x[k].index, view.y[length].index},
                                                 cls, view.mass[length]});
                    });
                return items;
            });

        // Concatenating in chunk order restores the global enumeration order;
        // a stable sort then makes the per-key mass summation bit-identical
        // for every worker count.
        std::vector<MassItem> items;
        std::size_t total = 0;
        for (const auto& c : chunks) total += c.size();
        items.reserve(total);
        for (auto& c : chunks) items.insert(items.end(), c.begin(), c.end());
        std::stable_sort(items.begin(), items.end(),
                         [](const MassItem& a, const MassItem& b) {
                             if (!(a.key == b.key)) return a.key < b.key;
                             return a.cls < b.cls;
                         });

        EntropyLevel out;
        out.level = l;
        out.truncation = k;
        std::size_t i = 0;
        while (i < items.size()) {
            std::size_t j = i;
            double key_mass = 0.0;
            std::uint64_t classes = 0;
            std::uint64_t last_cls = 0;
            bool first = true;
            while (j < items.size() && items[j].key == items[i].key) {
                key_mass += items[j].mass;
                if (first || items[j].cls != last_cls) {
                    ++classes;
                    last_cls = items[j].cls;
                    first = false;
                }
                ++j;
            }
            out.entropy -= key_mass * std::log(key_mass);
            out.mass_total += key_mass;
            out.collisions += classes - 1;
            ++out.occupied;
            i = j;
        }
        out.estimate = out.entropy / (static_cast<double>(l) * log_m);
        series.levels.push_back(std::move(out));
    }
    return series;
}

}  // namespace carpetlab
