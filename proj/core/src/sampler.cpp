#include "carpetlab/sampler.hpp"

#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "carpetlab/errors.hpp"
#include "carpetlab/rng.hpp"
#include "carpetlab/threads.hpp"

namespace carpetlab {

namespace {

constexpr int kMaxDepth = 1 << 20;

}  // namespace

SampleSet sample_points(const CarpetSpec& spec, const Weights& weights,
                        std::size_t count, int depth, std::uint64_t seed,
                        int workers) {
    // Revalidate: Weights is an open struct and may not have gone through
    // make_weights.
    Weights checked = make_weights(spec, weights.p);
    if (depth < 1 || depth > kMaxDepth)
        throw SpecError("truncation depth " + std::to_string(depth) +
                        " out of range [1, " + std::to_string(kMaxDepth) + "]");

    std::vector<double> cumulative(checked.p.size());
    double running = 0.0;
    for (std::size_t i = 0; i < checked.p.size(); ++i) {
        running += checked.p[i];
        cumulative[i] = running;
    }
    cumulative.back() = 1.0;  // absorb rounding; the last digit catches u near 1

    SampleSet set;
    set.points.resize(count);
    set.weights = std::move(checked);
    set.depth = depth;
    set.seed = seed;

    auto draw_point = [&](std::size_t index) {
        SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(index));
        // Compose x -> ax*x + bx from the outside in: appending digit d maps
        // M to M o phi_d, so the first drawn symbol is the outermost map.
        double ax = 1.0, bx = 0.0, ay = 1.0, by = 0.0;
        for (int step = 0; step < depth; ++step) {
            const double u = rng.uniform01();
            std::size_t di = 0;
            while (u > cumulative[di]) ++di;
            const Digit& d = spec.digits[di];
            const double sx = static_cast<double>(d.sx) / spec.n;
            const double ox = static_cast<double>(d.offset_x()) / spec.n;
            const double sy = static_cast<double>(d.sy) / spec.m;
            const double oy = static_cast<double>(d.offset_y()) / spec.m;
            bx = ax * ox + bx;
            ax = ax * sx;
            by = ay * oy + by;
            ay = ay * sy;
        }
        set.points[index] = {ax * 0.5 + bx, ay * 0.5 + by};
    };

    const int pool_size = worker_count(workers);
    if (pool_size == 1 || count < 4096) {
        for (std::size_t i = 0; i < count; ++i) draw_point(i);
        return set;
    }

    std::atomic<std::size_t> cursor{0};
    constexpr std::size_t kBlock = 8192;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(pool_size));
    for (int t = 0; t < pool_size; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t begin = cursor.fetch_add(kBlock);
                if (begin >= count) return;
                const std::size_t end = std::min(begin + kBlock, count);
                for (std::size_t i = begin; i < end; ++i) draw_point(i);
            }
        });
    for (auto& th : pool) th.join();
    return set;
}

}  // namespace carpetlab
