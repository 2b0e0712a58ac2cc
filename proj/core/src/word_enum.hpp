#pragma once

// Internal word-enumeration engine shared by boxcount and render. Words are
// visited in lexicographic digit-index order; the chunked driver partitions
// that order by prefix so per-chunk outputs concatenated in chunk order
// reproduce the single-threaded visit sequence exactly.

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "carpetlab/carpet.hpp"
#include "carpetlab/cylinder.hpp"
#include "carpetlab/errors.hpp"
#include "carpetlab/threads.hpp"

namespace carpetlab::detail {

struct AxisState {
    uint128 index = 0;
    int orientation = +1;
};

inline AxisState advance(AxisState s, std::int64_t base, int cell, int sign) {
    AxisState out;
    const int effective = s.orientation == +1 ? cell : static_cast<int>(base) - 1 - cell;
    out.index = s.index * static_cast<uint128>(base) + static_cast<uint128>(effective);
    out.orientation = s.orientation * sign;
    return out;
}

/// Per-word view handed to leaf callbacks. Arrays cover depths 0..length;
/// digit_index covers depths 0..length-1.
struct WordView {
    const int* digit_index;
    const AxisState* x;
    const AxisState* y;
    const double* mass;  ///< running weight products; null when not requested
    int length;
};

/// |D|^length words starting from pre-filled depth `start`. idx/xs/ys (and
/// mass when weights given) must be sized length / length+1 and filled up to
/// `start`. Throws BudgetError if the depth exceeds the integer capacity.
template <class Leaf>
void enumerate_from(const CarpetSpec& spec, int length, int start,
                    std::vector<int>& idx, std::vector<AxisState>& xs,
                    std::vector<AxisState>& ys, std::vector<double>* mass,
                    const std::vector<double>* weights, Leaf&& leaf) {
    if (length > level_capacity(spec.n) || length > level_capacity(spec.m))
        throw BudgetError("depth overflow: level " + std::to_string(length) +
                          " exceeds the exact-integer capacity of the grid");
    const int digit_count = static_cast<int>(spec.digits.size());
    WordView view{idx.data(), xs.data(), ys.data(),
                  mass ? mass->data() : nullptr, length};

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == length) {
            leaf(view);
            return;
        }
        for (int di = 0; di < digit_count; ++di) {
            const Digit& d = spec.digits[static_cast<std::size_t>(di)];
            idx[static_cast<std::size_t>(depth)] = di;
            xs[static_cast<std::size_t>(depth) + 1] =
                advance(xs[static_cast<std::size_t>(depth)], spec.n, d.column, d.sx);
            ys[static_cast<std::size_t>(depth) + 1] =
                advance(ys[static_cast<std::size_t>(depth)], spec.m, d.row, d.sy);
            if (mass)
                (*mass)[static_cast<std::size_t>(depth) + 1] =
                    (*mass)[static_cast<std::size_t>(depth)] *
                    (*weights)[static_cast<std::size_t>(di)];
            self(self, depth + 1);
        }
    };
    rec(rec, start);
}

/// Word count |D|^length, saturating at 2^64-1.
inline std::uint64_t word_count(std::size_t digits, int length) {
    std::uint64_t count = 1;
    for (int i = 0; i < length; ++i) {
        if (count > UINT64_MAX / digits) return UINT64_MAX;
        count *= digits;
    }
    return count;
}

/// Runs `body(prefix_states)` for every prefix of a chosen split depth, in
/// lexicographic order across the returned vector. `body` must be pure w.r.t.
/// shared state; results are combined by the caller in chunk order.
template <class ChunkResult, class Body>
std::vector<ChunkResult> enumerate_chunked(const CarpetSpec& spec, int length,
                                           int workers, const std::vector<double>* weights,
                                           Body&& body) {
    // Validate depth on the calling thread; workers assume it cannot throw.
    if (length > level_capacity(spec.n) || length > level_capacity(spec.m))
        throw BudgetError("depth overflow: level " + std::to_string(length) +
                          " exceeds the exact-integer capacity of the grid");
    workers = worker_count(workers);

    int split = 0;
    if (workers > 1) {
        std::uint64_t chunks = 1;
        const auto digits = static_cast<std::uint64_t>(spec.digits.size());
        while (split < length && chunks < 4ull * static_cast<std::uint64_t>(workers)) {
            chunks *= digits;
            ++split;
        }
    }

    // Materialize the prefix states once, in order.
    struct Prefix {
        std::vector<int> idx;
        std::vector<AxisState> xs, ys;
        std::vector<double> mass;
    };
    std::vector<Prefix> prefixes;
    {
        std::vector<int> idx(static_cast<std::size_t>(length), 0);
        std::vector<AxisState> xs(static_cast<std::size_t>(length) + 1);
        std::vector<AxisState> ys(static_cast<std::size_t>(length) + 1);
        std::vector<double> mass(static_cast<std::size_t>(length) + 1, 1.0);
        enumerate_from(spec, split, 0, idx, xs, ys, weights ? &mass : nullptr, weights,
                       [&](const WordView&) {
                           Prefix p;
                           p.idx.assign(idx.begin(), idx.begin() + split);
                           p.xs.assign(xs.begin(), xs.begin() + split + 1);
                           p.ys.assign(ys.begin(), ys.begin() + split + 1);
                           if (weights) p.mass.assign(mass.begin(), mass.begin() + split + 1);
                           prefixes.push_back(std::move(p));
                       });
    }

    std::vector<ChunkResult> results(prefixes.size());
    auto run_chunk = [&](std::size_t c) {
        const Prefix& p = prefixes[c];
        std::vector<int> idx(static_cast<std::size_t>(length), 0);
        std::vector<AxisState> xs(static_cast<std::size_t>(length) + 1);
        std::vector<AxisState> ys(static_cast<std::size_t>(length) + 1);
        std::vector<double> mass(static_cast<std::size_t>(length) + 1, 1.0);
        std::copy(p.idx.begin(), p.idx.end(), idx.begin());
        std::copy(p.xs.begin(), p.xs.end(), xs.begin());
        std::copy(p.ys.begin(), p.ys.end(), ys.begin());
        if (weights) std::copy(p.mass.begin(), p.mass.end(), mass.begin());
        results[c] = body(spec, length, split, idx, xs, ys,
                          weights ? &mass : nullptr, weights);
    };

    if (workers == 1 || prefixes.size() <= 1) {
        for (std::size_t c = 0; c < prefixes.size(); ++c) run_chunk(c);
        return results;
    }

    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    const int active = std::min<int>(workers, static_cast<int>(prefixes.size()));
    pool.reserve(static_cast<std::size_t>(active));
    for (int t = 0; t < active; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t c = cursor.fetch_add(1);
                if (c >= prefixes.size()) return;
                run_chunk(c);
            }
        });
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace carpetlab::detail
