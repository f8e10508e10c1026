#include "chains/counting.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

namespace chains {

void DistanceSequence::validate() const {
    for (double d : deltas)
        if (!(d > 0.0) || !std::isfinite(d)) throw ValidationError("every delta must be positive and finite");
}

DistanceSequence DistanceSequence::reversed() const {
    DistanceSequence r = *this;
    std::reverse(r.deltas.begin(), r.deltas.end());
    return r;
}

std::int64_t RichHistogram::rich_count(std::int64_t r) const {
    std::int64_t total = 0;
    for (auto it = degree_counts.lower_bound(r); it != degree_counts.end(); ++it) total += it->second;
    return total;
}

ChainCount count_chains_brute(const PointSet& ps, const DistanceSequence& ds,
                              const TolerancePolicy& tol) {
    ds.validate();
    tol.validate();
    const int k = ds.k();
    const std::int64_t n = ps.size();
    if (k > 6 || std::pow(static_cast<double>(n), k + 1) > 1e9)
        throw ValidationError("count_chains_brute guard exceeded (k <= 6 and n^(k+1) <= 1e9); use count_chains");
    if (k == 0) return ChainCount(n);

    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> path(static_cast<std::size_t>(k) + 1, 0);
    unsigned long long total = 0;

    // Nested enumeration over tuple slots; each extension checks distinctness
    // and the distance to its predecessor, nothing else.
    auto extend = [&](auto&& self, int slot) -> void {
        if (slot == k + 1) {
            ++total;
            return;
        }
        for (std::int64_t q = 0; q < n; ++q) {
            if (used[static_cast<std::size_t>(q)]) continue;
            if (slot > 0) {
                const double d2 = squared_distance(ps.point(path[static_cast<std::size_t>(slot) - 1]),
                                                   ps.point(q));
                if (!distances_equal(d2, ds.deltas[static_cast<std::size_t>(slot) - 1], tol)) continue;
            }
            path[static_cast<std::size_t>(slot)] = q;
            used[static_cast<std::size_t>(q)] = 1;
            self(self, slot + 1);
            used[static_cast<std::size_t>(q)] = 0;
        }
    };
    extend(extend, 0);
    return ChainCount(total);
}

namespace {

// Builds one RadiusIndex per distinct delta value and the per-edge view onto
// them. The map keeps node addresses stable.
std::map<double, RadiusIndex> build_indexes(const PointSet& ps, const DistanceSequence& ds,
                                            const TolerancePolicy& tol) {
    std::map<double, RadiusIndex> indexes;
    for (double d : ds.deltas)
        if (!indexes.count(d)) indexes.emplace(d, build_radius_index(ps, d, tol));
    return indexes;
}

std::vector<const RadiusIndex*> level_view(const std::map<double, RadiusIndex>& indexes,
                                           const DistanceSequence& ds) {
    std::vector<const RadiusIndex*> level;
    level.reserve(ds.deltas.size());
    for (double d : ds.deltas) level.push_back(&indexes.at(d));
    return level;
}

struct ChainDfs {
    const std::vector<const RadiusIndex*>& level;
    std::vector<char> used;
    unsigned long long leaves = 0;

    void run(std::int32_t v, int depth) {
        const auto& nbrs = level[static_cast<std::size_t>(depth)]->neighbors[static_cast<std::size_t>(v)];
        if (depth + 1 == static_cast<int>(level.size())) {
            for (const std::int32_t q : nbrs)
                if (!used[static_cast<std::size_t>(q)] && ++leaves == 0)
                    throw ValidationError("chain count exceeds 64-bit partial accumulator");
            return;
        }
        for (const std::int32_t q : nbrs) {
            if (used[static_cast<std::size_t>(q)]) continue;
            used[static_cast<std::size_t>(q)] = 1;
            run(q, depth + 1);
            used[static_cast<std::size_t>(q)] = 0;
        }
    }
};

}  // namespace

ChainCount count_chains(const PointSet& ps, const DistanceSequence& ds, const TolerancePolicy& tol,
                        int threads) {
    ds.validate();
    tol.validate();
    if (threads < 1) throw ValidationError("threads must be >= 1");
    const int k = ds.k();
    const std::int64_t n = ps.size();
    if (k == 0) return ChainCount(n);

    const auto indexes = build_indexes(ps, ds, tol);
    const auto level = level_view(indexes, ds);

    auto count_range = [&](std::int64_t lo, std::int64_t hi) {
        ChainDfs dfs{level, std::vector<char>(static_cast<std::size_t>(n), 0), 0};
        ChainCount acc = 0;
        for (std::int64_t p1 = lo; p1 < hi; ++p1) {
            dfs.leaves = 0;
            dfs.used[static_cast<std::size_t>(p1)] = 1;
            dfs.run(static_cast<std::int32_t>(p1), 0);
            dfs.used[static_cast<std::size_t>(p1)] = 0;
            acc += dfs.leaves;
        }
        return acc;
    };

    const int workers = static_cast<int>(std::min<std::int64_t>(threads, n));
    if (workers <= 1) return count_range(0, n);

    // Partitioned by the first point of the chain; any partition sums to the
    // same total, so a static block split keeps the result deterministic.
    std::vector<ChainCount> parts(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::int64_t lo = n * w / workers;
            const std::int64_t hi = n * (w + 1) / workers;
            try {
                parts[static_cast<std::size_t>(w)] = count_range(lo, hi);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    ChainCount total = 0;
    for (const auto& part : parts) total += part;
    return total;
}

ChainCount count_walks(const PointSet& ps, const DistanceSequence& ds, const TolerancePolicy& tol) {
    ds.validate();
    tol.validate();
    const std::int64_t n = ps.size();
    if (ds.k() == 0) return ChainCount(n);

    const auto indexes = build_indexes(ps, ds, tol);
    const auto level = level_view(indexes, ds);

    std::vector<BigInt> v(static_cast<std::size_t>(n), 1);
    std::vector<BigInt> w(static_cast<std::size_t>(n));
    for (const RadiusIndex* idx : level) {
        for (std::int64_t q = 0; q < n; ++q) {
            BigInt s = 0;
            for (const std::int32_t p : idx->neighbors[static_cast<std::size_t>(q)])
                s += v[static_cast<std::size_t>(p)];
            w[static_cast<std::size_t>(q)] = std::move(s);
        }
        v.swap(w);
    }
    ChainCount total = 0;
    for (const auto& x : v) total += x;
    return total;
}

RichHistogram rich_point_histogram(const PointSet& ps, double delta, const TolerancePolicy& tol) {
    const RadiusIndex idx = build_radius_index(ps, delta, tol);
    RichHistogram hist;
    hist.delta = delta;
    for (const auto& nbrs : idx.neighbors) ++hist.degree_counts[static_cast<std::int64_t>(nbrs.size())];
    return hist;
}

std::vector<std::vector<std::int32_t>> enumerate_chains(const PointSet& ps,
                                                        const DistanceSequence& ds,
                                                        const TolerancePolicy& tol,
                                                        std::int64_t limit) {
    if (limit < 1) throw ValidationError("enumerate_chains: limit must be >= 1");
    ds.validate();
    tol.validate();
    const int k = ds.k();
    const std::int64_t n = ps.size();

    std::vector<std::vector<std::int32_t>> out;
    if (k == 0) {
        for (std::int64_t i = 0; i < n && static_cast<std::int64_t>(out.size()) < limit; ++i)
            out.push_back({static_cast<std::int32_t>(i)});
        return out;
    }

    const auto indexes = build_indexes(ps, ds, tol);
    const auto level = level_view(indexes, ds);

    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<std::int32_t> path;
    path.reserve(static_cast<std::size_t>(k) + 1);

    // Same traversal order as count_chains: first point ascending, then
    // sorted neighbor lists at each depth.
    auto walk = [&](auto&& self, std::int32_t v, int depth) -> bool {
        for (const std::int32_t q : level[static_cast<std::size_t>(depth)]->neighbors[static_cast<std::size_t>(v)]) {
            if (used[static_cast<std::size_t>(q)]) continue;
            path.push_back(q);
            if (depth + 1 == k) {
                out.push_back(path);
                if (static_cast<std::int64_t>(out.size()) >= limit) {
                    path.pop_back();
                    return false;
                }
            } else {
                used[static_cast<std::size_t>(q)] = 1;
                const bool keep_going = self(self, q, depth + 1);
                used[static_cast<std::size_t>(q)] = 0;
                if (!keep_going) {
                    path.pop_back();
                    return false;
                }
            }
            path.pop_back();
        }
        return true;
    };

    for (std::int64_t p1 = 0; p1 < n; ++p1) {
        path.push_back(static_cast<std::int32_t>(p1));
        used[static_cast<std::size_t>(p1)] = 1;
        const bool keep_going = walk(walk, static_cast<std::int32_t>(p1), 0);
        used[static_cast<std::size_t>(p1)] = 0;
        path.pop_back();
        if (!keep_going) break;
    }
    return out;
}

}  // namespace chains
