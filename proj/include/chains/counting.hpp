#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chains/bigint.hpp"
#include "chains/geometry.hpp"

namespace chains {

/// Exact chain count. BigInt semantics: never approximated, cannot wrap.
using ChainCount = BigInt;

/// Ordered list of k positive distances (delta_1, ..., delta_k). k = 0 is the
/// empty sequence; 0-chains are single points.
struct DistanceSequence {
    std::vector<double> deltas;

    int k() const { return static_cast<int>(deltas.size()); }
    void validate() const;  // every delta positive and finite
    DistanceSequence reversed() const;
};

/// Degree histogram of the delta-distance graph: degree_counts[r] is the
/// number of points with exactly r neighbors at distance delta.
struct RichHistogram {
    double delta = 0.0;
    std::map<std::int64_t, std::int64_t> degree_counts;

    /// Number of points with at least r neighbors. Nonincreasing in r.
    std::int64_t rich_count(std::int64_t r) const;
};

/// Reference oracle: counts ordered (k+1)-tuples of pairwise-distinct points
/// with |p_j p_{j+1}| = delta_j by direct nested enumeration. Uses only
/// squared_distance / distances_equal, never a RadiusIndex, so it stays
/// independent of the fast path it certifies.
///
/// Guarded: requires k <= 6 and n^(k+1) <= 1e9, otherwise throws and advises
/// count_chains.
ChainCount count_chains_brute(const PointSet& ps, const DistanceSequence& ds,
                              const TolerancePolicy& tol = {});

/// Exact chain count by depth-first extension over per-delta radius indexes,
/// with a visited set enforcing distinctness. Equal deltas share one index.
/// Deterministic; equals count_chains_brute on any input the oracle accepts.
///
/// `threads` > 1 partitions the count by the first point of the chain; any
/// partition sums to the same total.
ChainCount count_chains(const PointSet& ps, const DistanceSequence& ds,
                        const TolerancePolicy& tol = {}, int threads = 1);

/// Walk count: distinctness dropped, repeats allowed. Computed by k sparse
/// vector products through the radius indexes. Always >= count_chains, with
/// equality for k <= 1.
ChainCount count_walks(const PointSet& ps, const DistanceSequence& ds,
                       const TolerancePolicy& tol = {});

/// Exact degree histogram of the radius index for delta.
RichHistogram rich_point_histogram(const PointSet& ps, double delta,
                                   const TolerancePolicy& tol = {});

/// First `limit` chains in the deterministic DFS order of count_chains, as
/// point-index tuples. Requires limit >= 1.
std::vector<std::vector<std::int32_t>> enumerate_chains(const PointSet& ps,
                                                        const DistanceSequence& ds,
                                                        const TolerancePolicy& tol,
                                                        std::int64_t limit);

}  // namespace chains
