#include "chains/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <unordered_map>

namespace chains {

void TolerancePolicy::validate() const {
    if (!(rel_tol > 0.0) || !(rel_tol < 1e-3))
        throw ValidationError("rel_tol must lie in (0, 1e-3)");
}

double TolerancePolicy::band(double delta) const {
    return rel_tol * std::max(1.0, delta * delta);
}

double squared_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw ValidationError("squared_distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = p[i] - q[i];
        s += d * d;
    }
    return s;
}

bool distances_equal(double d2, double delta, const TolerancePolicy& tol) {
    return std::abs(d2 - delta * delta) <= tol.band(delta);
}

namespace {

struct CellKey {
    std::array<std::int64_t, 4> c{};
    bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::int64_t v : k.c) h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Clamped so extreme coordinate/cell ratios collapse into boundary cells
// instead of overflowing; merged cells only add candidates, every candidate
// pair is distance-checked anyway.
std::int64_t cell_of(double x, double cell) {
    const double q = std::floor(x / cell);
    if (q >= 4.0e18) return std::int64_t(4000000000000000000);
    if (q <= -4.0e18) return std::int64_t(-4000000000000000000);
    return static_cast<std::int64_t>(q);
}

}  // namespace

PointSet::PointSet(int dim, std::vector<double> coords, const TolerancePolicy& tol)
    : dim_(dim), coords_(std::move(coords)) {
    tol.validate();
    if (dim_ < 2 || dim_ > 4) throw ValidationError("dim must be 2, 3 or 4");
    if (coords_.empty() || coords_.size() % static_cast<std::size_t>(dim_) != 0)
        throw ValidationError("coordinate list must be a nonempty multiple of dim");
    for (double c : coords_)
        if (!std::isfinite(c)) throw ValidationError("coordinates must be finite");

    // Duplicate scan on a grid of cell size sqrt(rel_tol): two points whose
    // squared distance is within the duplicate band land in the same or an
    // adjacent cell.
    const std::int64_t n = size();
    const double dup_band = tol.rel_tol;  // threshold on squared distance
    const double cell = std::sqrt(dup_band);
    std::unordered_map<CellKey, std::vector<std::int32_t>, CellKeyHash> grid;
    grid.reserve(static_cast<std::size_t>(n) * 2);
    std::int64_t offsets = 1;
    for (int a = 0; a < dim_; ++a) offsets *= 3;
    for (std::int64_t i = 0; i < n; ++i) {
        const double* pi = coords_.data() + i * dim_;
        CellKey base;
        for (int a = 0; a < dim_; ++a) base.c[a] = cell_of(pi[a], cell);
        for (std::int64_t t = 0; t < offsets; ++t) {
            CellKey key = base;
            std::int64_t rest = t;
            for (int a = 0; a < dim_; ++a) {
                key.c[a] += rest % 3 - 1;
                rest /= 3;
            }
            const auto it = grid.find(key);
            if (it == grid.end()) continue;
            for (const std::int32_t j : it->second) {
                const double* pj = coords_.data() + static_cast<std::int64_t>(j) * dim_;
                double s = 0.0;
                for (int a = 0; a < dim_; ++a) {
                    const double d = pi[a] - pj[a];
                    s += d * d;
                }
                if (s <= dup_band)
                    throw ValidationError("points " + std::to_string(j) + " and " +
                                          std::to_string(i) + " coincide under the tolerance");
            }
        }
        grid[base].push_back(static_cast<std::int32_t>(i));
    }
}

namespace {

// Squared min/max distance from p to the closed box of grid cell `key`.
void cell_distance_bounds(const double* p, int dim, const CellKey& key, double cell, double& min2,
                          double& max2) {
    min2 = 0.0;
    max2 = 0.0;
    for (int a = 0; a < dim; ++a) {
        const double lo = static_cast<double>(key.c[a]) * cell;
        const double hi = lo + cell;
        const double dmin = std::max({lo - p[a], p[a] - hi, 0.0});
        const double dmax = std::max(hi - p[a], p[a] - lo);
        min2 += dmin * dmin;
        max2 += dmax * dmax;
    }
}

}  // namespace

RadiusIndex build_radius_index(const PointSet& ps, double delta, const TolerancePolicy& tol) {
    tol.validate();
    if (!(delta > 0.0) || !std::isfinite(delta)) throw ValidationError("delta must be positive and finite");

    const std::int64_t n = ps.size();
    const int dim = ps.dim();
    RadiusIndex idx;
    idx.delta = delta;
    idx.neighbors.assign(static_cast<std::size_t>(n), {});

    const double band = tol.band(delta);
    const double hi2 = delta * delta + band;
    const double lo2 = std::max(0.0, delta * delta - band);

    std::unordered_map<CellKey, std::vector<std::int32_t>, CellKeyHash> grid;
    grid.reserve(static_cast<std::size_t>(n) * 2);
    for (std::int64_t i = 0; i < n; ++i) {
        auto p = ps.point(i);
        CellKey key;
        for (int a = 0; a < dim; ++a) key.c[a] = cell_of(p[a], delta);
        grid[key].push_back(static_cast<std::int32_t>(i));
    }

    auto scan_cell = [&](std::int64_t i, const double* pi, const CellKey& key) {
        const auto it = grid.find(key);
        if (it == grid.end()) return;
        double min2 = 0.0, max2 = 0.0;
        cell_distance_bounds(pi, dim, key, delta, min2, max2);
        if (min2 > hi2 || max2 < lo2) return;  // cell misses the annulus
        for (const std::int32_t j : it->second) {
            if (j <= i) continue;  // each unordered pair tested exactly once
            const double d2 = squared_distance(ps.point(i), ps.point(j));
            if (std::abs(d2 - delta * delta) <= band) {
                idx.neighbors[static_cast<std::size_t>(i)].push_back(j);
                idx.neighbors[static_cast<std::size_t>(j)].push_back(static_cast<std::int32_t>(i));
            }
        }
    };

    // Neighbors live within `reach` cells along each axis. reach is 2 unless
    // the band is absolutely wide relative to delta (tiny delta); in that
    // case enumerating offsets can exceed the number of occupied cells and we
    // scan those instead.
    const std::int64_t reach = cell_of(std::sqrt(hi2), delta) + 1;
    const std::int64_t width = 2 * reach + 1;
    double cand = 1.0;
    for (int a = 0; a < dim; ++a) cand *= static_cast<double>(width);
    const bool enumerate_offsets = cand <= static_cast<double>(grid.size()) * 8.0 + 64.0;

    for (std::int64_t i = 0; i < n; ++i) {
        const double* pi = ps.point(i).data();
        if (enumerate_offsets) {
            CellKey base;
            for (int a = 0; a < dim; ++a) base.c[a] = cell_of(pi[a], delta);
            std::int64_t total = 1;
            for (int a = 0; a < dim; ++a) total *= width;
            for (std::int64_t t = 0; t < total; ++t) {
                CellKey key = base;
                std::int64_t rest = t;
                for (int a = 0; a < dim; ++a) {
                    key.c[a] += rest % width - reach;
                    rest /= width;
                }
                scan_cell(i, pi, key);
            }
        } else {
            for (const auto& [key, members] : grid) {
                (void)members;
                scan_cell(i, pi, key);
            }
        }
    }

    for (auto& lst : idx.neighbors) std::sort(lst.begin(), lst.end());
    return idx;
}

PlaneBasis PlaneBasis::coordinate(int dim, int axis_u, int axis_v) {
    if (dim < 2 || dim > 4 || axis_u < 0 || axis_u >= dim || axis_v < 0 || axis_v >= dim ||
        axis_u == axis_v)
        throw ValidationError("invalid coordinate plane axes");
    PlaneBasis b;
    b.u.assign(static_cast<std::size_t>(dim), 0.0);
    b.v.assign(static_cast<std::size_t>(dim), 0.0);
    b.u[static_cast<std::size_t>(axis_u)] = 1.0;
    b.v[static_cast<std::size_t>(axis_v)] = 1.0;
    return b;
}

void PlaneBasis::validate(int dim) const {
    if (static_cast<int>(u.size()) != dim || static_cast<int>(v.size()) != dim)
        throw ValidationError("plane basis dimension mismatch");
    double uu = 0.0, vv = 0.0, uv = 0.0;
    for (int a = 0; a < dim; ++a) {
        uu += u[a] * u[a];
        vv += v[a] * v[a];
        uv += u[a] * v[a];
    }
    if (std::abs(uu - 1.0) > 1e-12 || std::abs(vv - 1.0) > 1e-12 || std::abs(uv) > 1e-12)
        throw ValidationError("plane basis must be orthonormal");
}

std::vector<std::vector<double>> points_on_circle(std::span<const double> center, double radius,
                                                  std::int64_t count, const PlaneBasis& plane,
                                                  double phase) {
    if (count < 1) throw ValidationError("points_on_circle: count must be >= 1");
    if (!(radius > 0.0)) throw ValidationError("points_on_circle: radius must be positive");
    const int dim = static_cast<int>(center.size());
    plane.validate(dim);

    std::vector<std::vector<double>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t j = 0; j < count; ++j) {
        const double theta = phase + 2.0 * std::numbers::pi * static_cast<double>(j) /
                                         static_cast<double>(count);
        const double cu = radius * std::cos(theta);
        const double cv = radius * std::sin(theta);
        std::vector<double> p(center.begin(), center.end());
        for (int a = 0; a < dim; ++a) p[static_cast<std::size_t>(a)] += cu * plane.u[a] + cv * plane.v[a];
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace chains
