#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chains/errors.hpp"

namespace chains {

/// Relative tolerance for distance comparisons. Two squared distances d2 and
/// delta^2 are considered equal when |d2 - delta^2| <= rel_tol * max(1, delta^2);
/// the max() gives unit-scale configurations an absolute floor.
struct TolerancePolicy {
    double rel_tol = 1e-9;

    void validate() const;  // requires 0 < rel_tol < 1e-3

    /// Half-width of the acceptance band around delta^2.
    double band(double delta) const;
};

/// Sum of squared coordinate differences. Throws on dimension mismatch.
double squared_distance(std::span<const double> p, std::span<const double> q);

/// True iff the squared distance d2 matches delta under the tolerance policy.
/// Precondition: delta > 0.
bool distances_equal(double d2, double delta, const TolerancePolicy& tol = {});

/// Immutable point set in R^2, R^3 or R^4, stored as flat coordinates.
/// Construction validates that all points are pairwise distinct: a squared
/// distance <= rel_tol (the delta -> 0 limit of the equality band) is a
/// duplicate and rejected.
class PointSet {
public:
    PointSet(int dim, std::vector<double> coords, const TolerancePolicy& tol = {});

    int dim() const { return dim_; }
    std::int64_t size() const { return static_cast<std::int64_t>(coords_.size()) / dim_; }
    std::span<const double> point(std::int64_t i) const {
        return {coords_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
    }
    const std::vector<double>& coords() const { return coords_; }

private:
    int dim_;
    std::vector<double> coords_;
};

/// Fixed-radius adjacency: neighbors[i] lists, sorted ascending, every j != i
/// with |p_i p_j| == delta under the tolerance. Symmetric by construction.
struct RadiusIndex {
    double delta = 0.0;
    std::vector<std::vector<std::int32_t>> neighbors;
};

/// Builds the index with a uniform grid of cell size delta, visiting only
/// cells that intersect the annulus induced by the tolerance band. The result
/// is exactly what an all-pairs scan with distances_equal would produce.
RadiusIndex build_radius_index(const PointSet& ps, double delta, const TolerancePolicy& tol = {});

/// Orthonormal basis of the 2-plane a circle lives in.
struct PlaneBasis {
    std::vector<double> u;
    std::vector<double> v;

    /// Plane spanned by two coordinate axes, e.g. coordinate(4, 2, 3) for the
    /// (x3,x4)-plane of R^4.
    static PlaneBasis coordinate(int dim, int axis_u, int axis_v);

    void validate(int dim) const;
};

/// `count` points at angles phase + 2*pi*j/count, j = 0..count-1, each at
/// distance `radius` from `center` within the given plane.
std::vector<std::vector<double>> points_on_circle(std::span<const double> center, double radius,
                                                  std::int64_t count, const PlaneBasis& plane,
                                                  double phase = 0.0);

}  // namespace chains
