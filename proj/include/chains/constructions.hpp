#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "chains/counting.hpp"
#include "chains/rational.hpp"

namespace chains {

enum class Family { hinge, childs_r2, purwin_r3, lenz_r4 };

Family family_from_name(const std::string& name);  // "hinge", "childs-r2", ...
std::string family_name(Family family);

/// A generated extremal configuration: the points, the distance sequence its
/// chains realize, a provable lower bound on the chain count, and the
/// asymptotic exponent the family achieves.
struct ConstructionOutput {
    PointSet points;
    DistanceSequence deltas;
    BigInt predicted_lb;
    Rational predicted_exponent;
};

/// Concentric circles of radii delta1 and delta2 around the origin in R^2,
/// plus the origin itself: floor((n-1)/2) points on the first circle and the
/// rest on the second. Every (circle1 point, origin, circle2 point) triple is
/// a 2-chain, so the count is at least m1*m2. When delta1 and delta2 coincide
/// under the tolerance all n-1 points share one circle and the bound becomes
/// (n-1)(n-2). Requires n >= 3.
ConstructionOutput hinge_extremal(std::int64_t n, double delta1, double delta2);

/// Chain of circle gadgets in R^2: circles of radius delta1 centered at
/// (i*delta2, 0), each carrying m-1 equally spaced points plus its center.
/// The number of gadgets and the emitted distance sequence depend on
/// k mod 3; the walk runs circle point -> center -> circle point -> same
/// point on the next gadget. Requires k >= 0, delta2 >= 2.5*delta1, and
/// gadgets of size m >= 3.
ConstructionOutput childs_r2(std::int64_t n, int k, double delta1, double delta2);

/// Circle gadgets in parallel planes of R^3: circles of radius delta1 in the
/// planes x = i*t with t = sqrt(delta2^2 - delta1^2), centers on the x-axis,
/// so every point of one circle is at distance delta2 from the neighboring
/// centers. Odd k appends a lone extra center with no circle points around
/// it. Requires k >= 2, 0 < delta1 < delta2, and m >= 3.
ConstructionOutput purwin_r3(std::int64_t n, int k, double delta1, double delta2);

/// Two circles of radius delta/sqrt(2) centered at the origin of R^4, one in
/// the (x1,x2)-plane and one in the (x3,x4)-plane. Every cross-circle pair is
/// at distance exactly delta, so chains may alternate circles freely; the
/// distance sequence is k copies of delta. Requires k >= 1 and n >= 2(k+1).
ConstructionOutput lenz_r4(std::int64_t n, int k, double delta);

/// Dispatch by family. hinge takes k = 2 (or -1 meaning default) and requires
/// delta2; childs-r2 and purwin-r3 require delta2; lenz-r4 takes only delta1
/// and rejects a second distance.
ConstructionOutput make_construction(Family family, std::int64_t n, int k, double delta1,
                                     std::optional<double> delta2);

}  // namespace chains
