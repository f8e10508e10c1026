#include "chains/constructions.hpp"

#include <cmath>
#include <span>
#include <vector>

#include "chains/bounds.hpp"

namespace chains {

namespace {

void append_point(std::vector<double>& coords, std::span<const double> p) {
    coords.insert(coords.end(), p.begin(), p.end());
}

BigInt falling_factorial(std::int64_t x, std::int64_t terms) {
    BigInt r = 1;
    for (std::int64_t i = 0; i < terms; ++i) r *= BigInt(x - i);
    return r;
}

BigInt int_pow(std::int64_t base, std::int64_t exp) {
    BigInt r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r *= BigInt(base);
    return r;
}

void require_positive(double d, const char* name) {
    if (!(d > 0.0) || !std::isfinite(d))
        throw ValidationError(std::string(name) + " must be positive and finite");
}

}  // namespace

Family family_from_name(const std::string& name) {
    if (name == "hinge") return Family::hinge;
    if (name == "childs-r2") return Family::childs_r2;
    if (name == "purwin-r3") return Family::purwin_r3;
    if (name == "lenz-r4") return Family::lenz_r4;
    throw ValidationError("unknown construction family '" + name + "'");
}

std::string family_name(Family family) {
    switch (family) {
        case Family::hinge: return "hinge";
        case Family::childs_r2: return "childs-r2";
        case Family::purwin_r3: return "purwin-r3";
        case Family::lenz_r4: return "lenz-r4";
    }
    throw ValidationError("unknown construction family");
}

ConstructionOutput hinge_extremal(std::int64_t n, double delta1, double delta2) {
    if (n < 3) throw ValidationError("hinge construction needs n >= 3");
    require_positive(delta1, "delta1");
    require_positive(delta2, "delta2");
    const TolerancePolicy tol{};
    const PlaneBasis xy = PlaneBasis::coordinate(2, 0, 1);

    std::vector<double> coords{0.0, 0.0};
    BigInt lb;
    if (distances_equal(delta1 * delta1, delta2, tol)) {
        // Coinciding radii: a single circle of n-1 points; every ordered pair
        // of circle points forms a hinge through the center.
        for (const auto& p : points_on_circle(std::span<const double>(coords.data(), 2), delta1,
                                              n - 1, xy))
            append_point(coords, p);
        lb = BigInt(n - 1) * BigInt(n - 2);
    } else {
        const std::int64_t m1 = (n - 1) / 2;
        const std::int64_t m2 = n - 1 - m1;
        const std::vector<double> origin{0.0, 0.0};
        for (const auto& p : points_on_circle(origin, delta1, m1, xy)) append_point(coords, p);
        for (const auto& p : points_on_circle(origin, delta2, m2, xy)) append_point(coords, p);
        lb = BigInt(m1) * BigInt(m2);
    }

    return ConstructionOutput{PointSet(2, std::move(coords), tol),
                              DistanceSequence{{delta1, delta2}}, std::move(lb), Rational(2)};
}

ConstructionOutput childs_r2(std::int64_t n, int k, double delta1, double delta2) {
    if (k < 0) throw ValidationError("childs-r2 needs k >= 0");
    require_positive(delta1, "delta1");
    require_positive(delta2, "delta2");
    if (delta2 < 2.5 * delta1)
        throw ValidationError("childs-r2 requires delta2 >= 2.5*delta1 so translated circles stay disjoint");

    const int residue = k % 3;
    const std::int64_t gadgets = residue == 2 ? (k + 1) / 3 : residue == 1 ? (k + 2) / 3 : k / 3 + 1;
    const std::int64_t m = n / gadgets;  // floor(3n / (3*gadgets))
    if (m < 3) throw ValidationError("childs-r2 gadget size m < 3; increase n or decrease k");

    // One gadget worth of offsets, reused per copy so that corresponding
    // points differ only in the x translation.
    const std::vector<double> origin{0.0, 0.0};
    const auto ring = points_on_circle(origin, delta1, m - 1, PlaneBasis::coordinate(2, 0, 1));

    std::vector<double> coords;
    coords.reserve(static_cast<std::size_t>(gadgets * m * 2));
    for (std::int64_t g = 0; g < gadgets; ++g) {
        const double cx = static_cast<double>(g) * delta2;
        coords.push_back(cx);
        coords.push_back(0.0);
        for (const auto& p : ring) {
            coords.push_back(cx + p[0]);
            coords.push_back(p[1]);
        }
    }

    // Edge pattern of the gadget walk: circle point, center, fresh circle
    // point (delta1, delta1), then per gadget transition the jump to the
    // corresponding point (delta2) followed by the next center and a fresh
    // circle point, truncated on the final gadget by k mod 3.
    std::vector<double> seq;
    if (k >= 1) seq.push_back(delta1);
    if (k >= 2) seq.push_back(delta1);
    for (std::int64_t t = 1; t < gadgets; ++t) {
        seq.push_back(delta2);
        const bool last = t == gadgets - 1;
        if (!last) {
            seq.push_back(delta1);
            seq.push_back(delta1);
        } else if (residue == 1) {
            seq.push_back(delta1);
        } else if (residue == 2) {
            seq.push_back(delta1);
            seq.push_back(delta1);
        }
    }
    if (static_cast<int>(seq.size()) != k)
        throw ValidationError("internal error: childs-r2 walk length mismatch");

    // Free choices along the walk: m-1 for the opening circle point, m-2 for
    // every later fresh circle point.
    const std::int64_t free_steps = residue == 2 ? (k + 1) / 3 + 1 : residue == 1 ? (k + 2) / 3 : k / 3 + 1;
    BigInt lb = BigInt(m - 1) * int_pow(m - 2, free_steps - 1);

    return ConstructionOutput{PointSet(2, std::move(coords)), DistanceSequence{std::move(seq)},
                              std::move(lb), lower_exponent_r2(k).exponent};
}

ConstructionOutput purwin_r3(std::int64_t n, int k, double delta1, double delta2) {
    if (k < 2) throw ValidationError("purwin-r3 needs k >= 2");
    require_positive(delta1, "delta1");
    require_positive(delta2, "delta2");
    if (!(delta1 < delta2)) throw ValidationError("purwin-r3 requires 0 < delta1 < delta2");

    const bool even = k % 2 == 0;
    const std::int64_t gadgets = even ? k / 2 : (k - 1) / 2;
    // Odd k reserves one point of the budget for the lone trailing center.
    const std::int64_t m = even ? 2 * n / k : 2 * (n - 1) / (k - 1);
    if (m < 3) throw ValidationError("purwin-r3 gadget size m < 3; increase n or decrease k");

    // Plane spacing chosen so center-to-next-circle distances equal delta2.
    const double spacing = std::sqrt(delta2 * delta2 - delta1 * delta1);

    const std::vector<double> origin{0.0, 0.0, 0.0};
    const auto ring = points_on_circle(origin, delta1, m - 1, PlaneBasis::coordinate(3, 1, 2));

    std::vector<double> coords;
    for (std::int64_t g = 0; g < gadgets; ++g) {
        const double cx = static_cast<double>(g) * spacing;
        coords.push_back(cx);
        coords.push_back(0.0);
        coords.push_back(0.0);
        for (const auto& p : ring) {
            coords.push_back(cx);
            coords.push_back(p[1]);
            coords.push_back(p[2]);
        }
    }
    if (!even) {
        coords.push_back(static_cast<double>(gadgets) * spacing);
        coords.push_back(0.0);
        coords.push_back(0.0);
    }

    // Walk: circle point, own center, then per transition a delta2 jump to
    // the next circle and a delta1 drop to its center; one extra same-gadget
    // circle point closes the even case, a delta2 jump to the lone center
    // closes the odd case.
    std::vector<double> seq;
    seq.push_back(delta1);
    for (std::int64_t t = 1; t < gadgets; ++t) {
        seq.push_back(delta2);
        seq.push_back(delta1);
    }
    seq.push_back(delta1);
    if (!even) seq.push_back(delta2);
    if (static_cast<int>(seq.size()) != k)
        throw ValidationError("internal error: purwin-r3 walk length mismatch");

    const std::int64_t free_steps = even ? k / 2 + 1 : (k + 1) / 2;
    BigInt lb = int_pow(m - 2, free_steps);

    return ConstructionOutput{PointSet(3, std::move(coords)), DistanceSequence{std::move(seq)},
                              std::move(lb), lower_exponent_r3(k).exponent};
}

ConstructionOutput lenz_r4(std::int64_t n, int k, double delta) {
    if (k < 1) throw ValidationError("lenz-r4 needs k >= 1");
    require_positive(delta, "delta");
    if (n < 2 * (static_cast<std::int64_t>(k) + 1))
        throw ValidationError("lenz-r4 needs n >= 2(k+1)");

    const double rho = delta / std::sqrt(2.0);
    const std::int64_t na = n / 2;
    const std::int64_t nb = n - na;

    const std::vector<double> origin{0.0, 0.0, 0.0, 0.0};
    std::vector<double> coords;
    for (const auto& p : points_on_circle(origin, rho, na, PlaneBasis::coordinate(4, 0, 1)))
        append_point(coords, p);
    for (const auto& p : points_on_circle(origin, rho, nb, PlaneBasis::coordinate(4, 2, 3)))
        append_point(coords, p);

    // Chains that strictly alternate circles always exist; a chain starting
    // on circle A visits it ceil((k+1)/2) times and circle B floor((k+1)/2)
    // times, with distinct points inside each circle.
    const std::int64_t high = (static_cast<std::int64_t>(k) + 2) / 2;
    const std::int64_t low = (static_cast<std::int64_t>(k) + 1) / 2;
    BigInt lb = falling_factorial(na, high) * falling_factorial(nb, low) +
                falling_factorial(nb, high) * falling_factorial(na, low);

    return ConstructionOutput{PointSet(4, std::move(coords)),
                              DistanceSequence{std::vector<double>(static_cast<std::size_t>(k), delta)},
                              std::move(lb), Rational(k + 1)};
}

ConstructionOutput make_construction(Family family, std::int64_t n, int k, double delta1,
                                     std::optional<double> delta2) {
    switch (family) {
        case Family::hinge:
            if (k != -1 && k != 2) throw ValidationError("hinge is a 2-chain family; k must be 2");
            if (!delta2) throw ValidationError("hinge needs delta2");
            return hinge_extremal(n, delta1, *delta2);
        case Family::childs_r2:
            if (k < 0) throw ValidationError("childs-r2 needs k >= 0");
            if (!delta2) throw ValidationError("childs-r2 needs delta2");
            return childs_r2(n, k, delta1, *delta2);
        case Family::purwin_r3:
            if (!delta2) throw ValidationError("purwin-r3 needs delta2");
            return purwin_r3(n, k, delta1, *delta2);
        case Family::lenz_r4:
            if (delta2) throw ValidationError("lenz-r4 uses a single distance; drop delta2");
            return lenz_r4(n, k, delta1);
    }
    throw ValidationError("unknown construction family");
}

}  // namespace chains
