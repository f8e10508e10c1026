#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chains/bounds.hpp"
#include "chains/constructions.hpp"

namespace chains {

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

/// Least-squares line through (ln n, ln count). Requires at least two pairs
/// and every count >= 1.
FitResult fit_loglog_slope(const std::vector<std::pair<std::int64_t, BigInt>>& pairs);

/// One growth run of a construction family over a size ladder.
struct GrowthReport {
    std::string family;
    int k = 0;
    std::vector<std::int64_t> sizes;
    std::vector<BigInt> counts;
    std::vector<BigInt> predicted_lbs;
    double fitted_slope = 0.0;
    double fit_intercept = 0.0;
    double fit_r2 = 0.0;
    Rational predicted_exponent;
    DistanceSequence deltas_used;
};

/// Generates the family at every size, counts chains exactly (DFS path), and
/// fits the log-log slope. Sizes must be strictly increasing and at least
/// three. Deterministic.
GrowthReport growth_experiment(Family family, int k, const std::vector<std::int64_t>& sizes,
                               double delta1, std::optional<double> delta2,
                               const TolerancePolicy& tol = {});

struct RichReportRow {
    std::int64_t r = 0;
    std::int64_t empirical = 0;  // points with >= r neighbors at distance delta
    double bound = 0.0;          // dual incidence bound, constants at 1
};

/// Empirical rich-point counts against the matching dual bound: circles in
/// dimension 2, same-radius spheres in dimension 3. Diagnostic only, no
/// pass/fail judgement. Dimension 4 has no bound housed here and is an error.
struct RichReport {
    int dim = 0;
    std::int64_t n = 0;
    double delta = 0.0;
    std::vector<RichReportRow> rows;
};

RichReport rich_report(const PointSet& ps, double delta, const std::vector<std::int64_t>& r_values,
                       const TolerancePolicy& tol = {});

/// One table row per k: lower and upper exponents, plus the conditional
/// (optimistic) column in dimension 2 for k >= 3.
struct BoundsRow {
    int k = 0;
    std::optional<ExponentBound> lower;
    std::optional<ExponentBound> optimistic;
    std::optional<ExponentBound> upper;
};

std::vector<BoundsRow> bounds_table(int k_min, int k_max, int dim,
                                    const Rational& u_exp = Rational(4, 3));

}  // namespace chains
