#include "chains/experiments.hpp"

#include <algorithm>
#include <cmath>

namespace chains {

FitResult fit_loglog_slope(const std::vector<std::pair<std::int64_t, BigInt>>& pairs) {
    if (pairs.size() < 2) throw ValidationError("log-log fit needs at least two points");
    std::vector<double> xs, ys;
    xs.reserve(pairs.size());
    ys.reserve(pairs.size());
    for (const auto& [n, count] : pairs) {
        if (n < 1) throw ValidationError("log-log fit needs sizes >= 1");
        if (count < 1) throw ValidationError("log-log fit needs counts >= 1 (a zero count has no log)");
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(count.convert_to<double>()));
    }

    const double np = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= np;
    my /= np;

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0) throw ValidationError("log-log fit needs at least two distinct sizes");

    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ssr = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ssr += e * e;
    }
    fit.r2 = syy == 0.0 ? 1.0 : 1.0 - ssr / syy;
    return fit;
}

GrowthReport growth_experiment(Family family, int k, const std::vector<std::int64_t>& sizes,
                               double delta1, std::optional<double> delta2,
                               const TolerancePolicy& tol) {
    if (sizes.size() < 3) throw ValidationError("growth experiment needs at least three sizes");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1]) throw ValidationError("sizes must be strictly increasing");

    GrowthReport report;
    report.family = family_name(family);
    report.sizes = sizes;

    std::vector<std::pair<std::int64_t, BigInt>> points;
    for (const std::int64_t n : sizes) {
        ConstructionOutput out = make_construction(family, n, k, delta1, delta2);
        const ChainCount count = count_chains(out.points, out.deltas, tol);
        points.emplace_back(n, count);
        report.counts.push_back(count);
        report.predicted_lbs.push_back(out.predicted_lb);
        report.predicted_exponent = out.predicted_exponent;
        report.deltas_used = out.deltas;
        report.k = out.deltas.k();
    }

    const FitResult fit = fit_loglog_slope(points);
    report.fitted_slope = fit.slope;
    report.fit_intercept = fit.intercept;
    report.fit_r2 = fit.r2;
    return report;
}

RichReport rich_report(const PointSet& ps, double delta, const std::vector<std::int64_t>& r_values,
                       const TolerancePolicy& tol) {
    if (r_values.empty()) throw ValidationError("rich report needs at least one r value");
    for (const std::int64_t r : r_values)
        if (r < 2) throw ValidationError("rich-point thresholds must be >= 2");
    if (ps.dim() == 4)
        throw ValidationError("rich report covers dimensions 2 and 3 only (no dual bound in R^4)");

    const RichHistogram hist = rich_point_histogram(ps, delta, tol);
    RichReport report;
    report.dim = ps.dim();
    report.n = ps.size();
    report.delta = delta;
    for (const std::int64_t r : r_values) {
        const double bound = ps.dim() == 2
                                 ? rich_points_bound_circles(static_cast<double>(ps.size()),
                                                             static_cast<double>(r))
                                 : rich_points_bound_spheres(static_cast<double>(ps.size()),
                                                             static_cast<double>(r));
        report.rows.push_back(RichReportRow{r, hist.rich_count(r), bound});
    }
    return report;
}

std::vector<BoundsRow> bounds_table(int k_min, int k_max, int dim, const Rational& u_exp) {
    if (dim != 2 && dim != 3) throw ValidationError("bounds table covers dimensions 2 and 3");
    const int lo = dim == 2 ? 0 : 1;
    if (k_min < lo) throw ValidationError("k must be >= " + std::to_string(lo) +
                                          " in dimension " + std::to_string(dim));
    if (k_max < k_min) throw ValidationError("kmax must be >= k");

    std::vector<BoundsRow> rows;
    for (int k = k_min; k <= k_max; ++k) {
        BoundsRow row;
        row.k = k;
        if (dim == 2) {
            row.lower = lower_exponent_r2(k);
            if (k >= 3) row.optimistic = optimistic_exponent_r2(k, u_exp);
            row.upper = upper_exponent_r2(k);
        } else {
            row.lower = lower_exponent_r3(k);
            row.upper = upper_exponent_r3(k);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace chains
