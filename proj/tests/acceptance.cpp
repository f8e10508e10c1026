// Acceptance suite: one pass/fail line per criterion, exit code counts the
// failures. Tolerances are pinned in the checks themselves.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "chains/bounds.hpp"
#include "chains/constructions.hpp"
#include "chains/counting.hpp"
#include "chains/experiments.hpp"
#include "testutil.hpp"

using namespace chains;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

struct Instance {
    PointSet ps;
    DistanceSequence ds;
};

Instance random_instance(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dn(2, 10);
    std::uniform_int_distribution<int> ddim(2, 3);
    std::uniform_int_distribution<int> dk(0, 3);
    PointSet ps = testutil::random_point_set(rng, dn(rng), ddim(rng));
    const auto realized = testutil::realized_distances(ps);
    DistanceSequence ds;
    const int k = dk(rng);
    for (int j = 0; j < k; ++j)
        ds.deltas.push_back(realized[static_cast<std::size_t>(rng() % realized.size())]);
    return Instance{std::move(ps), std::move(ds)};
}

void criterion_exponent_exactness() {
    require(upper_exponent_r2(3).exponent == Rational(13, 6), "upper exponent in the plane at k=3");
    require(gamma(5) == Rational(1, 12), "gamma(5)");
    const Rational u3 = upper_exponent_r3(3).exponent;
    require(u3 == Rational(590, 197), "upper exponent in space at k=3");
    require(Rational(29949, 10000) < u3 && u3 < Rational(29950, 10000),
            "590/197 sits between 2.9949 and 2.9950");
}

void criterion_recurrence_identity() {
    for (int k = 3; k <= 60; ++k)
        require(chain_exponent_recurrence(k) == upper_exponent_r2(k).exponent,
                "closed form vs recurrence at k=" + std::to_string(k));
}

void criterion_gamma_limit() {
    for (int k = 3; k <= 100; ++k)
        require(gamma(k) <= Rational(1, 12), "gamma cap at k=" + std::to_string(k));
    for (int k = 20; k <= 100; ++k)
        require((gamma(k) - Rational(4, 75)).abs() < Rational(1, 1000),
                "gamma limit at k=" + std::to_string(k));
}

void criterion_oracle_equivalence() {
    std::mt19937_64 rng(20260810);
    for (int t = 0; t < 200; ++t) {
        const Instance inst = random_instance(rng);
        require(count_chains(inst.ps, inst.ds) == count_chains_brute(inst.ps, inst.ds),
                "dfs vs brute on random instance " + std::to_string(t));
    }
}

void criterion_hinge() {
    const ConstructionOutput h = hinge_extremal(101, 1.0, 2.0);
    require(count_chains(h.points, h.deltas) >= 2500, "hinge count at n=101");
    const GrowthReport g = growth_experiment(Family::hinge, 2, {50, 100, 200, 400}, 1.0, 2.0);
    require(std::abs(g.fitted_slope - 2.0) <= 0.15,
            "hinge growth slope " + std::to_string(g.fitted_slope));
}

void criterion_childs() {
    const GrowthReport g = growth_experiment(Family::childs_r2, 3, {48, 96, 192, 384}, 1.0, 3.0);
    require(std::abs(g.fitted_slope - 2.0) <= 0.2,
            "childs-r2 k=3 growth slope " + std::to_string(g.fitted_slope));
    const ConstructionOutput c = childs_r2(20, 5, 1.0, 3.0);
    const ChainCount dfs = count_chains(c.points, c.deltas);
    const ChainCount brute = count_chains_brute(c.points, c.deltas);
    require(dfs == brute, "childs-r2 k=5 dfs vs brute");
    require(dfs >= 576, "childs-r2 k=5 count of at least 576 at n=20");
}

void criterion_purwin() {
    const GrowthReport g = growth_experiment(Family::purwin_r3, 4, {40, 80, 160}, 1.0, 2.0);
    require(std::abs(g.fitted_slope - 3.0) <= 0.2,
            "purwin-r3 k=4 growth slope " + std::to_string(g.fitted_slope));
    // gadget spacing taken from actual points: t^2 + d1^2 = d2^2
    const ConstructionOutput p = purwin_r3(24, 4, 3.0, 5.0);
    const double t = p.points.point(12)[0] - p.points.point(0)[0];
    require(std::abs(t * t + 9.0 - 25.0) <= 1e-12 * 25.0, "purwin-r3 plane spacing");
}

void criterion_lenz() {
    const ConstructionOutput l = lenz_r4(12, 2, 1.0);
    const ChainCount dfs = count_chains(l.points, l.deltas);
    require(dfs == 360, "lenz-r4 exact count at n=12, k=2");
    require(count_chains_brute(l.points, l.deltas) == 360, "lenz-r4 brute count");
}

void criterion_conjecture_consistency() {
    for (int k = 3; k <= 30; ++k)
        require(optimistic_exponent_r2(k, Rational(1)).exponent == lower_exponent_r2(k).exponent,
                "conditional bound at u=1 vs construction exponent, k=" + std::to_string(k));
}

void criterion_reversal_symmetry() {
    std::mt19937_64 rng(107);
    for (int t = 0; t < 100; ++t) {
        const Instance inst = random_instance(rng);
        require(count_chains(inst.ps, inst.ds) == count_chains(inst.ps, inst.ds.reversed()),
                "reversal symmetry on random instance " + std::to_string(t));
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria{
        {"exponent exactness (13/6, 1/12, 590/197)", criterion_exponent_exactness},
        {"recurrence matches closed form for 3 <= k <= 60", criterion_recurrence_identity},
        {"gamma cap 1/12 and limit 4/75", criterion_gamma_limit},
        {"dfs equals brute force on 200 random instances", criterion_oracle_equivalence},
        {"hinge: count >= 2500 at n=101, slope within 0.15 of 2", criterion_hinge},
        {"childs-r2: k=3 slope within 0.2 of 2, k=5 count >= 576", criterion_childs},
        {"purwin-r3: k=4 slope within 0.2 of 3, exact plane spacing", criterion_purwin},
        {"lenz-r4: exactly 360 chains at n=12, k=2", criterion_lenz},
        {"conditional bound at u=1 equals construction exponents", criterion_conjecture_consistency},
        {"reversal symmetry on 100 random instances", criterion_reversal_symmetry},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].run();
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::printf("PASS  %2zu/%zu  %s  (%.2fs)\n", i + 1, criteria.size(), criteria[i].name,
                        secs);
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL  %2zu/%zu  %s: %s\n", i + 1, criteria.size(), criteria[i].name,
                        e.what());
        }
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    return failures;
}
