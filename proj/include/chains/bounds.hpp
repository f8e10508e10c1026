#pragma once

#include "chains/rational.hpp"

namespace chains {

enum class BoundSide { lower, upper };

/// An asymptotic exponent bound n^exponent, with flags for the two
/// qualifiers that cannot be folded into an exact rational: an additive
/// epsilon in the exponent and a polylog/loglog factor in front.
struct ExponentBound {
    Rational exponent;
    BoundSide side = BoundSide::upper;
    bool has_epsilon = false;
    bool has_log_factor = false;
};

/// Oscillating correction term of the planar upper-bound exponent, by k mod 4
/// with (-1/4) raised to floor(k/4). Exact rational; tends to 4/75 and never
/// exceeds 1/12 for k >= 3. Requires k >= 3.
Rational gamma(int k);

/// Planar upper-bound exponent: 1 for k=0, 4/3 for k=1, 2 for k=2, and
/// 2k/5 + 1 + gamma(k) for k >= 3.
ExponentBound upper_exponent_r2(int k);

/// The same exponent family obtained by iterating
///   a_k = a_{k-3}/2 + a_{k-2}/2 + 1,  a_0 = 1, a_1 = 4/3, a_2 = 2.
/// Agrees with upper_exponent_r2 for every k; the identity is tested rather
/// than assumed. Requires k >= 0.
Rational chain_exponent_recurrence(int k);

/// Planar lower-bound exponent by k mod 3: k/3+1, (k+2)/3, (k+1)/3+1.
/// Requires k >= 0.
ExponentBound lower_exponent_r2(int k);

/// Planar upper bound conditioned on a unit-distance exponent u_exp, with
/// u(n) modeled as n^u_exp: by k mod 3, 1 + u*k/3, u*(k+2)/3, 2 + u*(k-2)/3.
/// u_exp = 1 reproduces lower_exponent_r2 exactly. Requires k >= 3 and
/// 1 <= u_exp <= 4/3.
ExponentBound optimistic_exponent_r2(int k, const Rational& u_exp = Rational(4, 3));

/// Spatial upper-bound exponent: 295/197 (+eps) for k=1, 2 for k=2,
/// 590/197 (+eps) for k=3, then by k mod 3: 2k/3+1, 2k/3+23/33 (+eps),
/// 2k/3+2/3. Requires k >= 1.
ExponentBound upper_exponent_r3(int k);

/// Spatial lower-bound exponent: 4/3 with a loglog factor for k=1, then
/// (k+1)/2 for odd k and k/2+1 for even k. Requires k >= 1.
ExponentBound lower_exponent_r3(int k);

/// Incidence bound evaluators with all constants fixed at 1. They exist for
/// shape comparison and reporting, not as certified bounds on empirical
/// counts.
double incidence_bound_circles(double m, double n, double eps);  // m^(9/11+eps) n^(6/11) + m^(2/3) n^(2/3) + m + n
double incidence_bound_spheres(double m, double n);              // m^(3/4) n^(3/4) + m + n
double rich_points_bound_spheres(double n, double r);            // n^3/r^4 + n/r
double rich_points_bound_circles(double n, double r);            // n^2/r^3 + n/r

}  // namespace chains
