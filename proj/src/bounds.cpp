#include "chains/bounds.hpp"

#include <cmath>

namespace chains {

namespace {

ExponentBound upper(Rational e, bool eps = false, bool log = false) {
    return ExponentBound{std::move(e), BoundSide::upper, eps, log};
}

ExponentBound lower(Rational e, bool eps = false, bool log = false) {
    return ExponentBound{std::move(e), BoundSide::lower, eps, log};
}

}  // namespace

Rational gamma(int k) {
    if (k < 3) throw ValidationError("gamma is defined for k >= 3");
    const int j = k / 4;
    const BigInt four_j = boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(j));
    const int sign = j % 2 == 0 ? 1 : -1;  // (-1/4)^j = sign / 4^j
    switch (k % 4) {
        case 0: return Rational(4 * four_j - 4 * sign, 75 * four_j);
        case 1: return Rational(4 * four_j - 9 * sign, 75 * four_j);
        case 2: return Rational(4 * four_j + 11 * sign, 75 * four_j);
        default: return Rational(8 * four_j - 13 * sign, 150 * four_j);  // coefficient 13/2
    }
}

ExponentBound upper_exponent_r2(int k) {
    if (k < 0) throw ValidationError("upper_exponent_r2 needs k >= 0");
    if (k == 0) return upper(Rational(1));
    if (k == 1) return upper(Rational(4, 3));
    if (k == 2) return upper(Rational(2));
    return upper(Rational(2 * k, 5) + Rational(1) + gamma(k));
}

Rational chain_exponent_recurrence(int k) {
    if (k < 0) throw ValidationError("chain_exponent_recurrence needs k >= 0");
    Rational a0(1), a1(4, 3), a2(2);
    if (k == 0) return a0;
    if (k == 1) return a1;
    if (k == 2) return a2;
    for (int i = 3; i <= k; ++i) {
        Rational next = (a0 + a1) / Rational(2) + Rational(1);
        a0 = std::move(a1);
        a1 = std::move(a2);
        a2 = std::move(next);
    }
    return a2;
}

ExponentBound lower_exponent_r2(int k) {
    if (k < 0) throw ValidationError("lower_exponent_r2 needs k >= 0");
    switch (k % 3) {
        case 0: return lower(Rational(k, 3) + Rational(1));
        case 1: return lower(Rational(k + 2, 3));
        default: return lower(Rational(k + 1, 3) + Rational(1));
    }
}

ExponentBound optimistic_exponent_r2(int k, const Rational& u_exp) {
    if (k < 3) throw ValidationError("optimistic_exponent_r2 needs k >= 3");
    if (u_exp < Rational(1) || u_exp > Rational(4, 3))
        throw ValidationError("u_exp must lie in [1, 4/3]");
    switch (k % 3) {
        case 0: return upper(Rational(1) + u_exp * Rational(k, 3));
        case 1: return upper(u_exp * Rational(k + 2, 3));
        default: return upper(Rational(2) + u_exp * Rational(k - 2, 3));
    }
}

ExponentBound upper_exponent_r3(int k) {
    if (k < 1) throw ValidationError("upper_exponent_r3 needs k >= 1");
    if (k == 1) return upper(Rational(295, 197), true);
    if (k == 2) return upper(Rational(2));
    if (k == 3) return upper(Rational(590, 197), true);  // squares the k=1 bound; beats 2k/3+1 = 3
    switch (k % 3) {
        case 0: return upper(Rational(2 * k, 3) + Rational(1));
        case 1: return upper(Rational(2 * k, 3) + Rational(23, 33), true);
        default: return upper(Rational(2 * k, 3) + Rational(2, 3));
    }
}

ExponentBound lower_exponent_r3(int k) {
    if (k < 1) throw ValidationError("lower_exponent_r3 needs k >= 1");
    if (k == 1) return lower(Rational(4, 3), false, true);
    if (k % 2 == 1) return lower(Rational(k + 1, 2));
    return lower(Rational(k, 2) + Rational(1));
}

double incidence_bound_circles(double m, double n, double eps) {
    return std::pow(m, 9.0 / 11.0 + eps) * std::pow(n, 6.0 / 11.0) +
           std::pow(m, 2.0 / 3.0) * std::pow(n, 2.0 / 3.0) + m + n;
}

double incidence_bound_spheres(double m, double n) {
    return std::pow(m, 3.0 / 4.0) * std::pow(n, 3.0 / 4.0) + m + n;
}

double rich_points_bound_spheres(double n, double r) {
    return n * n * n / (r * r * r * r) + n / r;
}

double rich_points_bound_circles(double n, double r) {
    return n * n / (r * r * r) + n / r;
}

}  // namespace chains
