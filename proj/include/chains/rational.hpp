#pragma once

#include <compare>
#include <string>
#include <utility>

#include "chains/bigint.hpp"
#include "chains/errors.hpp"

namespace chains {

/// Exact rational, always in lowest terms with a positive denominator.
/// Exponent identities are asserted with operator== on this type, so no
/// operation here may round.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw ValidationError("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const BigInt lhs = num_ * o.den_;
        const BigInt rhs = o.num_ * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    /// Accepts "p" or "p/q" with optional leading minus on p.
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(parse_int(text), BigInt(1));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

private:
    static BigInt parse_int(const std::string& s) {
        std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw ValidationError("not a rational: '" + s + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw ValidationError("not a rational: '" + s + "'");
        return BigInt(s);
    }

    void normalize() {
        if (den_ == 0) throw ValidationError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        const BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    BigInt num_;
    BigInt den_;  // > 0
};

}  // namespace chains
