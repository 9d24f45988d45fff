#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

#include "pentatile/rational.hpp"

namespace pentatile {

/// Element a + b*sqrt(5) of the quadratic field Q(sqrt 5), with rational
/// a, b. The golden ratio tau = (1+sqrt5)/2 and its conjugate
/// sigma = (1-sqrt5)/2 live here; tau*sigma = -1 and tau + sigma = 1 hold
/// exactly. Comparisons and sign queries are exact.
class GoldenNumber {
public:
    constexpr GoldenNumber() = default;
    constexpr GoldenNumber(long long n) : a_(n) {}
    GoldenNumber(const Rational& a) : a_(a) {}
    GoldenNumber(const Rational& a, const Rational& b) : a_(a), b_(b) {}

    static GoldenNumber tau()   { return {Rational(1, 2), Rational(1, 2)}; }
    static GoldenNumber sigma() { return {Rational(1, 2), Rational(-1, 2)}; }
    static GoldenNumber sqrt5() { return {Rational(0), Rational(1)}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// Field conjugate sqrt5 -> -sqrt5 (swaps tau and sigma).
    GoldenNumber conj() const { return {a_, -b_}; }

    GoldenNumber operator-() const { return {-a_, -b_}; }
    GoldenNumber operator+(const GoldenNumber& o) const { return {a_ + o.a_, b_ + o.b_}; }
    GoldenNumber operator-(const GoldenNumber& o) const { return {a_ - o.a_, b_ - o.b_}; }
    GoldenNumber operator*(const GoldenNumber& o) const {
        return {a_ * o.a_ + 5 * (b_ * o.b_), a_ * o.b_ + b_ * o.a_};
    }
    GoldenNumber operator/(const GoldenNumber& o) const {
        // 1/(a+b sqrt5) = (a - b sqrt5)/(a^2 - 5 b^2)
        Rational n = o.a_ * o.a_ - 5 * (o.b_ * o.b_);
        if (n.is_zero()) throw std::domain_error("GoldenNumber: division by zero");
        GoldenNumber num = *this * o.conj();
        return {num.a_ / n, num.b_ / n};
    }

    GoldenNumber& operator+=(const GoldenNumber& o) { return *this = *this + o; }
    GoldenNumber& operator-=(const GoldenNumber& o) { return *this = *this - o; }
    GoldenNumber& operator*=(const GoldenNumber& o) { return *this = *this * o; }

    bool operator==(const GoldenNumber& o) const { return a_ == o.a_ && b_ == o.b_; }

    /// Exact sign. When a and b disagree in sign the decision reduces to
    /// comparing a^2 against 5 b^2.
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rational a2 = a_ * a_;
        Rational b25 = 5 * (b_ * b_);
        auto c = a2 <=> b25;
        if (c == std::strong_ordering::equal)
            throw std::logic_error("GoldenNumber: a^2 == 5 b^2 with b != 0");
        return (c == std::strong_ordering::greater) ? sa : sb;
    }

    bool operator<(const GoldenNumber& o) const { return (*this - o).sign() < 0; }
    bool operator>(const GoldenNumber& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const GoldenNumber& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const GoldenNumber& o) const { return (*this - o).sign() >= 0; }

    double to_double() const {
        return a_.to_double() + b_.to_double() * std::sqrt(5.0);
    }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s = a_.is_zero() ? "" : a_.str();
        if (!s.empty() && b_.sign() > 0) s += "+";
        s += b_.str() + "*sqrt5";
        return s;
    }

private:
    Rational a_;
    Rational b_;
};

inline GoldenNumber operator*(const Rational& r, const GoldenNumber& g) {
    return GoldenNumber(r) * g;
}

} // namespace pentatile
