#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "pentatile/golden.hpp"
#include "pentatile/rational.hpp"

namespace pentatile {

/// Length of one pentagrid basis vector after projection to either
/// invariant plane.
inline double basis_plane_length() { return std::sqrt(0.4); }

inline double sin36() { return std::sqrt((2.0 + (1.0 - std::sqrt(5.0)) / 2.0)) / 2.0; }

enum class Plane { Parallel, Perpendicular };

/// Point of the 4D lattice span written over the five pentagrid vectors
/// k_1..k_5 (unit vectors of the 5-cell, k_1+...+k_5 = 0). A tuple is
/// stored canonically with its minimum component equal to zero, which
/// makes the representation unique: adding any multiple of (1,1,1,1,1)
/// does not change the point.
class Coord5 {
public:
    Coord5() = default;

    explicit Coord5(std::array<Rational, 5> raw) : c_(std::move(raw)) { canonicalize(); }

    Coord5(Rational c1, Rational c2, Rational c3, Rational c4, Rational c5)
        : Coord5(std::array<Rational, 5>{std::move(c1), std::move(c2), std::move(c3),
                                         std::move(c4), std::move(c5)}) {}

    /// Pentagrid basis vector k_i, i in 1..5.
    static Coord5 k(int i) {
        check_index(i);
        std::array<Rational, 5> raw{};
        raw[static_cast<std::size_t>(i - 1)] = Rational(1);
        return Coord5(std::move(raw));
    }

    /// Root k_i - k_j.
    static Coord5 root(int i, int j) { return k(i) - k(j); }

    static Coord5 zero() { return Coord5(); }

    const std::array<Rational, 5>& tuple() const { return c_; }
    const Rational& operator[](std::size_t idx0) const { return c_[idx0]; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
    }

    /// All canonical components integral (weight-lattice membership).
    bool is_integral() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_integer(); });
    }

    /// Root-lattice membership: integral with component sum divisible by 5.
    bool in_root_lattice() const {
        if (!is_integral()) return false;
        long long s = 0;
        for (const auto& r : c_) s += r.num();
        return s % 5 == 0;
    }

    Coord5 operator+(const Coord5& o) const {
        std::array<Rational, 5> raw;
        for (std::size_t i = 0; i < 5; ++i) raw[i] = c_[i] + o.c_[i];
        return Coord5(std::move(raw));
    }
    Coord5 operator-(const Coord5& o) const {
        std::array<Rational, 5> raw;
        for (std::size_t i = 0; i < 5; ++i) raw[i] = c_[i] - o.c_[i];
        return Coord5(std::move(raw));
    }
    Coord5 operator-() const {
        std::array<Rational, 5> raw;
        for (std::size_t i = 0; i < 5; ++i) raw[i] = -c_[i];
        return Coord5(std::move(raw));
    }
    Coord5 operator*(const Rational& s) const {
        std::array<Rational, 5> raw;
        for (std::size_t i = 0; i < 5; ++i) raw[i] = c_[i] * s;
        return Coord5(std::move(raw));
    }

    bool operator==(const Coord5& o) const { return c_ == o.c_; }

    std::strong_ordering operator<=>(const Coord5& o) const {
        for (std::size_t i = 0; i < 5; ++i) {
            auto c = c_[i] <=> o.c_[i];
            if (c != std::strong_ordering::equal) return c;
        }
        return std::strong_ordering::equal;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < 5; ++i) {
            if (i) s += ",";
            s += c_[i].str();
        }
        return s + ")";
    }

private:
    static void check_index(int i) {
        if (i < 1 || i > 5) throw std::out_of_range("Coord5: index must be in 1..5");
    }

    void canonicalize() {
        Rational m = c_[0];
        for (std::size_t i = 1; i < 5; ++i) m = std::min(m, c_[i]);
        if (!m.is_zero())
            for (auto& v : c_) v -= m;
    }

    std::array<Rational, 5> c_{};
};

/// Unique canonical representative of a raw 5-tuple.
inline Coord5 canonical(const std::array<Rational, 5>& raw) { return Coord5(raw); }

/// 4D inner product induced by (k_i,k_i) = 4/5, (k_i,k_j) = -1/5:
/// sum_i v_i w_i - (1/5)(sum v)(sum w). Representative independent.
inline Rational inner4(const Coord5& v, const Coord5& w) {
    Rational dot, sv, sw;
    for (std::size_t i = 0; i < 5; ++i) {
        dot += v[i] * w[i];
        sv += v[i];
        sw += w[i];
    }
    return dot - sv * sw * Rational(1, 5);
}

namespace detail {

// Exact plane coordinates. The parallel image of k_j is
// sqrt(2/5)*(cos 72j, sin 72j) and the perpendicular image uses the
// doubled angle. With cos36 = tau/2, cos72 = -sigma/2 and
// sin72 = tau*sin36 everything lands in Q(sqrt5) once the unit factors
// sqrt(2/5) (x) and sqrt(2/5)*sin36 (y) are pulled out.
struct PlaneTables {
    std::array<GoldenNumber, 5> xpar, ypar, xperp, yperp;
    PlaneTables() {
        const GoldenNumber tau = GoldenNumber::tau();
        const GoldenNumber sigma = GoldenNumber::sigma();
        const GoldenNumber half(Rational(1, 2));
        const GoldenNumber one(1);
        // j = 1..5 at slots 0..4
        xpar = {-(sigma * half), -(tau * half), -(tau * half), -(sigma * half), one};
        ypar = {tau, one, -one, -tau, GoldenNumber()};
        xperp = {-(tau * half), -(sigma * half), -(sigma * half), -(tau * half), one};
        yperp = {one, -tau, tau, -one, GoldenNumber()};
    }
};

inline const PlaneTables& plane_tables() {
    static const PlaneTables t;
    return t;
}

} // namespace detail

/// Exact plane coordinates of v: x in units of sqrt(2/5), y in units of
/// sqrt(2/5)*sin36.
struct PlanePoint {
    GoldenNumber x, y;

    PlanePoint operator-(const PlanePoint& o) const { return {x - o.x, y - o.y}; }
    PlanePoint operator+(const PlanePoint& o) const { return {x + o.x, y + o.y}; }
    bool operator==(const PlanePoint& o) const { return x == o.x && y == o.y; }
};

inline PlanePoint plane_point(const Coord5& v, Plane which = Plane::Parallel) {
    const auto& t = detail::plane_tables();
    const auto& xs = which == Plane::Parallel ? t.xpar : t.xperp;
    const auto& ys = which == Plane::Parallel ? t.ypar : t.yperp;
    PlanePoint p;
    for (std::size_t i = 0; i < 5; ++i) {
        if (v[i].is_zero()) continue;
        p.x += v[i] * xs[i];
        p.y += v[i] * ys[i];
    }
    return p;
}

/// Signed cross product of the plane images of u and v, exactly, in
/// units of (2/5)*sin36 (thin root rhombus = 1, thick = tau). Zero iff
/// the images are parallel.
inline GoldenNumber cross_par(const Coord5& u, const Coord5& v) {
    PlanePoint a = plane_point(u), b = plane_point(v);
    return a.x * b.y - a.y * b.x;
}

inline GoldenNumber cross_par(const PlanePoint& a, const PlanePoint& b) {
    return a.x * b.y - a.y * b.x;
}

/// |v_par|^2 as an exact golden number. The cross terms carry
/// cos72 = -sigma/2 and cos144 = -tau/2; y picks up sin36^2 = (2+sigma)/4.
/// sin36^2 = (2+sigma)/4, exactly.
inline const GoldenNumber& sin36_squared() {
    static const GoldenNumber s =
        (GoldenNumber(2) + GoldenNumber::sigma()) * GoldenNumber(Rational(1, 4));
    return s;
}

inline GoldenNumber plane_norm2(const Coord5& v, Plane which = Plane::Parallel) {
    PlanePoint p = plane_point(v, which);
    return GoldenNumber(Rational(2, 5)) * (p.x * p.x + sin36_squared() * (p.y * p.y));
}

inline GoldenNumber plane_norm2_perp(const Coord5& v) {
    return plane_norm2(v, Plane::Perpendicular);
}

/// Exact inner product of the perpendicular images. Used as the generic
/// height functional for envelope selection; probe arguments are plain
/// lattice vectors so every height is a golden number.
inline GoldenNumber perp_dot(const Coord5& u, const Coord5& v) {
    PlanePoint a = plane_point(u, Plane::Perpendicular);
    PlanePoint b = plane_point(v, Plane::Perpendicular);
    return GoldenNumber(Rational(2, 5)) * (a.x * b.x + sin36_squared() * (a.y * b.y));
}

/// Numeric image of v in the chosen plane.
inline std::array<double, 2> embed(const Coord5& v, Plane which = Plane::Parallel) {
    PlanePoint p = plane_point(v, which);
    double f = basis_plane_length();
    return {f * p.x.to_double(), f * sin36() * p.y.to_double()};
}

/// Numeric 4D image (x_par, y_par, x_perp, y_perp).
inline std::array<double, 4> embed4(const Coord5& v) {
    auto par = embed(v, Plane::Parallel);
    auto perp = embed(v, Plane::Perpendicular);
    return {par[0], par[1], perp[0], perp[1]};
}

/// Lattice vector whose parallel image is exactly tau times the parallel
/// image of v, via tau*zeta^j = -(zeta^{j+2} + zeta^{j+3}):
/// c'_m = -(c_{m-2} + c_{m-3}), indices mod 5.
inline Coord5 tau_scale_par(const Coord5& v) {
    std::array<Rational, 5> out;
    for (std::size_t m = 0; m < 5; ++m)
        out[m] = -(v[(m + 3) % 5] + v[(m + 2) % 5]);
    return Coord5(std::move(out));
}

} // namespace pentatile
