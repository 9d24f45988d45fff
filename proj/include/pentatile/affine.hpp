#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentatile/coord5.hpp"
#include "pentatile/root_data.hpp"

namespace pentatile {

struct NotARoot : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotFivefoldCenter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPlaneCompatible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Permutation of the five pentagrid directions; map(i) is the image of
/// position i, both 1-based.
class Perm {
public:
    Perm() : map_{1, 2, 3, 4, 5} {}
    explicit Perm(std::array<int, 5> images) : map_(images) { validate(); }

    static Perm identity() { return Perm(); }
    static Perm transposition(int i, int j) {
        std::array<int, 5> m{1, 2, 3, 4, 5};
        std::swap(m[static_cast<std::size_t>(i - 1)], m[static_cast<std::size_t>(j - 1)]);
        return Perm(m);
    }
    /// k_1 -> k_2 -> ... -> k_5 -> k_1
    static Perm five_cycle() { return Perm({2, 3, 4, 5, 1}); }

    int operator()(int i) const { return map_[static_cast<std::size_t>(i - 1)]; }

    /// this after other (other applied first).
    Perm compose(const Perm& other) const {
        std::array<int, 5> m;
        for (int i = 1; i <= 5; ++i)
            m[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
        return Perm(m);
    }

    Perm inverse() const {
        std::array<int, 5> m{};
        for (int i = 1; i <= 5; ++i) m[static_cast<std::size_t>((*this)(i)-1)] = i;
        return Perm(m);
    }

    /// Push coefficients along: value at position i moves to position map(i).
    Coord5 apply(const Coord5& v) const {
        std::array<Rational, 5> out{};
        for (std::size_t i = 0; i < 5; ++i)
            out[static_cast<std::size_t>(map_[i] - 1)] = v[i];
        return Coord5(std::move(out));
    }

    bool operator==(const Perm& o) const { return map_ == o.map_; }

    /// Writes the permutation as j -> s*j + c mod 5 when possible; only
    /// such permutations act as isometries of each invariant plane.
    std::optional<std::pair<int, int>> affine_form() const {
        for (int s : {1, -1}) {
            int c = ((*this)(5) - s * 5) % 5;
            c = (c % 5 + 5) % 5;
            bool ok = true;
            for (int j = 1; j <= 5 && ok; ++j) {
                int expect = ((s * j + c) % 5 + 5) % 5;
                if (expect == 0) expect = 5;
                ok = (*this)(j) == expect;
            }
            if (ok) return std::make_pair(s, c);
        }
        return std::nullopt;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 1; i <= 5; ++i) {
            if (i > 1) s += " ";
            s += std::to_string((*this)(i));
        }
        return s + "]";
    }

private:
    void validate() const {
        std::array<bool, 5> seen{};
        for (int v : map_) {
            if (v < 1 || v > 5 || seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("Perm: not a permutation of 1..5");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    std::array<int, 5> map_;
};

/// Affine group element v -> eps * pi(v) + t with eps = +-1 (the
/// diagram-flip factor), pi a permutation of the pentagrid directions
/// and t an exact translation. Composition and inversion are exact.
class AffineElement {
public:
    AffineElement() : eps_(1) {}
    AffineElement(int eps, Perm perm, Coord5 trans)
        : eps_(eps), perm_(perm), trans_(std::move(trans)) {
        if (eps_ != 1 && eps_ != -1)
            throw std::invalid_argument("AffineElement: eps must be +-1");
    }

    static AffineElement identity() { return AffineElement(); }
    static AffineElement translation(const Coord5& t) {
        return AffineElement(1, Perm::identity(), t);
    }

    int eps() const { return eps_; }
    const Perm& perm() const { return perm_; }
    const Coord5& trans() const { return trans_; }

    Coord5 apply(const Coord5& v) const {
        Coord5 lin = perm_.apply(v);
        if (eps_ < 0) lin = -lin;
        return lin + trans_;
    }

    /// this after other: (e1*e2)(v) = e1(e2(v)).
    AffineElement compose(const AffineElement& other) const {
        Coord5 t = perm_.apply(other.trans_);
        if (eps_ < 0) t = -t;
        return AffineElement(eps_ * other.eps_, perm_.compose(other.perm_), t + trans_);
    }

    AffineElement inverse() const {
        Perm pinv = perm_.inverse();
        Coord5 t = pinv.apply(trans_);
        if (eps_ < 0) t = -t;
        return AffineElement(eps_, pinv, -t);
    }

    bool operator==(const AffineElement& o) const {
        return eps_ == o.eps_ && perm_ == o.perm_ && trans_ == o.trans_;
    }

    bool is_identity() const { return *this == AffineElement(); }

    /// Present iff the element restricts to an isometry of the Coxeter
    /// plane; (s, c) describe the index action j -> s*j + c.
    std::optional<std::pair<int, int>> plane_form() const { return perm_.affine_form(); }
    bool plane_compatible() const { return plane_form().has_value(); }

    std::string str() const {
        return std::string(eps_ < 0 ? "-" : "+") + perm_.str() + "+" + trans_.str();
    }

private:
    int eps_;
    Perm perm_;
    Coord5 trans_;
};

inline AffineElement compose(const AffineElement& a, const AffineElement& b) {
    return a.compose(b);
}
inline AffineElement inverse(const AffineElement& e) { return e.inverse(); }
inline Coord5 apply(const AffineElement& e, const Coord5& v) { return e.apply(v); }

/// Affine reflection in the hyperplane (lambda, root) = n, for a root
/// k_i - k_j. Satisfies r(lambda) = lambda - ((lambda,root) - n)*root.
inline AffineElement reflection(const Coord5& root, long long n) {
    int two_at = 0, zero_at = 0;
    for (int i = 1; i <= 5; ++i) {
        const Rational& c = root[static_cast<std::size_t>(i - 1)];
        if (c == Rational(2)) {
            if (two_at) two_at = -1;
            else two_at = i;
        } else if (c.is_zero()) {
            if (zero_at) zero_at = -1;
            else zero_at = i;
        } else if (!(c == Rational(1))) {
            two_at = -1;
        }
    }
    if (two_at <= 0 || zero_at <= 0)
        throw NotARoot("reflection: root must be k_i - k_j, got " + root.str());
    return AffineElement(1, Perm::transposition(two_at, zero_at), root * Rational(n));
}

inline AffineElement reflection(int i, int j, long long n) {
    return reflection(Coord5::root(i, j), n);
}

/// Paired affine reflections generating the dihedral plane symmetry:
/// R1 = r(k1-k2, n1) r(k5-k3, n3), R2 = r(k2-k5, n2) r(k3-k4, n4).
/// Each squares to the identity and (R1 R2)^5 = 1.
inline std::pair<AffineElement, AffineElement> h2_generators(long long n1, long long n2,
                                                             long long n3, long long n4) {
    const auto& fr = root_data().folded_roots;
    AffineElement r1 = compose(reflection(fr[0], n1), reflection(fr[2], n3));
    AffineElement r2 = compose(reflection(fr[1], n2), reflection(fr[3], n4));
    return {r1, r2};
}

/// Order-5 rotation R1*R2; its unique fixed point is fixed_point(n1..n4).
inline AffineElement coxeter(long long n1, long long n2, long long n3, long long n4) {
    auto [r1, r2] = h2_generators(n1, n2, n3, n4);
    return compose(r1, r2);
}

/// The point (n1+n2)k1 + n2 k2 - n3 k3 - (n3+n4)k4 fixed by all four
/// paired reflections with these offsets.
inline Coord5 fixed_point(long long n1, long long n2, long long n3, long long n4) {
    return Coord5(Rational(n1 + n2), Rational(n2), Rational(-n3), Rational(-(n3 + n4)),
                  Rational(0));
}

/// Dihedral stabilizer of a five-fold center: the five rotations and
/// five mirrors fixing the point, each solved as t = p - g(p).
struct Stabilizer {
    Coord5 center;
    std::vector<AffineElement> elements;
};

namespace detail {

inline AffineElement solve_fixing(int eps, const Perm& perm, const Coord5& p) {
    Coord5 gp = perm.apply(p);
    if (eps < 0) gp = -gp;
    Coord5 t = p - gp;
    if (!t.is_integral())
        throw NotFivefoldCenter("stabilizer: " + p.str() +
                                " is not fixed by any lattice translate of " + perm.str());
    return AffineElement(eps, perm, t);
}

} // namespace detail

inline Stabilizer stabilizer_of(const Coord5& p) {
    Stabilizer s;
    s.center = p;
    Perm rho = Perm::five_cycle();
    Perm mirror({4, 3, 2, 1, 5}); // (1 4)(2 3)
    Perm power = Perm::identity();
    for (int m = 0; m < 5; ++m) {
        s.elements.push_back(detail::solve_fixing(1, power, p));
        s.elements.push_back(detail::solve_fixing(1, power.compose(mirror), p));
        power = rho.compose(power);
    }
    return s;
}

/// Adjoins the flip-twisted elements (eps = -1) fixing the same center;
/// the result is closed of order 20 and contains order-10 rotations.
inline Stabilizer extend_order20(const Stabilizer& stab) {
    Stabilizer s = stab;
    for (const AffineElement& e : stab.elements)
        s.elements.push_back(detail::solve_fixing(-1, e.perm(), stab.center));
    return s;
}

/// Pure translation by m1(k1-k4) + m2(k2-k3), built as the product of
/// two parallel mirrors: R(m1,m2)*R(0,0) with
/// R(m1,m2) = r(k1-k4, m1) r(k2-k3, m2).
inline AffineElement translation_h2(long long m1, long long m2) {
    AffineElement rm = compose(reflection(1, 4, m1), reflection(2, 3, m2));
    AffineElement r0 = compose(reflection(1, 4, 0), reflection(2, 3, 0));
    return compose(rm, r0);
}

/// Named elements of the plane symmetry as they recur throughout:
/// mirrors C1 (about the line bisecting k5-k4, fixes k5), C2 (the
/// horizontal axis through k5), C3 (bisecting k2-k4, fixes k2+k3), the
/// order-5 rotation P about the origin, the diagram flip eta, and the
/// conjugator S = r4 r3 taking the standard simple roots to the folded
/// ones.
namespace elements {

inline AffineElement C1() { return compose(reflection(1, 3, 0), reflection(5, 4, 1)); }
inline AffineElement C2() { return compose(reflection(1, 4, 0), reflection(2, 3, 0)); }
inline AffineElement C3() { return compose(reflection(2, 4, 1), reflection(1, 5, 0)); }
inline AffineElement P() { return AffineElement(1, Perm::five_cycle(), Coord5::zero()); }
inline AffineElement eta() {
    return AffineElement(-1, Perm({4, 3, 2, 1, 5}), Coord5::zero());
}
inline AffineElement S() { return compose(reflection(4, 5, 0), reflection(3, 4, 0)); }

} // namespace elements

/// Homogeneous 3x3 matrix acting on (x, y, 1) plane vectors; last row is
/// exactly (0,0,1).
struct PlaneMatrix3 {
    std::array<std::array<double, 3>, 3> m{};

    std::array<double, 2> apply(const std::array<double, 2>& v) const {
        return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2],
                m[1][0] * v[0] + m[1][1] * v[1] + m[1][2]};
    }

    PlaneMatrix3 times(const PlaneMatrix3& o) const {
        PlaneMatrix3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                double s = 0;
                for (std::size_t k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
};

/// Homogeneous 5x5 matrix acting on (x, y, z, w, 1); orthogonal 4x4
/// block plus translation column.
struct FullMatrix5 {
    std::array<std::array<double, 5>, 5> m{};

    std::array<double, 4> apply(const std::array<double, 4>& v) const {
        std::array<double, 4> r{};
        for (std::size_t i = 0; i < 4; ++i) {
            double s = m[i][4];
            for (std::size_t j = 0; j < 4; ++j) s += m[i][j] * v[j];
            r[i] = s;
        }
        return r;
    }
};

/// Numeric plane matrix of a plane-compatible element. The linear block
/// comes from the index action: j -> j+c is the rotation by 2*pi*c/5 and
/// j -> -j+c the mirror z -> zeta^c * conj(z), scaled by eps.
inline PlaneMatrix3 plane_matrix(const AffineElement& e) {
    auto form = e.plane_form();
    if (!form)
        throw NotPlaneCompatible("plane_matrix: element does not preserve the plane: " +
                                 e.str());
    auto [s, c] = *form;
    double th = 2.0 * M_PI * c / 5.0;
    double eps = e.eps();
    PlaneMatrix3 pm;
    if (s > 0) {
        pm.m[0] = {eps * std::cos(th), -eps * std::sin(th), 0.0};
        pm.m[1] = {eps * std::sin(th), eps * std::cos(th), 0.0};
    } else {
        pm.m[0] = {eps * std::cos(th), eps * std::sin(th), 0.0};
        pm.m[1] = {eps * std::sin(th), -eps * std::cos(th), 0.0};
    }
    auto t = embed(e.trans(), Plane::Parallel);
    pm.m[0][2] = t[0];
    pm.m[1][2] = t[1];
    pm.m[2] = {0.0, 0.0, 1.0};
    return pm;
}

/// Numeric 5x5 matrix of any element, built from the exact action on the
/// basis images under embed4.
inline FullMatrix5 full_matrix(const AffineElement& e) {
    // Solve B * [emb4(k1)..emb4(k4)] = [emb4(g k1)..emb4(g k4)].
    std::array<std::array<double, 4>, 4> in{}, out{};
    for (int j = 1; j <= 4; ++j) {
        Coord5 kj = Coord5::k(j);
        Coord5 gk = e.perm().apply(kj);
        if (e.eps() < 0) gk = -gk;
        auto a = embed4(kj);
        auto b = embed4(gk);
        for (std::size_t i = 0; i < 4; ++i) {
            in[i][j - 1] = a[i];
            out[i][j - 1] = b[i];
        }
    }
    // Invert the input column matrix by Gauss-Jordan, then B = out * in^{-1}.
    std::array<std::array<double, 8>, 4> aug{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            aug[i][j] = in[i][j];
            aug[i][j + 4] = (i == j) ? 1.0 : 0.0;
        }
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < 4; ++r)
            if (std::abs(aug[r][col]) > std::abs(aug[piv][col])) piv = r;
        std::swap(aug[piv], aug[col]);
        double d = aug[col][col];
        for (std::size_t j = 0; j < 8; ++j) aug[col][j] /= d;
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == col) continue;
            double f = aug[r][col];
            for (std::size_t j = 0; j < 8; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    FullMatrix5 fm;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            double s = 0;
            for (std::size_t k = 0; k < 4; ++k) s += out[i][k] * aug[k][j + 4];
            fm.m[i][j] = s;
        }
    auto t = embed4(e.trans());
    for (std::size_t i = 0; i < 4; ++i) fm.m[i][4] = t[i];
    fm.m[4] = {0.0, 0.0, 0.0, 0.0, 1.0};
    return fm;
}

} // namespace pentatile
