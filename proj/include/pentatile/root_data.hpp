#pragma once

#include <array>
#include <cmath>

#include "pentatile/coord5.hpp"

namespace pentatile {

/// Static data of the rank-4 root system in pentagrid coordinates:
/// simple roots, the affine (lowest) root, fundamental weights, Cartan
/// matrix, plus the numeric frame that splits 4D space into the two
/// invariant planes of the order-5 rotation.
struct RootSystemData {
    /// alpha_i = k_i - k_{i+1}
    std::array<Coord5, 4> simple_roots;
    /// alpha_0 = k_5 - k_1 = -(alpha_1+alpha_2+alpha_3+alpha_4)
    Coord5 affine_root;
    /// Simple roots conjugated by S = r_4 r_3 so that the pairs
    /// (1,3) and (2,4) fold onto the two invariant planes:
    /// k_1-k_2, k_2-k_5, k_5-k_3, k_3-k_4.
    std::array<Coord5, 4> folded_roots;
    /// omega_1 = k_1, omega_2 = k_1+k_2, omega_3 = -(k_4+k_5), omega_4 = -k_5
    std::array<Coord5, 4> weights;
    std::array<std::array<Rational, 4>, 4> cartan;

    /// Dihedral-plane simple root directions beta_1, beta_2 (parallel
    /// plane) and gamma_1, gamma_2 (perpendicular plane), as numeric
    /// 4-vectors in the (x,y,z,w) frame of embed4.
    std::array<std::array<double, 4>, 4> dihedral_roots;
    /// Orthonormal frame vectors built from the dihedral roots; in the
    /// embed4 coordinates these come out as the standard basis.
    std::array<std::array<double, 4>, 4> frame;
};

inline const RootSystemData& root_data() {
    static const RootSystemData data = [] {
        RootSystemData d;
        for (int i = 1; i <= 4; ++i)
            d.simple_roots[static_cast<std::size_t>(i - 1)] = Coord5::root(i, i + 1);
        d.affine_root = Coord5::root(5, 1);
        d.folded_roots = {Coord5::root(1, 2), Coord5::root(2, 5), Coord5::root(5, 3),
                          Coord5::root(3, 4)};
        d.weights = {Coord5::k(1), Coord5::k(1) + Coord5::k(2),
                     -(Coord5::k(4) + Coord5::k(5)), -Coord5::k(5)};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                d.cartan[i][j] = inner4(d.simple_roots[i], d.simple_roots[j]);

        const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
        const double sigma = (1.0 - std::sqrt(5.0)) / 2.0;
        auto emb = [](const Coord5& v) { return embed4(v); };
        auto lincomb = [](double s, std::array<double, 4> u, double t, std::array<double, 4> v) {
            std::array<double, 4> r;
            for (int i = 0; i < 4; ++i) r[i] = s * u[i] + t * v[i];
            return r;
        };
        // beta_1 = (a1' + tau a3')/sqrt(2+tau) and cyclic friends, where
        // the primed roots are the folded ones.
        auto a1 = emb(d.folded_roots[0]), a2 = emb(d.folded_roots[1]);
        auto a3 = emb(d.folded_roots[2]), a4 = emb(d.folded_roots[3]);
        double np = std::sqrt(2.0 + tau), nq = std::sqrt(2.0 + sigma);
        d.dihedral_roots[0] = lincomb(1.0 / np, a1, tau / np, a3);
        d.dihedral_roots[1] = lincomb(tau / np, a2, 1.0 / np, a4);
        d.dihedral_roots[2] = lincomb(-1.0 / nq, a1, -sigma / nq, a3);
        d.dihedral_roots[3] = lincomb(-sigma / nq, a2, -1.0 / nq, a4);

        const auto& b1 = d.dihedral_roots[0];
        const auto& b2 = d.dihedral_roots[1];
        const auto& g1 = d.dihedral_roots[2];
        const auto& g2 = d.dihedral_roots[3];
        d.frame[0] = lincomb(1.0 / std::sqrt(2.0 * (2.0 + tau)), b1,
                             -1.0 / std::sqrt(2.0 * (2.0 + tau)), b2);
        d.frame[1] = lincomb(tau / std::sqrt(2.0), b1, tau / std::sqrt(2.0), b2);
        d.frame[2] = lincomb(1.0 / std::sqrt(2.0 * (2.0 + sigma)), g1,
                             -1.0 / std::sqrt(2.0 * (2.0 + sigma)), g2);
        d.frame[3] = lincomb(sigma / std::sqrt(2.0), g1, sigma / std::sqrt(2.0), g2);
        return d;
    }();
    return data;
}

} // namespace pentatile
