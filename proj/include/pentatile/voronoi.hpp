#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <vector>

#include "pentatile/coord5.hpp"

namespace pentatile {

struct BadIndices : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One rhombic 2-face of a rhombohedral facet: four vertices in cyclic
/// order, edges parallel to k_{gen_i} and k_{gen_j}.
struct RhombusFace {
    int gen_i = 0, gen_j = 0;
    std::array<Coord5, 4> verts;
};

/// 3D facet of the root-lattice cell around the origin: the zonotope
/// spanned by the three pentagrid vectors not in {i, j}, based at k_i.
/// Its center is (k_i - k_j)/2 and all 8 vertices lie on the hyperplane
/// (v, k_i - k_j) = 1.
struct Rhombohedron {
    int i = 0, j = 0;
    Coord5 base;
    std::array<Coord5, 3> generators;
    std::array<Coord5, 8> vertices; // base + subset sums, subsets in bit order

    std::array<RhombusFace, 6> faces() const {
        std::array<RhombusFace, 6> out;
        static constexpr int pair_a[3] = {0, 0, 1};
        static constexpr int pair_b[3] = {1, 2, 2};
        std::size_t n = 0;
        for (int p = 0; p < 3; ++p) {
            int a = pair_a[p], b = pair_b[p];
            int c = 3 - a - b;
            for (int offset = 0; offset <= 1; ++offset) {
                RhombusFace f;
                f.gen_i = gen_pent_[a];
                f.gen_j = gen_pent_[b];
                Coord5 o = base;
                if (offset) o = o + generators[c];
                f.verts = {o, o + generators[a], o + generators[a] + generators[b],
                           o + generators[b]};
                out[n++] = f;
            }
        }
        return out;
    }

    std::array<int, 3> gen_pent_{}; // pentagrid indices of the generators
};

inline Rhombohedron rhombohedron(int i, int j) {
    if (i < 1 || i > 5 || j < 1 || j > 5 || i == j)
        throw BadIndices("rhombohedron: need distinct indices in 1..5");
    Rhombohedron r;
    r.i = i;
    r.j = j;
    r.base = Coord5::k(i);
    std::size_t n = 0;
    for (int l = 1; l <= 5; ++l) {
        if (l == i || l == j) continue;
        r.gen_pent_[n] = l;
        r.generators[n++] = Coord5::k(l);
    }
    for (std::size_t mask = 0; mask < 8; ++mask) {
        Coord5 v = r.base;
        for (std::size_t b = 0; b < 3; ++b)
            if (mask & (1u << b)) v = v + r.generators[b];
        r.vertices[mask] = v;
    }
    return r;
}

inline std::vector<Rhombohedron> all_rhombohedra() {
    std::vector<Rhombohedron> out;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            if (i != j) out.push_back(rhombohedron(i, j));
    return out;
}

/// The 30 vertices of the root-lattice cell: +-k_i and +-(k_i + k_j).
inline std::vector<Coord5> root_cell_vertices() {
    std::set<Coord5> pts;
    for (int i = 1; i <= 5; ++i) {
        pts.insert(Coord5::k(i));
        pts.insert(-Coord5::k(i));
        for (int j = i + 1; j <= 5; ++j) {
            pts.insert(Coord5::k(i) + Coord5::k(j));
            pts.insert(-(Coord5::k(i) + Coord5::k(j)));
        }
    }
    return {pts.begin(), pts.end()};
}

/// Vertex of the order-5 permutohedron: a placement of the coefficients
/// (5,4,3,2,1) onto the five pentagrid directions (overall 1/5 dropped).
struct PermutoVertex {
    std::array<int, 5> coeffs{};
    Coord5 point;
};

inline Coord5 coeff_point(const std::array<int, 5>& coeffs) {
    std::array<Rational, 5> raw;
    for (std::size_t i = 0; i < 5; ++i) raw[i] = Rational(coeffs[i]);
    return Coord5(std::move(raw));
}

inline std::vector<PermutoVertex> permutohedron_vertices() {
    std::array<int, 5> c{1, 2, 3, 4, 5};
    std::sort(c.begin(), c.end());
    std::vector<PermutoVertex> out;
    do {
        out.push_back({c, coeff_point(c)});
    } while (std::next_permutation(c.begin(), c.end()));
    return out;
}

namespace detail {

/// Ordered set partitions of {1..5} with the given block sizes; blocks
/// are emitted with ascending members, positions chosen lexicographically.
inline void ordered_partitions_rec(std::vector<int> remaining,
                                   const std::vector<int>& sizes, std::size_t level,
                                   std::vector<std::vector<int>>& current,
                                   std::vector<std::vector<std::vector<int>>>& out) {
    if (level == sizes.size()) {
        out.push_back(current);
        return;
    }
    int s = sizes[level];
    // choose s elements of `remaining` in ascending index order
    std::vector<std::size_t> pick(static_cast<std::size_t>(s));
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    while (true) {
        std::vector<int> block;
        std::vector<int> rest;
        std::size_t pi = 0;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (pi < pick.size() && pick[pi] == i) {
                block.push_back(remaining[i]);
                ++pi;
            } else {
                rest.push_back(remaining[i]);
            }
        }
        current.push_back(block);
        ordered_partitions_rec(rest, sizes, level + 1, current, out);
        current.pop_back();
        // next combination
        std::size_t k = pick.size();
        std::size_t n = remaining.size();
        std::size_t j = k;
        while (j > 0 && pick[j - 1] == n - k + j - 1) --j;
        if (j == 0) break;
        ++pick[j - 1];
        for (std::size_t l = j; l < k; ++l) pick[l] = pick[l - 1] + 1;
    }
}

inline std::vector<std::vector<std::vector<int>>> ordered_partitions(
    const std::vector<int>& sizes) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> current;
    ordered_partitions_rec({1, 2, 3, 4, 5}, sizes, 0, current, out);
    return out;
}

/// All compositions of the multiset of block sizes, e.g. {3,1,1} ->
/// (3,1,1), (1,3,1), (1,1,3).
inline std::vector<std::vector<int>> size_orders(std::vector<int> sizes) {
    std::sort(sizes.begin(), sizes.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(sizes);
    } while (std::next_permutation(sizes.begin(), sizes.end()));
    return out;
}

} // namespace detail

/// 2-face of the permutohedron, given by an ordered set partition of the
/// positions whose blocks carry descending runs of coefficient values.
/// One block of three positions makes a hexagon, two blocks of two make
/// a square (possibly degenerate after projection).
struct PermutoFace {
    std::vector<std::vector<int>> blocks;
    bool hexagon = false;
    std::vector<std::array<int, 5>> boundary_coeffs; // cyclic
    std::vector<Coord5> boundary;                    // cyclic, same order

    /// Positions of the multi-element blocks, for classification.
    std::vector<std::vector<int>> multi_blocks() const {
        std::vector<std::vector<int>> out;
        for (const auto& b : blocks)
            if (b.size() > 1) out.push_back(b);
        return out;
    }
};

namespace detail {

/// All value assignments of a face: block q holds the run of its size
/// starting below the previous block's run, permuted freely inside.
inline std::vector<std::array<int, 5>> face_vertices(
    const std::vector<std::vector<int>>& blocks) {
    std::vector<std::array<int, 5>> result;
    result.emplace_back();
    int next_value = 5;
    for (const auto& block : blocks) {
        std::vector<int> values;
        for (std::size_t q = 0; q < block.size(); ++q)
            values.push_back(next_value - static_cast<int>(q));
        next_value -= static_cast<int>(block.size());
        std::sort(values.begin(), values.end());
        std::vector<std::array<int, 5>> grown;
        do {
            for (const auto& partial : result) {
                std::array<int, 5> v = partial;
                for (std::size_t q = 0; q < block.size(); ++q)
                    v[static_cast<std::size_t>(block[q] - 1)] = values[q];
                grown.push_back(v);
            }
        } while (std::next_permutation(values.begin(), values.end()));
        result = std::move(grown);
    }
    return result;
}

/// Neighbors on a face differ by swapping two coefficient values v, v+1.
inline bool adjacent_assignments(const std::array<int, 5>& a, const std::array<int, 5>& b) {
    int d1 = -1, d2 = -1;
    for (int i = 0; i < 5; ++i) {
        if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) {
            if (d1 < 0) d1 = i;
            else if (d2 < 0) d2 = i;
            else return false;
        }
    }
    if (d2 < 0) return false;
    std::size_t u1 = static_cast<std::size_t>(d1), u2 = static_cast<std::size_t>(d2);
    return a[u1] == b[u2] && a[u2] == b[u1] && std::abs(a[u1] - a[u2]) == 1;
}

/// Walk the boundary cycle starting from the smallest assignment.
inline std::vector<std::array<int, 5>> boundary_cycle(
    std::vector<std::array<int, 5>> verts) {
    std::sort(verts.begin(), verts.end());
    std::vector<std::array<int, 5>> cycle;
    cycle.push_back(verts.front());
    std::array<int, 5> prev = cycle.front();
    // first step: smallest neighbor
    std::vector<std::array<int, 5>> nb;
    for (const auto& v : verts)
        if (adjacent_assignments(cycle.front(), v)) nb.push_back(v);
    std::sort(nb.begin(), nb.end());
    std::array<int, 5> cur = nb.front();
    while (cur != cycle.front()) {
        cycle.push_back(cur);
        for (const auto& v : verts) {
            if (v != prev && adjacent_assignments(cur, v)) {
                prev = cur;
                cur = v;
                break;
            }
        }
    }
    return cycle;
}

} // namespace detail

inline PermutoFace make_permuto_face(const std::vector<std::vector<int>>& blocks) {
    PermutoFace f;
    f.blocks = blocks;
    int dof = 0;
    for (const auto& b : blocks) dof += static_cast<int>(b.size()) - 1;
    if (dof != 2) throw BadIndices("make_permuto_face: partition is not a 2-face");
    f.hexagon = f.multi_blocks().size() == 1;
    f.boundary_coeffs = detail::boundary_cycle(detail::face_vertices(blocks));
    for (const auto& c : f.boundary_coeffs) f.boundary.push_back(coeff_point(c));
    return f;
}

/// The 150 2-faces: 60 hexagons (one 3-block) and 90 squares (two
/// 2-blocks).
inline std::vector<PermutoFace> permutohedron_faces() {
    std::vector<PermutoFace> out;
    for (const auto& sizes : {std::vector<int>{3, 1, 1}, std::vector<int>{2, 2, 1}})
        for (const auto& order : detail::size_orders(sizes))
            for (const auto& part : detail::ordered_partitions(order))
                out.push_back(make_permuto_face(part));
    return out;
}

/// 3-facet descriptor: one 4-block gives a truncated octahedron, a 3-block
/// plus a 2-block gives a hexagonal prism.
struct PermutoFacet {
    std::vector<std::vector<int>> blocks;
    bool truncated_octahedron = false;
};

inline std::vector<PermutoFacet> permutohedron_facets() {
    std::vector<PermutoFacet> out;
    for (const auto& sizes : {std::vector<int>{4, 1}, std::vector<int>{3, 2}})
        for (const auto& order : detail::size_orders(sizes))
            for (const auto& part : detail::ordered_partitions(order)) {
                PermutoFacet f;
                f.blocks = part;
                std::size_t maxb = 0;
                for (const auto& b : part) maxb = std::max(maxb, b.size());
                f.truncated_octahedron = maxb == 4;
                out.push_back(f);
            }
    return out;
}

inline long permutohedron_edge_count() {
    long n = 0;
    for (const auto& order : detail::size_orders({2, 1, 1, 1}))
        n += static_cast<long>(detail::ordered_partitions(order).size());
    return n;
}

/// Face-vector bookkeeping for either cell.
struct CellSummary {
    long n0 = 0, n1 = 0, n2 = 0, n3 = 0;
    long hexagon_faces = 0, square_faces = 0;
    long truncated_octahedra = 0, hexagonal_prisms = 0;
    long rhombic_faces = 0, rhombohedra = 0;
    bool euler_zero() const { return n0 - n1 + n2 - n3 == 0; }
};

inline CellSummary cell_summary_weight() {
    CellSummary s;
    s.n0 = static_cast<long>(permutohedron_vertices().size());
    s.n1 = permutohedron_edge_count();
    auto faces = permutohedron_faces();
    s.n2 = static_cast<long>(faces.size());
    for (const auto& f : faces) (f.hexagon ? s.hexagon_faces : s.square_faces)++;
    auto facets = permutohedron_facets();
    s.n3 = static_cast<long>(facets.size());
    for (const auto& f : facets)
        (f.truncated_octahedron ? s.truncated_octahedra : s.hexagonal_prisms)++;
    return s;
}

inline CellSummary cell_summary_root() {
    CellSummary s;
    s.n0 = static_cast<long>(root_cell_vertices().size());
    auto rhombs = all_rhombohedra();
    s.n3 = static_cast<long>(rhombs.size());
    s.rhombohedra = s.n3;
    std::set<std::array<Coord5, 4>> faces;
    std::set<std::array<Coord5, 2>> edges;
    for (const auto& rh : rhombs) {
        for (const auto& f : rh.faces()) {
            std::array<Coord5, 4> key = f.verts;
            std::sort(key.begin(), key.end());
            faces.insert(key);
            for (std::size_t a = 0; a < 4; ++a) {
                Coord5 u = f.verts[a], v = f.verts[(a + 1) % 4];
                if (v < u) std::swap(u, v);
                edges.insert({u, v});
            }
        }
    }
    s.n2 = static_cast<long>(faces.size());
    s.rhombic_faces = s.n2;
    s.n1 = static_cast<long>(edges.size());
    return s;
}

} // namespace pentatile
