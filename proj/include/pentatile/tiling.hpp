#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pentatile/affine.hpp"
#include "pentatile/coord5.hpp"
#include "pentatile/voronoi.hpp"

namespace pentatile {

struct TilingMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The six tile species arising from projected cell 2-faces, plus the
/// plane-parallel squares that flatten to segments. Root tiles have edge
/// |k| in the plane; weight tiles have edges u and tau*u with
/// u = |k_i - k_{i+1}| in the plane.
enum class TileKind {
    ThickRhombusRoot,
    ThinRhombusRoot,
    UnitRhombusWeight,
    TauRhombusWeight,
    ThickHexagonWeight,
    ThinHexagonWeight,
    DegenerateSegment,
};

inline const char* kind_name(TileKind k) {
    switch (k) {
        case TileKind::ThickRhombusRoot: return "thick_rhombus_root";
        case TileKind::ThinRhombusRoot: return "thin_rhombus_root";
        case TileKind::UnitRhombusWeight: return "unit_rhombus_weight";
        case TileKind::TauRhombusWeight: return "tau_rhombus_weight";
        case TileKind::ThickHexagonWeight: return "thick_hexagon_weight";
        case TileKind::ThinHexagonWeight: return "thin_hexagon_weight";
        case TileKind::DegenerateSegment: return "degenerate_segment";
    }
    return "?";
}

inline TileKind kind_from_name(const std::string& s) {
    for (TileKind k : {TileKind::ThickRhombusRoot, TileKind::ThinRhombusRoot,
                       TileKind::UnitRhombusWeight, TileKind::TauRhombusWeight,
                       TileKind::ThickHexagonWeight, TileKind::ThinHexagonWeight,
                       TileKind::DegenerateSegment})
        if (s == kind_name(k)) return k;
    throw std::invalid_argument("unknown tile kind '" + s + "'");
}

/// Exact area of each species in cross_par units ((2/5)*sin36):
/// thin root rhombus 1, thick root rhombus tau, weight rhombi
/// (5-sqrt5)/2 and sqrt5*tau^2, hexagons 3*sqrt5 and 3*tau*sqrt5.
inline GoldenNumber kind_area(TileKind k) {
    switch (k) {
        case TileKind::ThickRhombusRoot: return GoldenNumber::tau();
        case TileKind::ThinRhombusRoot: return GoldenNumber(1);
        case TileKind::UnitRhombusWeight: return {Rational(5, 2), Rational(-1, 2)};
        case TileKind::TauRhombusWeight: return {Rational(5, 2), Rational(3, 2)};
        case TileKind::ThinHexagonWeight: return {Rational(0), Rational(3)};
        case TileKind::ThickHexagonWeight: return {Rational(15, 2), Rational(3, 2)};
        case TileKind::DegenerateSegment: return GoldenNumber(0);
    }
    return GoldenNumber(0);
}

/// A projected 2-face: species tag plus cyclically ordered vertices,
/// stored counterclockwise starting from the lexicographically smallest
/// vertex. Equality and patch dedup go through the sorted vertex key.
class Tile {
public:
    Tile(TileKind kind, std::vector<Coord5> boundary, std::string provenance = {})
        : kind_(kind), verts_(std::move(boundary)), provenance_(std::move(provenance)) {
        if (verts_.size() < 2) throw std::invalid_argument("Tile: too few vertices");
        pp_.reserve(verts_.size());
        for (const auto& v : verts_) pp_.push_back(plane_point(v));
        GoldenNumber doubled;
        for (std::size_t i = 0; i < verts_.size(); ++i)
            doubled += cross_par(pp_[i], pp_[(i + 1) % pp_.size()]);
        int s = doubled.sign();
        if (s == 0) {
            if (kind_ != TileKind::DegenerateSegment)
                throw TilingMismatch("Tile: flat boundary for non-degenerate species");
            std::sort(verts_.begin(), verts_.end());
            verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
            pp_.clear();
            for (const auto& v : verts_) pp_.push_back(plane_point(v));
        } else {
            if (kind_ == TileKind::DegenerateSegment)
                throw TilingMismatch("Tile: segment species with nonzero area");
            if (s < 0) {
                std::reverse(verts_.begin(), verts_.end());
                std::reverse(pp_.begin(), pp_.end());
            }
            rotate_to_min();
        }
        cache_xy();
    }

    TileKind kind() const { return kind_; }
    const std::vector<Coord5>& verts() const { return verts_; }
    const std::vector<PlanePoint>& plane_points() const { return pp_; }
    const std::vector<std::array<double, 2>>& xy() const { return xy_; }
    const std::string& provenance() const { return provenance_; }

    std::vector<Coord5> key() const {
        std::vector<Coord5> k = verts_;
        std::sort(k.begin(), k.end());
        return k;
    }

    Coord5 centroid() const {
        Coord5 s;
        for (const auto& v : verts_) s = s + v;
        return s * Rational(1, static_cast<long long>(verts_.size()));
    }

    GoldenNumber area() const { return kind_area(kind_); }

    /// Exact shoelace of the stored boundary, in cross_par units.
    GoldenNumber shoelace() const {
        GoldenNumber doubled;
        for (std::size_t i = 0; i < pp_.size(); ++i)
            doubled += cross_par(pp_[i], pp_[(i + 1) % pp_.size()]);
        return GoldenNumber(Rational(1, 2)) * doubled;
    }

    const std::array<double, 4>& bbox() const { return bbox_; } // xmin,xmax,ymin,ymax

    bool operator==(const Tile& o) const { return kind_ == o.kind_ && verts_ == o.verts_; }

private:
    void rotate_to_min() {
        std::size_t best = 0;
        for (std::size_t i = 1; i < verts_.size(); ++i)
            if (verts_[i] < verts_[best]) best = i;
        std::rotate(verts_.begin(), verts_.begin() + static_cast<std::ptrdiff_t>(best),
                    verts_.end());
        std::rotate(pp_.begin(), pp_.begin() + static_cast<std::ptrdiff_t>(best), pp_.end());
    }

    void cache_xy() {
        const double fx = basis_plane_length();
        const double fy = basis_plane_length() * sin36();
        xy_.clear();
        bbox_ = {1e300, -1e300, 1e300, -1e300};
        for (const auto& p : pp_) {
            double x = fx * p.x.to_double();
            double y = fy * p.y.to_double();
            xy_.push_back({x, y});
            bbox_[0] = std::min(bbox_[0], x);
            bbox_[1] = std::max(bbox_[1], x);
            bbox_[2] = std::min(bbox_[2], y);
            bbox_[3] = std::max(bbox_[3], y);
        }
    }

    TileKind kind_;
    std::vector<Coord5> verts_;
    std::vector<PlanePoint> pp_;
    std::vector<std::array<double, 2>> xy_;
    std::array<double, 4> bbox_{};
    std::string provenance_;
};

using TileKey = std::vector<Coord5>;

/// Exact separating-axis test on the cached plane coordinates. Convex
/// counterclockwise tiles only; shared edges and vertices do not count
/// as overlap.
inline bool tiles_overlap(const Tile& a, const Tile& b) {
    if (a.bbox()[1] < b.bbox()[0] - 1e-9 || b.bbox()[1] < a.bbox()[0] - 1e-9 ||
        a.bbox()[3] < b.bbox()[2] - 1e-9 || b.bbox()[3] < a.bbox()[2] - 1e-9)
        return false;
    auto separated = [](const Tile& p, const Tile& q) {
        const auto& pv = p.plane_points();
        for (std::size_t i = 0; i < pv.size(); ++i) {
            PlanePoint edge = pv[(i + 1) % pv.size()] - pv[i];
            bool any_inside = false;
            for (const auto& w : q.plane_points()) {
                if (cross_par(edge, w - pv[i]).sign() > 0) {
                    any_inside = true;
                    break;
                }
            }
            if (!any_inside) return true;
        }
        return false;
    };
    return !separated(a, b) && !separated(b, a);
}

inline bool point_strictly_inside(const Tile& t, const PlanePoint& p) {
    const auto& pv = t.plane_points();
    for (std::size_t i = 0; i < pv.size(); ++i) {
        PlanePoint edge = pv[(i + 1) % pv.size()] - pv[i];
        if (cross_par(edge, p - pv[i]).sign() <= 0) return false;
    }
    return true;
}

namespace detail {

/// Numeric witness point for a reported overlap: clip one polygon by the
/// other and take the centroid. Reporting only; the overlap decision
/// itself is exact.
inline std::array<double, 2> overlap_witness(const Tile& a, const Tile& b) {
    std::vector<std::array<double, 2>> poly(b.xy().begin(), b.xy().end());
    const auto& av = a.xy();
    for (std::size_t i = 0; i < av.size() && !poly.empty(); ++i) {
        auto p1 = av[i], p2 = av[(i + 1) % av.size()];
        double ex = p2[0] - p1[0], ey = p2[1] - p1[1];
        auto side = [&](const std::array<double, 2>& q) {
            return ex * (q[1] - p1[1]) - ey * (q[0] - p1[0]);
        };
        std::vector<std::array<double, 2>> next;
        for (std::size_t j = 0; j < poly.size(); ++j) {
            auto cur = poly[j], nxt = poly[(j + 1) % poly.size()];
            double sc = side(cur), sn = side(nxt);
            if (sc >= 0) next.push_back(cur);
            if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
                double t = sc / (sc - sn);
                next.push_back({cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])});
            }
        }
        poly = std::move(next);
    }
    if (poly.empty()) return {(a.xy()[0][0] + b.xy()[0][0]) / 2, (a.xy()[0][1] + b.xy()[0][1]) / 2};
    double cx = 0, cy = 0;
    for (const auto& q : poly) {
        cx += q[0];
        cy += q[1];
    }
    return {cx / static_cast<double>(poly.size()), cy / static_cast<double>(poly.size())};
}

} // namespace detail

struct Conflict {
    Tile existing;
    Tile offending;
    std::array<double, 2> witness{};
};

struct ConflictReport {
    std::vector<Conflict> conflicts;
    bool empty() const { return conflicts.empty(); }
    std::size_t size() const { return conflicts.size(); }
};

/// A collection of pairwise interior-disjoint tiles keyed by canonical
/// vertex set. Inserting an overlapping non-identical tile records a
/// conflict and keeps the collection unchanged; nothing is dropped
/// silently.
class Patch {
public:
    enum class Insert { Added, Duplicate, Conflicted };

    Insert insert(const Tile& t) {
        if (t.kind() == TileKind::DegenerateSegment) {
            ++degenerate_seen_;
            return Insert::Duplicate;
        }
        TileKey key = t.key();
        if (tiles_.count(key)) return Insert::Duplicate;
        for (const auto& [k, other] : tiles_) {
            if (tiles_overlap(other, t)) {
                record_conflict(other, t);
                return Insert::Conflicted;
            }
        }
        tiles_.emplace(std::move(key), t);
        return Insert::Added;
    }

    /// Insert without the overlap scan; for images of an already audited
    /// patch under an exact isometry.
    void insert_unchecked(const Tile& t) {
        if (t.kind() == TileKind::DegenerateSegment) {
            ++degenerate_seen_;
            return;
        }
        tiles_.emplace(t.key(), t);
    }

    /// True if the tile would overlap an existing, non-identical tile.
    bool conflicts_with(const Tile& t) const {
        if (tiles_.count(t.key())) return false;
        for (const auto& [k, other] : tiles_)
            if (tiles_overlap(other, t)) return true;
        return false;
    }

    bool contains(const Tile& t) const { return tiles_.count(t.key()) > 0; }

    std::size_t size() const { return tiles_.size(); }
    bool empty() const { return tiles_.empty(); }

    auto begin() const { return tiles_.begin(); }
    auto end() const { return tiles_.end(); }

    const std::vector<Conflict>& conflict_log() const { return log_; }
    long degenerate_seen() const { return degenerate_seen_; }
    void count_degenerate(long n) { degenerate_seen_ += n; }

    std::map<TileKind, long> census() const {
        std::map<TileKind, long> c;
        for (const auto& [k, t] : tiles_) c[t.kind()]++;
        return c;
    }

    GoldenNumber total_area() const {
        GoldenNumber a;
        for (const auto& [k, t] : tiles_) a += t.area();
        return a;
    }

    double bounding_radius() const {
        double r = 0;
        for (const auto& [k, t] : tiles_)
            for (const auto& q : t.xy()) r = std::max(r, std::hypot(q[0], q[1]));
        return r;
    }

    std::set<TileKey> key_set() const {
        std::set<TileKey> s;
        for (const auto& [k, t] : tiles_) s.insert(k);
        return s;
    }

private:
    void record_conflict(const Tile& existing, const Tile& offending) {
        auto pair_key = std::make_pair(existing.key(), offending.key());
        if (!conflict_keys_.insert(pair_key).second) return;
        log_.push_back({existing, offending, detail::overlap_witness(existing, offending)});
    }

    std::map<TileKey, Tile> tiles_;
    std::vector<Conflict> log_;
    std::set<std::pair<TileKey, TileKey>> conflict_keys_;
    long degenerate_seen_ = 0;
};

/// Species of a root-cell rhombus face from the index distance of its
/// two edge directions: one step apart projects at 72 degrees (thick),
/// two steps at 144 (thin).
inline TileKind classify_root_face(int gen_i, int gen_j) {
    int d = std::abs(gen_i - gen_j) % 5;
    if (d > 2) d = 5 - d;
    return d == 1 ? TileKind::ThickRhombusRoot : TileKind::ThinRhombusRoot;
}

inline Tile classify_and_project(const RhombusFace& f, const std::string& provenance = {}) {
    return Tile(classify_root_face(f.gen_i, f.gen_j),
                {f.verts.begin(), f.verts.end()}, provenance);
}

/// Species of a permutohedron face. Squares: both blocks one-step apart
/// give the unit rhombus, both two-step the tau rhombus, mixed blocks
/// always project onto a segment. Hexagons: a consecutive position
/// triple has one two-step pair (thin, edge runs tau,1,1), the split
/// triple has two (thick, edge runs tau,tau,1).
inline TileKind classify_permuto_face(const PermutoFace& f) {
    auto step = [](int a, int b) {
        int d = std::abs(a - b) % 5;
        if (d > 2) d = 5 - d;
        return d;
    };
    auto multi = f.multi_blocks();
    if (f.hexagon) {
        const auto& b = multi[0];
        int two_steps = (step(b[0], b[1]) == 2) + (step(b[0], b[2]) == 2) +
                        (step(b[1], b[2]) == 2);
        return two_steps == 1 ? TileKind::ThinHexagonWeight : TileKind::ThickHexagonWeight;
    }
    int s1 = step(multi[0][0], multi[0][1]);
    int s2 = step(multi[1][0], multi[1][1]);
    if (s1 == s2) return s1 == 1 ? TileKind::UnitRhombusWeight : TileKind::TauRhombusWeight;
    return TileKind::DegenerateSegment;
}

inline Tile classify_and_project(const PermutoFace& f, const std::string& provenance = {}) {
    return Tile(classify_permuto_face(f), f.boundary, provenance);
}

namespace detail {

/// Envelope probes. Heights are exact perpendicular-space inner products
/// against a fixed lattice vector, so every envelope decision is a
/// golden-number sign test.
///
/// Root cell: -k5. Its perpendicular direction sits midway between two
/// walls of the selection fan, is invariant under the mirror through k5
/// (so the decagon inherits that mirror exactly), and orients the
/// envelope so the facets centered at (k5-k4)/2, (k2-k4)/2, (k3-k1)/2,
/// (k5-k1)/2 carry it.
///
/// Weight cell: -(10*k5 + k1). The weight-cell fan has a wall on the k5
/// axis itself, so the probe keeps the same orientation but adds a small
/// k1 tilt to stay strictly inside a chamber. The decagon audits pin
/// both choices down; mirrored choices would tile equally well.
inline const Coord5& root_envelope_probe() {
    static const Coord5 probe = -Coord5::k(5);
    return probe;
}

inline const Coord5& weight_envelope_probe() {
    static const Coord5 probe = -(Coord5::k(5) * Rational(10) + Coord5::k(1));
    return probe;
}

/// Is `face` on the lower envelope of `cloud` with respect to the height
/// functional? Lower means every cloud point lifts on or above the plane
/// through the face. Degenerate faces are never lower.
inline bool lower_face(const std::vector<Coord5>& face, const std::vector<Coord5>& cloud) {
    const PlanePoint p0 = plane_point(face[0]);
    std::size_t i1 = 1;
    while (i1 < face.size() && plane_point(face[i1]) == p0) ++i1;
    if (i1 == face.size()) return false;
    PlanePoint p1 = plane_point(face[i1]);
    std::size_t i2 = i1 + 1;
    PlanePoint p2;
    bool found = false;
    for (; i2 < face.size(); ++i2) {
        p2 = plane_point(face[i2]);
        if (cross_par(p1 - p0, p2 - p0).sign() != 0) {
            found = true;
            break;
        }
    }
    if (!found) return false;
    Coord5 v0 = face[0], v1 = face[i1], v2 = face[i2];
    if (cross_par(p1 - p0, p2 - p0).sign() < 0) {
        std::swap(v1, v2);
        std::swap(p1, p2);
    }
    GoldenNumber h0 = envelope_height(v0);
    GoldenNumber h1 = envelope_height(v1) - h0;
    GoldenNumber h2 = envelope_height(v2) - h0;
    GoldenNumber base = cross_par(p1 - p0, p2 - p0);
    for (const auto& w : cloud) {
        PlanePoint pw = plane_point(w);
        GoldenNumber hw = envelope_height(w) - h0;
        GoldenNumber det = h1 * cross_par(p2 - p0, pw - p0) -
                           h2 * cross_par(p1 - p0, pw - p0) + hw * base;
        if (det.sign() < 0) return false;
    }
    return true;
}

} // namespace detail

/// Exact convex hull (counterclockwise) of projected lattice points.
inline std::vector<Coord5> convex_hull(std::vector<Coord5> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto less_xy = [](const Coord5& a, const Coord5& b) {
        PlanePoint pa = plane_point(a), pb = plane_point(b);
        int sx = (pa.x - pb.x).sign();
        if (sx != 0) return sx < 0;
        return (pa.y - pb.y).sign() < 0;
    };
    std::sort(pts.begin(), pts.end(), less_xy);
    if (pts.size() < 3) return pts;
    auto build = [](const std::vector<Coord5>& src, std::vector<Coord5>& out) {
        for (const auto& p : src) {
            while (out.size() >= 2 &&
                   cross_par(plane_point(out.back()) - plane_point(out[out.size() - 2]),
                             plane_point(p) - plane_point(out.back()))
                           .sign() <= 0)
                out.pop_back();
            out.push_back(p);
        }
    };
    std::vector<Coord5> lower, upper;
    build(pts, lower);
    std::vector<Coord5> rev(pts.rbegin(), pts.rend());
    build(rev, upper);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

/// Exact polygon area in cross_par units, vertices in cyclic order.
inline GoldenNumber polygon_area(const std::vector<Coord5>& poly) {
    GoldenNumber doubled;
    for (std::size_t i = 0; i < poly.size(); ++i)
        doubled += cross_par(poly[i], poly[(i + 1) % poly.size()]);
    GoldenNumber half = GoldenNumber(Rational(1, 2)) * doubled;
    return half.sign() < 0 ? -half : half;
}

/// Projection of the root-lattice cell: the faces on the lower envelope
/// of the cell (judged against all 30 vertices) tile a regular decagon
/// of circumradius sqrt(2/5)*tau with five thick and five thin rhombi.
/// With the default probe the carrying facets are the pairwise adjacent
/// rhombohedra centered at (k5-k4)/2, (k2-k4)/2, (k3-k1)/2, (k5-k1)/2
/// plus one thin face from the pair of facets flanking k5.
inline Patch decagon_root() {
    auto cell = root_cell_vertices();
    Patch p;
    for (const auto& rh : all_rhombohedra()) {
        for (const auto& f : rh.faces()) {
            std::vector<Coord5> fv(f.verts.begin(), f.verts.end());
            if (!detail::lower_face(fv, cell)) continue;
            std::string prov = "cell(" + std::to_string(rh.i) + "," + std::to_string(rh.j) +
                               "):face(" + std::to_string(f.gen_i) + "," +
                               std::to_string(f.gen_j) + ")";
            p.insert(classify_and_project(f, prov));
        }
    }
    auto census = p.census();
    bool ok = p.conflict_log().empty() && p.size() == 10 &&
              census[TileKind::ThickRhombusRoot] == 5 &&
              census[TileKind::ThinRhombusRoot] == 5;
    GoldenNumber expect = GoldenNumber(5) * (GoldenNumber::tau() + GoldenNumber(1));
    ok = ok && p.total_area() == expect;
    if (ok) {
        std::set<Coord5> allowed(cell.begin(), cell.end());
        for (const auto& [k, t] : p)
            for (const auto& v : t.verts())
                if (!allowed.count(v)) ok = false;
    }
    if (!ok) throw TilingMismatch("decagon_root: envelope selection failed its audits");
    return p;
}

/// Projection of the weight-lattice cell: the non-degenerate lower faces
/// of the order-5 permutohedron form a 20-tile decagonal patch, five of
/// each species, filling the projected vertex hull exactly.
inline Patch decagon_weight() {
    auto verts = permutohedron_vertices();
    std::vector<Coord5> cloud;
    cloud.reserve(verts.size());
    for (const auto& v : verts) cloud.push_back(v.point);
    Patch p;
    long degenerate = 0;
    for (const auto& f : permutohedron_faces()) {
        Tile t = classify_and_project(f, "permutohedron");
        if (t.kind() == TileKind::DegenerateSegment) {
            ++degenerate;
            continue;
        }
        if (!detail::lower_face(f.boundary, cloud)) continue;
        p.insert(t);
    }
    p.count_degenerate(degenerate);
    auto census = p.census();
    bool ok = p.conflict_log().empty() && p.size() == 20 && degenerate == 30;
    for (TileKind k : {TileKind::UnitRhombusWeight, TileKind::TauRhombusWeight,
                       TileKind::ThickHexagonWeight, TileKind::ThinHexagonWeight})
        ok = ok && census[k] == 5;
    ok = ok && p.total_area() == polygon_area(convex_hull(cloud));
    if (!ok) throw TilingMismatch("decagon_weight: envelope selection failed its audits");
    return p;
}

/// Exact image of a patch under a plane-compatible element.
inline Patch transform_patch(const Patch& p, const AffineElement& e) {
    if (!e.plane_compatible())
        throw NotPlaneCompatible("transform_patch: element does not preserve the plane");
    Patch out;
    for (const auto& [k, t] : p) {
        std::vector<Coord5> verts;
        verts.reserve(t.verts().size());
        for (const auto& v : t.verts()) verts.push_back(e.apply(v));
        out.insert_unchecked(Tile(t.kind(), std::move(verts), t.provenance() + "|g"));
    }
    return out;
}

/// Union keeping identical tiles once; overlaps between non-identical
/// tiles are recorded, the offending tile is left out.
inline std::pair<Patch, ConflictReport> patch_union(const Patch& a, const Patch& b) {
    Patch out = a;
    std::size_t before = out.conflict_log().size();
    for (const auto& [k, t] : b) out.insert(t);
    ConflictReport rep;
    rep.conflicts.assign(out.conflict_log().begin() + static_cast<std::ptrdiff_t>(before),
                         out.conflict_log().end());
    return {out, rep};
}

/// Repeatedly applies the generators, unioning the images, keeping only
/// tiles whose centroid stays within `radius` of `center` (the bound is
/// evaluated on the exact centroid distance, so exact symmetries of the
/// seed survive filtering). Stops at a fixpoint or after max_rounds.
inline std::pair<Patch, ConflictReport> orbit_closure(const Patch& seed,
                                                      const std::vector<AffineElement>& gens,
                                                      const Coord5& center, double radius,
                                                      int max_rounds) {
    const double r2 = radius * radius;
    auto within = [&](const Tile& t) {
        return plane_norm2(t.centroid() - center).to_double() <= r2;
    };
    Patch cur;
    for (const auto& [k, t] : seed)
        if (within(t)) cur.insert(t);
    for (int round = 0; round < max_rounds; ++round) {
        std::size_t tiles_before = cur.size();
        std::size_t conflicts_before = cur.conflict_log().size();
        for (const auto& g : gens) {
            Patch img = transform_patch(cur, g);
            for (const auto& [k, t] : img)
                if (within(t)) cur.insert(t);
        }
        if (cur.size() == tiles_before && cur.conflict_log().size() == conflicts_before)
            break;
    }
    ConflictReport rep;
    rep.conflicts = cur.conflict_log();
    return {cur, rep};
}

struct TessellationStats {
    long candidates = 0;
    long placed = 0;
    long skipped = 0;
    GoldenNumber covered_area;
    double disk_area = 0;
    double coverage = 0;
};

struct WeightTessellation {
    Patch patch;
    ConflictReport report;
    TessellationStats stats;
};

/// Circumradius of the projected weight-cell decagon.
inline double weight_decagon_circumradius() {
    double best = 0;
    for (const auto& v : permutohedron_vertices())
        best = std::max(best, plane_norm2(v.point).to_double());
    return std::sqrt(best);
}

/// Greedy tessellation by translated weight-cell decagons: translations
/// run over the scaled weight lattice in order of increasing parallel
/// length (lexicographic tie-break); a translate is placed only if none
/// of its tiles overlaps the accumulated patch, otherwise it is skipped
/// and counted. Coverage of the disk is reported, not assumed.
inline WeightTessellation weight_tessellation(double radius) {
    if (!(radius > 0)) throw std::invalid_argument("weight_tessellation: radius must be > 0");
    Patch base = decagon_weight();
    WeightTessellation out;

    double perp_max2 = 0;
    for (const auto& v : permutohedron_vertices())
        perp_max2 = std::max(perp_max2, plane_norm2_perp(v.point).to_double());
    const double par_bound2 = radius * radius;
    const double perp_bound2 = 4.0 * perp_max2;
    const int entry_max =
        static_cast<int>(std::ceil(std::sqrt((par_bound2 + perp_bound2) / 0.8)));

    std::vector<std::pair<GoldenNumber, Coord5>> candidates;
    std::array<Rational, 5> tuple{};
    std::array<int, 5> idx{};
    for (idx[0] = 0; idx[0] <= entry_max; ++idx[0])
        for (idx[1] = 0; idx[1] <= entry_max; ++idx[1])
            for (idx[2] = 0; idx[2] <= entry_max; ++idx[2])
                for (idx[3] = 0; idx[3] <= entry_max; ++idx[3])
                    for (idx[4] = 0; idx[4] <= entry_max; ++idx[4]) {
                        if (std::min({idx[0], idx[1], idx[2], idx[3], idx[4]}) != 0) continue;
                        for (std::size_t q = 0; q < 5; ++q) tuple[q] = Rational(idx[q]);
                        Coord5 t(tuple);
                        GoldenNumber n2 = plane_norm2(t);
                        if (n2.to_double() > par_bound2) continue;
                        if (plane_norm2_perp(t).to_double() > perp_bound2) continue;
                        candidates.emplace_back(n2, t);
                    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        int s = (a.first - b.first).sign();
        if (s != 0) return s < 0;
        return a.second < b.second;
    });
    out.stats.candidates = static_cast<long>(candidates.size());

    for (const auto& [n2, t] : candidates) {
        AffineElement shift = AffineElement::translation(t);
        std::vector<Tile> tiles;
        tiles.reserve(base.size());
        for (const auto& [k, tile] : base) {
            std::vector<Coord5> verts;
            verts.reserve(tile.verts().size());
            for (const auto& v : tile.verts()) verts.push_back(shift.apply(v));
            tiles.emplace_back(tile.kind(), std::move(verts), tile.provenance() + "+t");
        }
        bool clash = false;
        for (const auto& tile : tiles) {
            if (out.patch.conflicts_with(tile)) {
                clash = true;
                break;
            }
        }
        if (clash) {
            ++out.stats.skipped;
            continue;
        }
        for (const auto& tile : tiles) out.patch.insert(tile);
        ++out.stats.placed;
    }
    out.report.conflicts = out.patch.conflict_log();
    out.stats.covered_area = out.patch.total_area();
    out.stats.disk_area = M_PI * radius * radius;
    double unit = 0.4 * sin36();
    out.stats.coverage = out.stats.covered_area.to_double() * unit / out.stats.disk_area;
    return out;
}

/// Distinct five-fold centers with offsets |n_i| <= bound, each returned
/// with its solved order-5 stabilizer verified.
inline std::vector<std::pair<std::array<long long, 4>, Coord5>> five_fold_centers(int bound) {
    if (bound < 0) throw std::invalid_argument("five_fold_centers: bound must be >= 0");
    std::vector<std::pair<std::array<long long, 4>, Coord5>> out;
    std::set<Coord5> seen;
    for (long long n1 = -bound; n1 <= bound; ++n1)
        for (long long n2 = -bound; n2 <= bound; ++n2)
            for (long long n3 = -bound; n3 <= bound; ++n3)
                for (long long n4 = -bound; n4 <= bound; ++n4) {
                    Coord5 c = fixed_point(n1, n2, n3, n4);
                    if (!seen.insert(c).second) continue;
                    Stabilizer st = stabilizer_of(c); // throws if not a center
                    bool ok = false;
                    for (const auto& e : st.elements)
                        if (e.perm() == Perm::five_cycle() && e.apply(c) == c) ok = true;
                    if (!ok)
                        throw TilingMismatch("five_fold_centers: missing order-5 rotation");
                    out.push_back({{n1, n2, n3, n4}, c});
                }
    return out;
}

/// Edge bookkeeping over a patch: every edge is keyed by its canonical
/// endpoint pair. In a clean patch interior edges are shared by exactly
/// two tiles and boundary edges by one.
struct EdgeAudit {
    long interior = 0;
    long boundary = 0;
    long bad = 0;
    bool directed_consistent = true;
};

inline EdgeAudit edge_audit(const Patch& p) {
    std::map<std::pair<Coord5, Coord5>, std::pair<int, int>> count; // (fwd, rev)
    for (const auto& [key, t] : p) {
        const auto& vs = t.verts();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            Coord5 u = vs[i], v = vs[(i + 1) % vs.size()];
            bool flip = v < u;
            if (flip) std::swap(u, v);
            auto& c = count[{u, v}];
            (flip ? c.second : c.first)++;
        }
    }
    EdgeAudit a;
    for (const auto& [e, c] : count) {
        int total = c.first + c.second;
        if (total == 1) ++a.boundary;
        else if (total == 2) {
            ++a.interior;
            if (c.first != 1 || c.second != 1) a.directed_consistent = false;
        } else ++a.bad;
    }
    return a;
}

/// Area enclosed by the patch boundary, walked as a single closed loop;
/// throws if the boundary is not a single loop. Together with the species
/// area sum this pins down gap- and overlap-freeness of simply connected
/// patches.
inline GoldenNumber boundary_loop_area(const Patch& p) {
    std::map<Coord5, std::vector<Coord5>> out_edges;
    std::map<std::pair<Coord5, Coord5>, int> undirected;
    for (const auto& [key, t] : p) {
        const auto& vs = t.verts();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            Coord5 u = vs[i], v = vs[(i + 1) % vs.size()];
            Coord5 a = u, b = v;
            if (b < a) std::swap(a, b);
            undirected[{a, b}]++;
        }
    }
    std::size_t boundary_edges = 0;
    for (const auto& [key, t] : p) {
        const auto& vs = t.verts();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            Coord5 u = vs[i], v = vs[(i + 1) % vs.size()];
            Coord5 a = u, b = v;
            if (b < a) std::swap(a, b);
            if (undirected[{a, b}] == 1) {
                out_edges[u].push_back(v);
                ++boundary_edges;
            }
        }
    }
    if (out_edges.empty()) return GoldenNumber(0);
    for (auto& [u, vs] : out_edges) std::sort(vs.begin(), vs.end());
    Coord5 start = out_edges.begin()->first;
    GoldenNumber doubled;
    Coord5 cur = start;
    std::size_t steps = 0;
    do {
        auto it = out_edges.find(cur);
        if (it == out_edges.end() || it->second.empty())
            throw TilingMismatch("boundary walk: open boundary");
        Coord5 next = it->second.front();
        it->second.erase(it->second.begin());
        doubled += cross_par(cur, next);
        cur = next;
        if (++steps > boundary_edges)
            throw TilingMismatch("boundary walk: did not close");
    } while (!(cur == start));
    if (steps != boundary_edges)
        throw TilingMismatch("boundary walk: boundary is not a single loop");
    return GoldenNumber(Rational(1, 2)) * doubled;
}

} // namespace pentatile
