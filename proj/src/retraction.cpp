#include "digiplane/retraction.hpp"

#include <algorithm>
#include <cassert>
#include <memory>

namespace digiplane {

namespace {

int sgn(long long v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

Point transpose(Point p) { return {p.y, p.x}; }
Point mirror_x(Point p) { return {-p.x, p.y}; }

Result<std::vector<std::pair<int, int>>> contiguous_slices(const Image& X, Orientation o,
                                                           int lo, int hi) {
    std::vector<std::pair<int, int>> slice(static_cast<std::size_t>(hi - lo + 1),
                                           {INT32_MAX, INT32_MIN});
    std::vector<int> count(slice.size(), 0);
    for (const Point& p : X.points()) {
        int b = line_form(o, p);
        // Parameter along a line of this orientation: y on a vertical
        // line, x on all others.
        int along = o == Orientation::Vertical ? p.y : p.x;
        auto& s = slice[static_cast<std::size_t>(b - lo)];
        s.first = std::min(s.first, along);
        s.second = std::max(s.second, along);
        ++count[static_cast<std::size_t>(b - lo)];
    }
    for (std::size_t i = 0; i < slice.size(); ++i)
        if (count[i] == 0 || count[i] != slice[i].second - slice[i].first + 1)
            return {Err::NotConvexDisk, "image has a gapped or empty " +
                                            std::string(orientation_name(o)) + " slice"};
    return slice;
}

}  // namespace

Retraction identity_retraction(const Image& X) {
    return Retraction(X, "identity", [](Point p) { return p; });
}

Retraction table_retraction(Image target, std::map<Point, Point> table,
                            std::function<Point(Point)> fallback) {
    auto tbl = std::make_shared<std::map<Point, Point>>(std::move(table));
    auto tgt = std::make_shared<Image>(target);
    auto eval = [tbl, tgt, fallback](Point p) {
        if (tgt->contains(p))
            return p;
        auto it = tbl->find(p);
        if (it != tbl->end())
            return it->second;
        if (fallback)
            return fallback(p);
        // Nearest tabled key, ties broken canonically.
        Point best{};
        long long best_d = -1;
        for (const auto& [k, v] : *tbl) {
            long long dx = k.x - p.x, dy = k.y - p.y;
            long long d = dx * dx + dy * dy;
            if (best_d < 0 || d < best_d) {
                best_d = d;
                best = k;
            }
        }
        return tbl->at(best);
    };
    return Retraction(std::move(target), "table", std::move(eval));
}

Result<Retraction> build_axis_retraction(const Image& X, Orientation sandwich) {
    if (sandwich != Orientation::Vertical && sandwich != Orientation::Horizontal)
        return {Err::DomainError, "axis retraction requires an axis-parallel orientation"};
    ConvexityReport rep = is_convex(X);
    if (rep.kind != ConvexityReport::Kind::ConvexDisk)
        return {Err::NotConvexDisk, "axis retraction requires a convex disk"};
    if (sandwich == Orientation::Horizontal) {
        // Transpose is a lattice isomorphism swapping rows and columns.
        std::vector<Point> pts;
        for (const Point& p : X.points())
            pts.push_back(transpose(p));
        auto inner = build_axis_retraction(Image(std::move(pts), Adjacency::c2),
                                           Orientation::Vertical);
        if (!inner.ok())
            return inner.error();
        Retraction rt = inner.value();
        return Retraction(X, "axis-horizontal",
                          [rt](Point p) { return transpose(rt(transpose(p))); });
    }

    Window box = X.bounding_box();
    auto cols = contiguous_slices(X, Orientation::Vertical, box.x0, box.x1);
    if (!cols.ok())
        return cols.error();
    // Column slices in y: recompute as (ymin, ymax) per column.
    std::vector<std::pair<int, int>> col(static_cast<std::size_t>(box.x1 - box.x0 + 1),
                                         {INT32_MAX, INT32_MIN});
    for (const Point& p : X.points()) {
        auto& s = col[static_cast<std::size_t>(p.x - box.x0)];
        s.first = std::min(s.first, p.y);
        s.second = std::max(s.second, p.y);
    }
    auto eval = [box, col](Point p) {
        int cx = std::clamp(p.x, box.x0, box.x1);
        auto [lo, hi] = col[static_cast<std::size_t>(cx - box.x0)];
        return Point{cx, std::clamp(p.y, lo, hi)};
    };
    return Retraction(X, "axis-vertical", std::move(eval));
}

namespace {

// Nearest point of the curve in the Euclidean metric, ties broken toward
// the canonically smaller point. For a point outside a convex disk this
// is never an interior point, and where the sandwich-line case analysis
// (perpendicular foot, westward tie, nearest endpoint) is consistent it
// produces the same values; unlike the literal case analysis it stays
// continuous when a sandwich line meets the disk in a single corner.
Point nearest_curve_point(const std::vector<Point>& curve, Point p) {
    Point best = curve.front();
    long long best_d = INT64_MAX;
    for (Point q : curve) {
        long long dx = q.x - p.x, dy = q.y - p.y;
        long long d = dx * dx + dy * dy;
        if (d < best_d || (d == best_d && q < best)) {
            best_d = d;
            best = q;
        }
    }
    return best;
}

}  // namespace

Result<Retraction> build_slanted_retraction(const Image& X, int slope) {
    if (slope != -1 && slope != 1)
        return {Err::DomainError, "slope must be -1 or +1"};
    ConvexityReport rep = is_convex(X);
    if (rep.kind != ConvexityReport::Kind::ConvexDisk)
        return {Err::NotConvexDisk, "slanted retraction requires a convex disk"};
    if (slope == 1) {
        // Conjugate the slope -1 construction with the reflection x -> -x.
        std::vector<Point> pts;
        for (const Point& p : X.points())
            pts.push_back(mirror_x(p));
        auto inner = build_slanted_retraction(Image(std::move(pts), Adjacency::c2), -1);
        if (!inner.ok())
            return inner.error();
        Retraction rm = inner.value();
        return Retraction(X, "slanted+1", [rm](Point p) { return mirror_x(rm(mirror_x(p))); });
    }

    auto curve = std::make_shared<std::vector<Point>>(rep.disk->curve.cycle);
    Image Xc = X;
    auto eval = [Xc, curve](Point p) {
        if (Xc.contains(p))
            return p;
        return nearest_curve_point(*curve, p);
    };
    return Retraction(X, "slanted-1", std::move(eval));
}

namespace {

// Is sigma (sorted) the full point set of some edge of the report's curve?
bool is_edge_of(const DiskReport& rep, const std::vector<Point>& sigma) {
    for (const CurveEdge& e : rep.edges) {
        std::vector<Point> pts = e.points();
        std::sort(pts.begin(), pts.end());
        if (pts == sigma)
            return true;
    }
    return false;
}

Result<Retraction> build_parallel_retraction(const Image& X, Orientation o) {
    switch (o) {
        case Orientation::Horizontal: return build_axis_retraction(X, Orientation::Horizontal);
        case Orientation::Vertical: return build_axis_retraction(X, Orientation::Vertical);
        case Orientation::SlopeMinus: return build_slanted_retraction(X, -1);
        case Orientation::SlopePlus: return build_slanted_retraction(X, +1);
    }
    return {Err::DomainError, "bad orientation"};
}

// Glue two component retractions along a separation line, checking that
// they agree on the line within a window around the union.
Result<Retraction> glue_retractions(const Image& x1, const Image& x2, const DigitalLine& L,
                                    const Retraction& r1, const Retraction& r2,
                                    std::string scheme) {
    Image target = image_union(x1, x2);
    int s1 = 0;
    for (const Point& p : x1.points())
        if (int s = sgn(L.form(p) - L.offset); s != 0) {
            s1 = s;
            break;
        }
    if (s1 == 0)
        return {Err::GlueMismatch, "first image lies entirely on the separation line"};
    Window w = target.bounding_box().padded(4);
    for (const Point& p : w.points())
        if (L.contains(p) && r1(p) != r2(p))
            return {Err::GlueMismatch, "component retractions disagree at " + to_string(p) +
                                           ": " + to_string(r1(p)) + " vs " + to_string(r2(p))};
    auto eval = [L, s1, r1, r2](Point p) {
        int v = L.form(p) - L.offset;
        return (v == 0 || sgn(v) == s1) ? r1(p) : r2(p);
    };
    return Retraction(std::move(target), std::move(scheme), std::move(eval));
}

}  // namespace

Result<Retraction> build_edge_union_retraction(const Image& x1, const Image& x2) {
    ConvexityReport rep1 = is_convex(x1);
    ConvexityReport rep2 = is_convex(x2);
    if (rep1.kind != ConvexityReport::Kind::ConvexDisk ||
        rep2.kind != ConvexityReport::Kind::ConvexDisk)
        return {Err::NotConvexDisk, "edge union requires two convex disks"};
    std::vector<Point> sigma = intersection_points(x1, x2);
    if (sigma.empty())
        return {Err::SharedSetNotEdge, "images do not intersect"};
    if (!is_edge_of(*rep1.disk, sigma) || !is_edge_of(*rep2.disk, sigma))
        return {Err::SharedSetNotEdge,
                "shared set is not a maximal segment of both bounding curves"};
    auto L = separation_line(x1, x2);
    if (!L.ok())
        return L.error();
    auto r1 = build_parallel_retraction(x1, L.value().orientation);
    if (!r1.ok())
        return r1.error();
    auto r2 = build_parallel_retraction(x2, L.value().orientation);
    if (!r2.ok())
        return r2.error();
    return glue_retractions(x1, x2, L.value(), r1.value(), r2.value(), "edge-union");
}

Result<WedgeCheck> check_wedge(const Image& x1, const Image& x2) {
    std::vector<Point> shared = intersection_points(x1, x2);
    if (shared.size() != 1)
        return {Err::IntersectionNotSingleton,
                "intersection has " + std::to_string(shared.size()) + " points"};
    Point x0 = shared.front();
    for (const Point& p : x1.points()) {
        if (p == x0)
            continue;
        for (const Point& q : x2.points()) {
            if (q == x0)
                continue;
            if (adjacent(p, q, Adjacency::c2))
                return {Err::CrossAdjacency, "cross-adjacent pair " + to_string(p) + ", " +
                                                 to_string(q) + " outside the wedge point"};
        }
    }
    WedgeCheck out{x0, false};
    ConvexityReport rep1 = is_convex(x1);
    ConvexityReport rep2 = is_convex(x2);
    auto is_vertex = [&](const ConvexityReport& rep) {
        if (rep.kind != ConvexityReport::Kind::ConvexDisk)
            return false;
        const auto& vs = rep.disk->vertices;
        return std::find(vs.begin(), vs.end(), x0) != vs.end();
    };
    out.endpoint_of_both = is_vertex(rep1) && is_vertex(rep2);
    return out;
}

Result<Retraction> build_wedge_retraction(const Image& x1, const Image& x2) {
    ConvexityReport rep1 = is_convex(x1);
    ConvexityReport rep2 = is_convex(x2);
    if (rep1.kind != ConvexityReport::Kind::ConvexDisk ||
        rep2.kind != ConvexityReport::Kind::ConvexDisk)
        return {Err::NotConvexDisk, "wedge retraction requires two convex disks"};
    auto wc = check_wedge(x1, x2);
    if (!wc.ok())
        return wc.error();
    auto L = separation_line(x1, x2);
    if (!L.ok())
        return L.error();
    auto r1 = build_parallel_retraction(x1, L.value().orientation);
    if (!r1.ok())
        return r1.error();
    auto r2 = build_parallel_retraction(x2, L.value().orientation);
    if (!r2.ok())
        return r2.error();
    return glue_retractions(x1, x2, L.value(), r1.value(), r2.value(), "wedge");
}

Result<VerifyReport> verify_retraction(const Retraction& r, const Window& window) {
    if (r.target().empty())
        return {Err::DomainError, "retraction has an empty target"};
    Window box = r.target().bounding_box();
    if (!window.covers(box))
        return {Err::WindowTooSmall, "window does not contain the target's bounding box"};
    VerifyReport rep;
    auto fail = [&](std::string msg) {
        if (rep.pass) {
            rep.pass = false;
            rep.failure = std::move(msg);
        }
    };
    for (const Point& p : r.target().points()) {
        if (r(p) != p) {
            fail("not the identity at target point " + to_string(p) + " -> " + to_string(r(p)));
            return rep;
        }
    }
    for (const Point& p : window.points()) {
        Point q = r(p);
        if (!r.target().contains(q)) {
            fail("image point " + to_string(q) + " of " + to_string(p) + " is outside the target");
            return rep;
        }
        // Forward neighbors cover each adjacent pair once.
        for (Point d : {Point{1, 0}, Point{0, 1}, Point{1, 1}, Point{1, -1}}) {
            Point n = p + d;
            if (!window.contains(n))
                continue;
            if (!adjacent_or_equal(q, r(n), Adjacency::c2)) {
                fail("continuity fails on pair " + to_string(p) + ", " + to_string(n) +
                     " -> " + to_string(q) + ", " + to_string(r(n)));
                rep.bad_pair = {p, n};
                return rep;
            }
        }
    }
    if (window.covers(box, 2)) {
        auto disk = decompose_disk(r.target());
        if (disk.ok()) {
            rep.boundary_checked = true;
            const auto& interior = disk.value().interior;
            for (const Point& p : window.points()) {
                if (std::binary_search(interior.begin(), interior.end(), p))
                    continue;
                if (!disk.value().curve.contains(r(p))) {
                    fail("boundary postcondition fails: " + to_string(p) + " -> " +
                         to_string(r(p)) + " is off the bounding curve");
                    return rep;
                }
            }
        }
    }
    return rep;
}

}  // namespace digiplane
