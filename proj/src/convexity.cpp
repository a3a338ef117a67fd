#include "digiplane/convexity.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace digiplane {

bool ClosedCurve::contains(Point p) const {
    return std::find(cycle.begin(), cycle.end(), p) != cycle.end();
}

std::vector<Point> hull_vertices(const std::vector<Point>& points) {
    std::vector<Point> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2)
        return pts;
    auto cross = [](Point o, Point a, Point b) {
        return (long long)(a.x - o.x) * (b.y - o.y) - (long long)(a.y - o.y) * (b.x - o.x);
    };
    // Andrew's monotone chain, strict turns only.
    std::vector<Point> lower, upper;
    for (const Point& p : pts) {
        while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0)
            lower.pop_back();
        lower.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0)
            upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    if (lower.empty())  // all collinear
        return {pts.front(), pts.back()};
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

namespace {

// Directions in counterclockwise order.
constexpr std::array<Point, 8> kDirs = {{{1, 0}, {1, 1}, {0, 1}, {-1, 1},
                                         {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};

int dir_index(Point d) {
    for (int i = 0; i < 8; ++i)
        if (kDirs[i] == d)
            return i;
    return -1;
}

// Flood fill of the c1-components of (window \ blocked). Returns labels
// indexed by window cell, plus the label of the component touching the
// frame (the exterior), or -1 if the frame is blocked somewhere.
struct ComplementComponents {
    std::map<Point, int> label;
    int exterior = -1;
    int count = 0;
};

ComplementComponents complement_components(const Window& w, const Image& blocked) {
    ComplementComponents out;
    for (int x = w.x0; x <= w.x1; ++x) {
        for (int y = w.y0; y <= w.y1; ++y) {
            Point p{x, y};
            if (blocked.contains(p) || out.label.count(p))
                continue;
            int id = out.count++;
            std::vector<Point> stack{p};
            out.label[p] = id;
            bool touches_frame = false;
            while (!stack.empty()) {
                Point cur = stack.back();
                stack.pop_back();
                if (cur.x == w.x0 || cur.x == w.x1 || cur.y == w.y0 || cur.y == w.y1)
                    touches_frame = true;
                for (Point d : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) {
                    Point q = cur + d;
                    if (!w.contains(q) || blocked.contains(q) || out.label.count(q))
                        continue;
                    out.label[q] = id;
                    stack.push_back(q);
                }
            }
            if (touches_frame)
                out.exterior = id;
        }
    }
    return out;
}

}  // namespace

Result<DiskReport> decompose_disk(const Image& D) {
    if (D.empty())
        return {Err::EmptyInput, "decompose_disk: empty image"};
    const Window win = D.bounding_box().padded(2);

    // Exterior = unbounded c1-component of the complement of D.
    ComplementComponents comp = complement_components(win, D);
    auto in_exterior = [&](Point p) {
        if (!win.contains(p))
            return true;  // beyond the padded window is certainly exterior
        auto it = comp.label.find(p);
        return it != comp.label.end() && it->second == comp.exterior;
    };

    // Boundary = points of D c1-adjacent to the exterior. (c2-adjacency
    // would also sweep up the first inner layer along slanted edges.)
    std::set<Point> boundary;
    for (const Point& p : D.points())
        for (Point d : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}})
            if (in_exterior(p + d))
                boundary.insert(p);

    if (boundary.empty())
        return {Err::NotAClosedCurve, "image has no boundary points"};
    const Point start = *boundary.begin();

    // Trace the contour counterclockwise. From each point, sweep the
    // eight directions counterclockwise starting just after the backtrack
    // direction; the first point of D encountered is the successor.
    std::vector<Point> cycle;
    std::set<Point> seen;
    Point cur = start;
    int back = 4;  // the exterior lies west of the canonically least boundary point
    const std::size_t limit = 4 * boundary.size() + 8;
    while (true) {
        if (cycle.size() > limit)
            return {Err::NotAClosedCurve, "contour trace does not close"};
        cycle.push_back(cur);
        Point next;
        int next_dir = -1;
        for (int k = 1; k <= 8; ++k) {
            int d = (back + k) % 8;
            Point q = cur + kDirs[d];
            if (D.contains(q)) {
                next = q;
                next_dir = d;
                break;
            }
        }
        if (next_dir < 0)
            return {Err::NotAClosedCurve, "isolated point " + to_string(cur)};
        if (next == start)
            break;
        if (seen.count(next))
            return {Err::NotAClosedCurve,
                    "contour revisits " + to_string(next) + " before closing"};
        seen.insert(next);
        cur = next;
        back = (next_dir + 4) % 8;
    }

    if (cycle.size() < 4)
        return {Err::NotAClosedCurve, "contour has fewer than 4 points"};
    for (const Point& p : cycle)
        if (!boundary.count(p))
            return {Err::NotAClosedCurve, "contour passes through non-boundary point " + to_string(p)};
    if (cycle.size() != boundary.size())
        return {Err::NotAClosedCurve,
                "boundary points cannot be cyclically ordered (contour misses some)"};

    // The complement of the curve must split into the exterior plus at
    // most one finite component, which must be exactly D minus the curve.
    Image curve_img(cycle, Adjacency::c2);
    ComplementComponents cc = complement_components(win, curve_img);
    std::vector<Point> interior;
    std::set<int> finite_ids;
    for (const auto& [p, id] : cc.label) {
        if (id == cc.exterior)
            continue;
        finite_ids.insert(id);
        if (!D.contains(p))
            return {Err::HoleDetected,
                    "complement point " + to_string(p) + " is enclosed but not in the image"};
        interior.push_back(p);
    }
    if (finite_ids.size() > 1)
        return {Err::NotAClosedCurve, "curve complement has more than two components"};
    for (const Point& p : D.points())
        if (!curve_img.contains(p) &&
            !std::binary_search(interior.begin(), interior.end(), p))
            return {Err::NotAClosedCurve,
                    "image point " + to_string(p) + " lies outside its bounding curve"};

    DiskReport rep;
    rep.disk = Image(D.points(), Adjacency::c2);
    rep.curve = ClosedCurve{cycle};
    rep.interior = std::move(interior);

    // Split the cycle into maximal runs of constant step direction.
    const std::size_t m = cycle.size();
    auto step = [&](std::size_t i) { return cycle[(i + 1) % m] - cycle[i]; };
    std::size_t first = 0;
    while (first < m && step((first + m - 1) % m) == step(first))
        ++first;
    if (first == m)
        return {Err::NotAClosedCurve, "contour is a single segment"};  // cannot close
    std::size_t i = first;
    do {
        Point d = step(i);
        std::size_t j = i;
        while (step((j + 1) % m) == d)
            j = (j + 1) % m;
        // Edge runs from cycle[i] to cycle[j+1]; the next edge starts at its
        // endpoint, which is a vertex.
        Point a = cycle[i];
        Point b = cycle[(j + 1) % m];
        auto so = classify_segment(segment_points(a, b));
        rep.edges.push_back(CurveEdge{*so.value().orientation, a, b});
        rep.vertices.push_back(b);
        // Interior angle: 180 degrees minus the left-turn angle between this
        // edge and the next (traversal is counterclockwise).
        Point dn = step((j + 1) % m);
        int ai = dir_index(d), an = dir_index(dn);
        int turn = (((an - ai + 4) % 8 + 8) % 8 - 4) * 45;  // in (-180, 180]
        rep.angles.push_back(180 - turn);
        i = (j + 1) % m;
    } while (i != first);

    return rep;
}

Result<int> interior_angle(const DiskReport& report, Point v) {
    for (std::size_t i = 0; i < report.vertices.size(); ++i)
        if (report.vertices[i] == v)
            return report.angles[i];
    return {Err::NotAVertex, to_string(v) + " is not a vertex of the bounding curve"};
}

const char* convexity_kind_name(ConvexityReport::Kind k) {
    switch (k) {
        case ConvexityReport::Kind::SinglePoint: return "SinglePoint";
        case ConvexityReport::Kind::Segment: return "Segment";
        case ConvexityReport::Kind::ConvexDisk: return "ConvexDisk";
        case ConvexityReport::Kind::NotConvex: return "NotConvex";
    }
    return "Unknown";
}

ConvexityReport is_convex(const Image& Y) {
    ConvexityReport out;
    if (Y.empty()) {
        out.reason = "empty image";
        return out;
    }
    if (Y.size() == 1) {
        out.kind = ConvexityReport::Kind::SinglePoint;
        return out;
    }
    auto seg = classify_segment(Y.points());
    if (seg.ok()) {
        out.kind = ConvexityReport::Kind::Segment;
        out.segment = seg.value();
        return out;
    }
    auto disk = decompose_disk(Y);
    if (!disk.ok()) {
        out.reason = std::string(err_name(disk.code())) + ": " + disk.error().message;
        return out;
    }
    std::vector<Point> curve_vertices = disk.value().vertices;
    std::sort(curve_vertices.begin(), curve_vertices.end());
    std::vector<Point> hull = hull_vertices(Y.points());
    std::vector<Point> hull_sorted = hull;
    std::sort(hull_sorted.begin(), hull_sorted.end());
    if (curve_vertices != hull_sorted) {
        out.reason = "bounding-curve vertices differ from the hull vertices";
        return out;
    }
    out.kind = ConvexityReport::Kind::ConvexDisk;
    out.disk = disk.value();
    out.hull = std::move(hull);
    return out;
}

}  // namespace digiplane
