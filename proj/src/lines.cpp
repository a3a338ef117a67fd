#include "digiplane/lines.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "digiplane/convexity.hpp"

namespace digiplane {

const char* orientation_name(Orientation o) {
    switch (o) {
        case Orientation::Horizontal: return "Horizontal";
        case Orientation::Vertical: return "Vertical";
        case Orientation::SlopePlus: return "SlopePlus";
        case Orientation::SlopeMinus: return "SlopeMinus";
    }
    return "Unknown";
}

int line_form(Orientation o, Point p) {
    switch (o) {
        case Orientation::Horizontal: return p.y;
        case Orientation::Vertical: return p.x;
        case Orientation::SlopePlus: return p.y - p.x;
        case Orientation::SlopeMinus: return p.x + p.y;
    }
    return 0;
}

Point orientation_step(Orientation o) {
    switch (o) {
        case Orientation::Horizontal: return {1, 0};
        case Orientation::Vertical: return {0, 1};
        case Orientation::SlopePlus: return {1, 1};
        case Orientation::SlopeMinus: return {1, -1};
    }
    return {0, 0};
}

namespace {

std::optional<Orientation> step_orientation(Point d) {
    if (d.y == 0 && d.x != 0)
        return Orientation::Horizontal;
    if (d.x == 0 && d.y != 0)
        return Orientation::Vertical;
    if (d.x == d.y && d.x != 0)
        return Orientation::SlopePlus;
    if (d.x == -d.y && d.x != 0)
        return Orientation::SlopeMinus;
    return std::nullopt;
}

}  // namespace

Result<SegmentInfo> classify_segment(const std::vector<Point>& points) {
    if (points.empty())
        return {Err::EmptyInput, "classify_segment: empty point list"};
    std::vector<Point> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1)
        return SegmentInfo{std::nullopt, pts.front(), pts.front()};

    Point a = pts.front(), b = pts.back();
    Point d = b - a;
    // Collinearity with respect to the extreme points.
    for (const Point& p : pts) {
        long long cross = (long long)(p.x - a.x) * d.y - (long long)(p.y - a.y) * d.x;
        if (cross != 0)
            return {Err::NotCollinear, "point " + to_string(p) + " off the line through " +
                                           to_string(a) + " and " + to_string(b)};
    }
    auto o = step_orientation(d);
    if (!o)
        return {Err::BadSlope, "extreme points " + to_string(a) + ", " + to_string(b) +
                                   " span slope outside {0, inf, +1, -1}"};
    // For Vertical the canonical sort is already by y; otherwise by x.
    int span = (*o == Orientation::Vertical) ? std::abs(d.y) : std::abs(d.x);
    if ((int)pts.size() != span + 1)
        return {Err::NotConnected, "segment from " + to_string(a) + " to " + to_string(b) +
                                       " has gaps"};
    // Sorted lexicographically a SlopeMinus chain runs from (xmin, ymax).
    Point step = *o == Orientation::SlopeMinus ? Point{1, -1} : orientation_step(*o);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i + 1] - pts[i] != step)
            return {Err::NotConnected, "consecutive points " + to_string(pts[i]) + ", " +
                                           to_string(pts[i + 1]) + " are not adjacent"};
    return SegmentInfo{*o, a, b};
}

std::vector<Point> segment_points(Point a, Point b) {
    if (a == b)
        return {a};
    if (b < a)
        std::swap(a, b);
    Point d = b - a;
    auto o = step_orientation(d);
    if (!o)
        throw std::invalid_argument("segment_points: inadmissible direction");
    Point step = (*o == Orientation::SlopeMinus) ? Point{1, -1} : orientation_step(*o);
    int span = (*o == Orientation::Vertical) ? std::abs(d.y) : std::abs(d.x);
    std::vector<Point> out;
    Point p = a;
    for (int i = 0; i <= span; ++i) {
        out.push_back(p);
        p = p + step;
    }
    return out;
}

Result<std::pair<DigitalLine, DigitalLine>> sandwich_lines(const Image& X, Orientation o) {
    ConvexityReport rep = is_convex(X);
    if (rep.kind != ConvexityReport::Kind::ConvexDisk)
        return {Err::NotConvexDisk, "sandwich_lines requires a convex disk"};
    int lo = line_form(o, X.points().front());
    int hi = lo;
    for (const Point& p : X.points()) {
        lo = std::min(lo, line_form(o, p));
        hi = std::max(hi, line_form(o, p));
    }
    // Both extreme lines meet X only in the minimal bounding curve.
    const auto& cyc = rep.disk->curve.cycle;
    for (const Point& p : X.points())
        if (line_form(o, p) == lo || line_form(o, p) == hi)
            if (std::find(cyc.begin(), cyc.end(), p) == cyc.end())
                return {Err::NotConvexDisk,
                        "extreme line meets the disk off its bounding curve at " + to_string(p)};
    return std::pair<DigitalLine, DigitalLine>{DigitalLine{o, lo}, DigitalLine{o, hi}};
}

namespace {

// Side of X relative to the line: +1 if all form values >= offset,
// -1 if all <= offset, 0 otherwise.
int image_side(const Image& X, const DigitalLine& L) {
    bool above = true, below = true;
    for (const Point& p : X.points()) {
        int v = L.form(p) - L.offset;
        if (v > 0)
            below = false;
        if (v < 0)
            above = false;
    }
    if (above && below)
        return 0;  // entirely on the line; disks never are
    if (above)
        return 1;
    if (below)
        return -1;
    return 0;
}

}  // namespace

Result<DigitalLine> separation_line(const Image& x1, const Image& x2) {
    std::vector<Point> shared = intersection_points(x1, x2);
    if (shared.empty())
        return {Err::NoSeparation, "images are disjoint"};
    const std::array<Orientation, 4> order = {Orientation::Horizontal, Orientation::Vertical,
                                              Orientation::SlopeMinus, Orientation::SlopePlus};
    const bool wedge_mode = shared.size() == 1;
    for (Orientation o : order) {
        int b = line_form(o, shared.front());
        bool aligned = true;
        for (const Point& p : shared)
            if (line_form(o, p) != b)
                aligned = false;
        if (!aligned)
            continue;
        DigitalLine L{o, b};
        int s1 = image_side(x1, L);
        int s2 = image_side(x2, L);
        if (s1 == 0 || s2 == 0 || s1 == s2)
            continue;
        if (wedge_mode) {
            // The line must meet the union only in the wedge point.
            bool clean = true;
            for (const Image* X : {&x1, &x2})
                for (const Point& p : X->points())
                    if (L.contains(p) && p != shared.front())
                        clean = false;
            if (!clean)
                continue;
        }
        return L;
    }
    return {Err::NoSeparation, "no admissible orientation separates the two images"};
}

}  // namespace digiplane
