#include "digiplane/core.hpp"

#include <algorithm>
#include <cstdlib>

namespace digiplane {

std::string to_string(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

bool cu_adjacent(std::span<const int> a, std::span<const int> b, int u) {
    if (a.size() != b.size())
        return false;
    int differing = 0;
    bool equal = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int d = std::abs(a[i] - b[i]);
        if (d == 0)
            continue;
        equal = false;
        if (d != 1)
            return false;
        ++differing;
    }
    return !equal && differing <= u;
}

bool adjacent(Point p, Point q, Adjacency kind) {
    const int c[2] = {p.x, p.y};
    const int d[2] = {q.x, q.y};
    return cu_adjacent(c, d, static_cast<int>(kind));
}

bool adjacent_or_equal(Point p, Point q, Adjacency kind) {
    return p == q || adjacent(p, q, kind);
}

const char* err_name(Err e) {
    switch (e) {
        case Err::None: return "None";
        case Err::EmptyInput: return "EmptyInput";
        case Err::DomainError: return "DomainError";
        case Err::NotCollinear: return "NotCollinear";
        case Err::NotConnected: return "NotConnected";
        case Err::BadSlope: return "BadSlope";
        case Err::NotConvexDisk: return "NotConvexDisk";
        case Err::NotAClosedCurve: return "NotAClosedCurve";
        case Err::HoleDetected: return "HoleDetected";
        case Err::NotAVertex: return "NotAVertex";
        case Err::NoSeparation: return "NoSeparation";
        case Err::SharedSetNotEdge: return "SharedSetNotEdge";
        case Err::GlueMismatch: return "GlueMismatch";
        case Err::IntersectionNotSingleton: return "IntersectionNotSingleton";
        case Err::CrossAdjacency: return "CrossAdjacency";
        case Err::WindowTooSmall: return "WindowTooSmall";
        case Err::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::vector<Point> Window::points() const {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(std::max(0LL, area())));
    for (int x = x0; x <= x1; ++x)
        for (int y = y0; y <= y1; ++y)
            out.push_back({x, y});
    return out;
}

Image::Image(std::vector<Point> pts, Adjacency kind) : points_(std::move(pts)), kind_(kind) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool Image::contains(Point p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

std::size_t Image::index_of(Point p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p)
        throw std::out_of_range("Image::index_of: point not in image " + to_string(p));
    return static_cast<std::size_t>(it - points_.begin());
}

Window Image::bounding_box() const {
    if (points_.empty())
        throw std::logic_error("Image::bounding_box: empty image");
    Window w{points_.front().x, points_.back().x, points_.front().y, points_.front().y};
    for (const Point& p : points_) {
        w.y0 = std::min(w.y0, p.y);
        w.y1 = std::max(w.y1, p.y);
    }
    return w;
}

Image image_union(const Image& a, const Image& b) {
    std::vector<Point> pts = a.points();
    pts.insert(pts.end(), b.points().begin(), b.points().end());
    return Image(std::move(pts), a.kind());
}

std::vector<Point> intersection_points(const Image& a, const Image& b) {
    std::vector<Point> out;
    std::set_intersection(a.points().begin(), a.points().end(), b.points().begin(),
                          b.points().end(), std::back_inserter(out));
    return out;
}

SelfMap::SelfMap(Image dom, std::vector<Point> vals) : domain(std::move(dom)), values(std::move(vals)) {
    if (domain.size() != values.size())
        throw std::invalid_argument("SelfMap: table size does not match domain size");
}

Result<std::vector<Point>> closed_neighborhood(const Image& X, Point p) {
    if (!X.contains(p))
        return {Err::DomainError, "point " + to_string(p) + " not in image"};
    std::vector<Point> out;
    for (const Point& q : X.points())
        if (adjacent_or_equal(p, q, X.kind()))
            out.push_back(q);
    return out;
}

std::vector<std::vector<Point>> components(const Image& X) {
    const auto& pts = X.points();
    const std::size_t n = pts.size();
    std::vector<int> label(n, -1);
    std::vector<std::vector<Point>> parts;
    for (std::size_t i = 0; i < n; ++i) {
        if (label[i] >= 0)
            continue;
        int id = static_cast<int>(parts.size());
        parts.emplace_back();
        std::vector<std::size_t> stack{i};
        label[i] = id;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            parts[id].push_back(pts[cur]);
            for (int dx = -1; dx <= 1; ++dx) {
                for (int dy = -1; dy <= 1; ++dy) {
                    Point q{pts[cur].x + dx, pts[cur].y + dy};
                    if (!adjacent(pts[cur], q, X.kind()) || !X.contains(q))
                        continue;
                    std::size_t j = X.index_of(q);
                    if (label[j] < 0) {
                        label[j] = id;
                        stack.push_back(j);
                    }
                }
            }
        }
        std::sort(parts[id].begin(), parts[id].end());
    }
    return parts;
}

Result<bool> is_continuous(const SelfMap& f, const Image& source, const Image& target) {
    for (const Point& v : f.values)
        if (!target.contains(v))
            return {Err::DomainError, "value " + to_string(v) + " outside target image"};
    const auto& pts = source.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (adjacent(pts[i], pts[j], source.kind()) &&
                !adjacent_or_equal(f.apply(pts[i]), f.apply(pts[j]), target.kind()))
                return false;
    return true;
}

Result<bool> is_continuous(const SelfMap& f) {
    return is_continuous(f, f.domain, f.domain);
}

bool no_common_neighbor(const Image& X, Point p, Point q) {
    for (const Point& y : X.points())
        if (adjacent_or_equal(y, p, X.kind()) && adjacent_or_equal(y, q, X.kind()))
            return false;
    return true;
}

}  // namespace digiplane
