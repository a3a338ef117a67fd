#include "digiplane/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace digiplane {
namespace catalog {

Image make_rectangle(int x0, int x1, int y0, int y1, Adjacency kind) {
    if (x0 > x1 || y0 > y1)
        throw std::invalid_argument("make_rectangle: empty range");
    return Image(Window{x0, x1, y0, y1}.points(), kind);
}

Image make_lattice_triangle(Point a, Point b, Point c) {
    auto cross = [](Point o, Point u, Point v) {
        return (long long)(u.x - o.x) * (v.y - o.y) - (long long)(u.y - o.y) * (v.x - o.x);
    };
    if (cross(a, b, c) < 0)
        std::swap(b, c);  // counterclockwise
    Window box{std::min({a.x, b.x, c.x}), std::max({a.x, b.x, c.x}),
               std::min({a.y, b.y, c.y}), std::max({a.y, b.y, c.y})};
    std::vector<Point> pts;
    for (const Point& p : box.points())
        if (cross(a, b, p) >= 0 && cross(b, c, p) >= 0 && cross(c, a, p) >= 0)
            pts.push_back(p);
    return Image(std::move(pts), Adjacency::c2);
}

Image make_fig1_triangle() {
    return make_lattice_triangle({0, 0}, {4, 0}, {4, 3});
}

Image make_block_u(int n) {
    if (n <= 2)
        throw std::invalid_argument("make_block_u requires n > 2");
    std::vector<Point> pts;
    for (const Point& p : Window{-n, n, -n, n}.points())
        if (!(p.x == 0 && p.y >= 1))
            pts.push_back(p);
    return Image(std::move(pts), Adjacency::c2);
}

TeeExample make_tee() {
    TeeExample out;
    out.x1 = make_rectangle(0, 4, 2, 4);
    out.x2 = make_rectangle(2, 4, 0, 2);
    out.whole = image_union(out.x1, out.x2);
    Image whole = out.whole;
    Retraction square = build_axis_retraction(make_rectangle(0, 4, 0, 4)).value();
    auto eval = [whole, square](Point p) {
        Point q = square(p);  // into [0,4]^2
        if (whole.contains(q))
            return q;
        if (q == Point{0, 1})
            return Point{1, 2};
        if (q == Point{0, 0} || q == Point{1, 1})
            return Point{2, 2};
        if (q == Point{1, 0})
            return Point{2, 1};
        throw std::logic_error("tee retraction: unreachable point " + to_string(q));
    };
    out.r = Retraction(out.whole, "tee-table", std::move(eval));
    return out;
}

AnnulusExample make_annulus() {
    AnnulusExample out;
    std::vector<Point> pts, ring;
    for (const Point& p : Window{-3, 3, -3, 3}.points()) {
        if (p == Point{0, 0})
            continue;
        pts.push_back(p);
        if (std::max(std::abs(p.x), std::abs(p.y)) == 1)
            ring.push_back(p);
    }
    out.x = Image(std::move(pts), Adjacency::c2);
    out.inner_ring = Image(std::move(ring), Adjacency::c2);

    auto quadrant = [&](auto pred) {
        std::vector<Point> qp;
        for (const Point& p : out.x.points())
            if (pred(p))
                qp.push_back(p);
        return Image(std::move(qp), Adjacency::c2);
    };
    out.parts[0] = quadrant([](Point p) { return 1 <= p.x && p.x <= 3 && -p.x <= p.y && p.y <= p.x; });
    out.parts[1] = quadrant([](Point p) { return 1 <= p.y && p.y <= 3 && -p.y <= p.x && p.x <= p.y; });
    out.parts[2] = quadrant([](Point p) { return -3 <= p.x && p.x <= -1 && p.x <= p.y && p.y <= -p.x; });
    out.parts[3] = quadrant([](Point p) { return -3 <= p.y && p.y <= -1 && p.y <= p.x && p.x <= -p.y; });

    Image x = out.x;
    auto parts = out.parts;
    auto eval = [x, parts](Point p) {
        if (!x.contains(p)) {
            // Clamp outside points into the square; the hole itself has no
            // continuous image (the annulus is not a plane retract) and is
            // sent to a fixed ring point for totality.
            if (p == Point{0, 0})
                return Point{1, 0};
            p = {std::clamp(p.x, -3, 3), std::clamp(p.y, -3, 3)};
        }
        const bool in1 = parts[0].contains(p), in2 = parts[1].contains(p);
        const bool in3 = parts[2].contains(p), in4 = parts[3].contains(p);
        const auto [px, py] = p;
        if ((in1 && py <= -1) || (in4 && px >= 1))
            return Point{1, -1};
        if (in1 && -1 <= py && py <= 1)
            return Point{1, py};
        if ((in1 && py >= 1) || (in2 && px >= 1))
            return Point{1, 1};
        if (in2 && -1 <= px && px <= 1)
            return Point{px, 1};
        if ((in2 && px <= -1) || (in3 && py >= 1))
            return Point{-1, 1};
        if (in3 && -1 <= py && py <= 1)
            return Point{-1, py};
        if ((in3 && py <= -1) || (in4 && px <= -1))
            return Point{-1, -1};
        if (in4 && -1 <= px && px <= 1)
            return Point{px, -1};
        throw std::logic_error("annulus retraction: uncovered point " + to_string(p));
    };
    out.r = Retraction(out.inner_ring, "annulus-ring", std::move(eval));
    return out;
}

Result<Image> make_scc_diamond(int k) {
    if (k == 4)
        return Image({{0, 0}, {1, 1}, {2, 0}, {1, -1}}, Adjacency::c2);
    if (k == 8) {
        std::vector<Point> pts;
        for (const Point& p : Window{-1, 1, -1, 1}.points())
            if (p != Point{0, 0})
                pts.push_back(p);
        return Image(std::move(pts), Adjacency::c2);
    }
    return {Err::DomainError, "only 4-point and 8-point curves are supported"};
}

WedgePair make_wedge_45_45() {
    return {make_lattice_triangle({0, 0}, {2, 2}, {2, 0}),
            make_lattice_triangle({0, 0}, {-2, -2}, {-2, 0})};
}

}  // namespace catalog
}  // namespace digiplane
