#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "digiplane/catalog.hpp"
#include "digiplane/convexity.hpp"

using namespace digiplane;

namespace {

Image diamond(int radius) {
    std::vector<Point> pts;
    for (const Point& p : Window{-radius, radius, -radius, radius}.points())
        if (std::abs(p.x) + std::abs(p.y) <= radius)
            pts.push_back(p);
    return Image(pts, Adjacency::c2);
}

}  // namespace

TEST_CASE("hull_vertices on standard shapes") {
    CHECK(hull_vertices(catalog::make_fig1_triangle().points()) ==
          std::vector<Point>{{0, 0}, {4, 0}, {4, 3}});
    CHECK(hull_vertices(catalog::make_rectangle(0, 2, 0, 2).points()) ==
          std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(hull_vertices({{3, 3}}) == std::vector<Point>{{3, 3}});
    CHECK(hull_vertices({{0, 0}, {1, 1}, {2, 2}}) ==
          std::vector<Point>{{0, 0}, {2, 2}});
    CHECK(hull_vertices(diamond(2).points()) ==
          std::vector<Point>{{-2, 0}, {0, -2}, {2, 0}, {0, 2}});
}

TEST_CASE("decompose_disk on small squares") {
    auto r1 = decompose_disk(catalog::make_rectangle(0, 1, 0, 1));
    REQUIRE(r1.ok());
    CHECK(r1.value().curve.size() == 4);
    CHECK(r1.value().interior.empty());

    auto r2 = decompose_disk(catalog::make_rectangle(0, 2, 0, 2));
    REQUIRE(r2.ok());
    CHECK(r2.value().curve.size() == 8);
    CHECK(r2.value().interior == std::vector<Point>{{1, 1}});
    CHECK(r2.value().edges.size() == 4);
    for (int a : r2.value().angles)
        CHECK(a == 90);
}

TEST_CASE("decompose_disk separates curve and interior of the diamond") {
    Image d = diamond(2);
    auto rep = decompose_disk(d);
    REQUIRE(rep.ok());
    CHECK(rep.value().curve.size() == 8);
    CHECK(rep.value().interior.size() == d.size() - 8);
    // Curve points are exactly those c1-adjacent to the complement.
    for (const Point& p : d.points()) {
        bool edge_of_d = false;
        for (Point q : {Point{p.x + 1, p.y}, Point{p.x - 1, p.y},
                        Point{p.x, p.y + 1}, Point{p.x, p.y - 1}})
            edge_of_d |= !d.contains(q);
        CHECK(rep.value().curve.contains(p) == edge_of_d);
    }
    CHECK(rep.value().edges.size() == 4);
    for (int a : rep.value().angles)
        CHECK(a == 90);
}

TEST_CASE("decompose_disk detects holes and degenerate inputs") {
    CHECK(decompose_disk(catalog::make_annulus().x).code() == Err::HoleDetected);
    CHECK(decompose_disk(Image({}, Adjacency::c2)).code() == Err::EmptyInput);
    CHECK(decompose_disk(Image({{0, 0}, {1, 0}}, Adjacency::c2)).code() ==
          Err::NotAClosedCurve);
    // Two components: the trace can't bound the whole image.
    CHECK_FALSE(decompose_disk(Image({{0, 0}, {0, 1}, {1, 0}, {1, 1},
                                      {5, 5}, {5, 6}, {6, 5}, {6, 6}},
                                     Adjacency::c2))
                    .ok());
}

TEST_CASE("interior_angle at named vertices") {
    auto dia = decompose_disk(diamond(2));
    REQUIRE(dia.ok());
    auto a = interior_angle(dia.value(), {2, 0});
    REQUIRE(a.ok());
    CHECK(a.value() == 90);

    // Fig. 1 triangle minus its apex: bottom edge meets the slanted edge.
    std::vector<Point> pts;
    for (const Point& p : catalog::make_fig1_triangle().points())
        if (p != Point{0, 0})
            pts.push_back(p);
    auto tri = decompose_disk(Image(pts, Adjacency::c2));
    REQUIRE(tri.ok());
    CHECK(interior_angle(tri.value(), {4, 0}).value() == 90);
    CHECK(interior_angle(tri.value(), {1, 0}).value() == 45);
    CHECK(interior_angle(tri.value(), {3, 1}).code() == Err::NotAVertex);
}

TEST_CASE("is_convex classifies points, segments and disks") {
    CHECK(is_convex(Image({{7, -3}}, Adjacency::c2)).kind ==
          ConvexityReport::Kind::SinglePoint);

    auto seg = is_convex(Image({{0, 0}, {1, 1}, {2, 2}}, Adjacency::c2));
    CHECK(seg.kind == ConvexityReport::Kind::Segment);
    REQUIRE(seg.segment.has_value());
    CHECK(*seg.segment->orientation == Orientation::SlopePlus);

    auto sq = is_convex(catalog::make_rectangle(0, 4, 0, 4));
    CHECK(sq.kind == ConvexityReport::Kind::ConvexDisk);
    CHECK(sq.hull == std::vector<Point>{{0, 0}, {4, 0}, {4, 4}, {0, 4}});

    CHECK(is_convex(catalog::make_fig1_triangle()).kind ==
          ConvexityReport::Kind::NotConvex);
    std::vector<Point> minus_origin;
    for (const Point& p : catalog::make_fig1_triangle().points())
        if (p != Point{0, 0})
            minus_origin.push_back(p);
    auto tri = is_convex(Image(minus_origin, Adjacency::c2));
    CHECK(tri.kind == ConvexityReport::Kind::ConvexDisk);
    CHECK(tri.hull == std::vector<Point>{{1, 0}, {4, 0}, {4, 3}});

    CHECK(is_convex(diamond(3)).kind == ConvexityReport::Kind::ConvexDisk);
}

TEST_CASE("is_convex rejects non-convex images") {
    CHECK(is_convex(catalog::make_block_u(3)).kind ==
          ConvexityReport::Kind::NotConvex);
    CHECK(is_convex(catalog::make_annulus().x).kind ==
          ConvexityReport::Kind::NotConvex);
    // An L-shape: hull vertex set disagrees with the curve's edge endpoints.
    Image ell = image_union(catalog::make_rectangle(0, 4, 0, 1),
                            catalog::make_rectangle(0, 1, 0, 4));
    CHECK(is_convex(ell).kind == ConvexityReport::Kind::NotConvex);
    // Disconnected.
    CHECK(is_convex(Image({{0, 0}, {3, 3}}, Adjacency::c2)).kind ==
          ConvexityReport::Kind::NotConvex);
    CHECK(is_convex(Image({}, Adjacency::c2)).kind ==
          ConvexityReport::Kind::NotConvex);
}

TEST_CASE("forbidden angle: a slanted notch is not convex") {
    // Remove one corner point from a square: the notch vertex would need
    // an interior angle of 225 degrees.
    std::vector<Point> pts;
    for (const Point& p : catalog::make_rectangle(0, 3, 0, 3).points())
        if (p != Point{3, 3})
            pts.push_back(p);
    CHECK(is_convex(Image(pts, Adjacency::c2)).kind ==
          ConvexityReport::Kind::NotConvex);
}
