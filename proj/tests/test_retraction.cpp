#include <doctest.h>

#include <cstdlib>

#include "digiplane/catalog.hpp"
#include "digiplane/retraction.hpp"

using namespace digiplane;

namespace {

Image diamond2() {
    std::vector<Point> pts;
    for (const Point& p : Window{-2, 2, -2, 2}.points())
        if (std::abs(p.x) + std::abs(p.y) <= 2)
            pts.push_back(p);
    return Image(pts, Adjacency::c2);
}

void expect_verified(const Retraction& r, int pad = 3) {
    auto rep = verify_retraction(r, r.target().bounding_box().padded(pad));
    REQUIRE(rep.ok());
    INFO(rep.value().failure);
    CHECK(rep.value().pass);
}

}  // namespace

TEST_CASE("table retraction evaluates the table and the fallback") {
    Image sq = catalog::make_rectangle(0, 1, 0, 1);
    Retraction r = table_retraction(sq, {{{5, 5}, {1, 1}}},
                                    [](Point) { return Point{0, 0}; });
    CHECK(r({0, 1}) == Point{0, 1});  // identity on the target
    CHECK(r({5, 5}) == Point{1, 1});
    CHECK(r({-3, 0}) == Point{0, 0});
    CHECK(r.scheme() == "table");
}

TEST_CASE("axis retraction clamps columns of a square") {
    Image sq = catalog::make_rectangle(0, 4, 0, 4);
    auto r = build_axis_retraction(sq, Orientation::Vertical);
    REQUIRE(r.ok());
    CHECK(r.value()({2, 2}) == Point{2, 2});
    CHECK(r.value()({-2, 3}) == Point{0, 3});
    CHECK(r.value()({5, 9}) == Point{4, 4});
    CHECK(r.value()({-1, -1}) == Point{0, 0});
    expect_verified(r.value());
}

TEST_CASE("axis retraction on the diamond, both sandwich orientations") {
    Image d = diamond2();
    for (Orientation o : {Orientation::Vertical, Orientation::Horizontal}) {
        auto r = build_axis_retraction(d, o);
        REQUIRE(r.ok());
        expect_verified(r.value());
    }
    auto rv = build_axis_retraction(d, Orientation::Vertical);
    CHECK(rv.value()({5, 1}) == Point{2, 0});  // column x=2 is the single point (2,0)
}

TEST_CASE("axis retraction rejects non-disks") {
    CHECK(build_axis_retraction(catalog::make_block_u(3)).code() == Err::NotConvexDisk);
    CHECK(build_axis_retraction(Image({{0, 0}, {1, 0}}, Adjacency::c2)).code() ==
          Err::NotConvexDisk);
    CHECK(build_axis_retraction(Image({}, Adjacency::c2)).code() == Err::EmptyInput);
}

TEST_CASE("slanted retraction on the diamond") {
    Image d = diamond2();
    for (int slope : {-1, 1}) {
        auto r = build_slanted_retraction(d, slope);
        REQUIRE(r.ok());
        CHECK(r.value()({3, 3}) == Point{1, 1});
        CHECK(r.value()({4, 0}) == Point{2, 0});
        CHECK(r.value()({0, 0}) == Point{0, 0});  // identity inside
        expect_verified(r.value());
    }
    CHECK(build_slanted_retraction(d, 2).code() == Err::DomainError);
}

TEST_CASE("slanted retraction verifies on squares and triangles") {
    for (int slope : {-1, 1}) {
        expect_verified(build_slanted_retraction(catalog::make_rectangle(0, 4, 0, 4),
                                                 slope)
                            .value());
        expect_verified(build_slanted_retraction(
                            catalog::make_lattice_triangle({0, 0}, {4, 0}, {4, 4}), slope)
                            .value());
    }
}

TEST_CASE("edge-union retraction for two triangles sharing a slanted edge") {
    Image upper = catalog::make_lattice_triangle({0, 0}, {4, 4}, {0, 4});
    Image lower = catalog::make_lattice_triangle({0, 0}, {4, 4}, {4, 0});
    auto r = build_edge_union_retraction(upper, lower);
    REQUIRE(r.ok());
    CHECK(r.value().target() == image_union(upper, lower));
    expect_verified(r.value());
}

TEST_CASE("edge-union rejects the tee (shared set is not a maximal edge)") {
    auto tee = catalog::make_tee();
    CHECK(build_edge_union_retraction(tee.x1, tee.x2).code() == Err::SharedSetNotEdge);
}

TEST_CASE("check_wedge accepts the 45-45 wedge and rejects cross-adjacency") {
    auto w = catalog::make_wedge_45_45();
    auto c = check_wedge(w.x1, w.x2);
    REQUIRE(c.ok());
    CHECK(c.value().wedge_point == Point{0, 0});
    CHECK(c.value().endpoint_of_both);

    // Two corner squares meeting at the origin: (1,0) and (0,1) etc. are
    // c2-adjacent across the wedge point.
    CHECK(check_wedge(catalog::make_rectangle(-2, 0, -2, 0),
                      catalog::make_rectangle(0, 2, 0, 2))
              .code() == Err::CrossAdjacency);
    CHECK(check_wedge(catalog::make_rectangle(0, 1, 0, 1),
                      catalog::make_rectangle(5, 6, 5, 6))
              .code() == Err::IntersectionNotSingleton);
    CHECK(check_wedge(catalog::make_rectangle(0, 2, 0, 2),
                      catalog::make_rectangle(1, 3, 0, 2))
              .code() == Err::IntersectionNotSingleton);
}

TEST_CASE("wedge retraction verifies on a padded window") {
    auto w = catalog::make_wedge_45_45();
    auto r = build_wedge_retraction(w.x1, w.x2);
    REQUIRE(r.ok());
    CHECK(r.value()({0, 0}) == Point{0, 0});
    auto rep = verify_retraction(r.value(), {-6, 6, -6, 6});
    REQUIRE(rep.ok());
    INFO(rep.value().failure);
    CHECK(rep.value().pass);
}

TEST_CASE("verify_retraction catches a torn map") {
    Image seg({{0, 0}, {1, 0}, {2, 0}}, Adjacency::c2);
    Retraction bad(seg, "test", [&](Point p) {
        if (seg.contains(p))
            return p;
        return p.x <= 0 ? Point{0, 0} : Point{2, 0};
    });
    auto rep = verify_retraction(bad, {-2, 4, -2, 2});
    REQUIRE(rep.ok());
    CHECK_FALSE(rep.value().pass);
    CHECK(rep.value().bad_pair.has_value());
}

TEST_CASE("verify_retraction catches a non-identity and a window too small") {
    Image sq = catalog::make_rectangle(0, 2, 0, 2);
    Retraction not_id(sq, "test", [](Point) { return Point{0, 0}; });
    auto rep = verify_retraction(not_id, {-2, 4, -2, 4});
    REQUIRE(rep.ok());
    CHECK_FALSE(rep.value().pass);

    auto r = build_axis_retraction(sq);
    REQUIRE(r.ok());
    CHECK(verify_retraction(r.value(), {0, 1, 0, 1}).code() == Err::WindowTooSmall);
}

TEST_CASE("boundary postcondition runs when the window leaves margin") {
    auto r = build_axis_retraction(catalog::make_rectangle(0, 3, 0, 3));
    REQUIRE(r.ok());
    auto wide = verify_retraction(r.value(), {-3, 6, -3, 6});
    REQUIRE(wide.ok());
    CHECK(wide.value().boundary_checked);
    CHECK(wide.value().pass);
    auto tight = verify_retraction(r.value(), {-1, 4, -1, 4});
    REQUIRE(tight.ok());
    CHECK_FALSE(tight.value().boundary_checked);
    CHECK(tight.value().pass);
}
