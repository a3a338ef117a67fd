#include <doctest.h>

#include <algorithm>

#include "digiplane/catalog.hpp"
#include "digiplane/lines.hpp"

using namespace digiplane;

TEST_CASE("line forms and membership") {
    CHECK(DigitalLine{Orientation::Horizontal, 2}.contains({7, 2}));
    CHECK(DigitalLine{Orientation::Vertical, -1}.contains({-1, 9}));
    CHECK(DigitalLine{Orientation::SlopePlus, 1}.contains({3, 4}));
    CHECK(DigitalLine{Orientation::SlopeMinus, 5}.contains({2, 3}));
    CHECK_FALSE(DigitalLine{Orientation::SlopeMinus, 5}.contains({2, 2}));
}

TEST_CASE("half-planes include their boundary") {
    HalfPlane h{{Orientation::Horizontal, 2}, +1};
    CHECK(h.contains({0, 2}));
    CHECK(h.contains({0, 5}));
    CHECK_FALSE(h.contains({0, 1}));
    HalfPlane g{{Orientation::SlopeMinus, 0}, -1};
    CHECK_FALSE(g.contains({3, 3}));
    CHECK(g.contains({-3, 3}));
    HalfPlane k{{Orientation::SlopePlus, -2}, +1};
    CHECK(k.contains({1, 1}));
}

TEST_CASE("opposite half-planes cover the plane and meet in the line") {
    DigitalLine L{Orientation::SlopePlus, 1};
    HalfPlane hp{L, +1}, hm{L, -1};
    for (const Point& p : Window{-4, 4, -4, 4}.points()) {
        CHECK((hp.contains(p) || hm.contains(p)));
        CHECK((hp.contains(p) && hm.contains(p)) == L.contains(p));
    }
}

TEST_CASE("classify_segment recognizes the admissible orientations") {
    auto s = classify_segment({{0, 0}, {1, 1}, {2, 2}});
    REQUIRE(s.ok());
    CHECK(*s.value().orientation == Orientation::SlopePlus);
    CHECK(s.value().a == Point{0, 0});
    CHECK(s.value().b == Point{2, 2});

    auto h = classify_segment({{2, 0}, {0, 0}, {1, 0}});
    REQUIRE(h.ok());
    CHECK(*h.value().orientation == Orientation::Horizontal);

    auto m = classify_segment({{0, 2}, {1, 1}, {2, 0}});
    REQUIRE(m.ok());
    CHECK(*m.value().orientation == Orientation::SlopeMinus);

    auto v = classify_segment({{5, 5}, {5, 6}});
    CHECK(*v.value().orientation == Orientation::Vertical);
}

TEST_CASE("classify_segment failure modes") {
    CHECK(classify_segment({{0, 0}, {2, 2}}).code() == Err::NotConnected);
    CHECK(classify_segment({{0, 0}, {1, 0}, {1, 1}}).code() == Err::NotCollinear);
    CHECK(classify_segment({{0, 0}, {1, 2}, {2, 4}}).code() == Err::BadSlope);
    CHECK(classify_segment({}).code() == Err::EmptyInput);

    auto single = classify_segment({{4, -4}});
    REQUIRE(single.ok());
    CHECK(single.value().degenerate());
}

TEST_CASE("segment_points enumerates inclusively") {
    CHECK(segment_points({0, 0}, {2, 0}) ==
          std::vector<Point>{{0, 0}, {1, 0}, {2, 0}});
    CHECK(segment_points({0, 2}, {2, 0}) ==
          std::vector<Point>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("sandwich lines of a rectangle and the diamond") {
    Image rect = catalog::make_rectangle(0, 4, 2, 4);
    auto v = sandwich_lines(rect, Orientation::Vertical);
    REQUIRE(v.ok());
    CHECK(v.value().first.offset == 0);
    CHECK(v.value().second.offset == 4);

    std::vector<Point> dpts;
    for (const Point& p : Window{-2, 2, -2, 2}.points())
        if (std::abs(p.x) + std::abs(p.y) <= 2)
            dpts.push_back(p);
    Image diamond(dpts, Adjacency::c2);
    auto s = sandwich_lines(diamond, Orientation::SlopeMinus);
    REQUIRE(s.ok());
    CHECK(s.value().first.offset == -2);
    CHECK(s.value().second.offset == 2);

    Image seg({{0, 0}, {1, 0}}, Adjacency::c2);
    CHECK(sandwich_lines(seg, Orientation::Vertical).code() == Err::NotConvexDisk);
}

TEST_CASE("sandwich offsets match brute-force extremes") {
    Image rect = catalog::make_rectangle(-1, 3, 0, 2);
    for (Orientation o : {Orientation::Horizontal, Orientation::Vertical,
                          Orientation::SlopePlus, Orientation::SlopeMinus}) {
        auto s = sandwich_lines(rect, o);
        REQUIRE(s.ok());
        int lo = INT32_MAX, hi = INT32_MIN;
        for (const Point& p : rect.points()) {
            lo = std::min(lo, line_form(o, p));
            hi = std::max(hi, line_form(o, p));
        }
        CHECK(s.value().first.offset == lo);
        CHECK(s.value().second.offset == hi);
    }
}

namespace {

// Postcondition of a separation line, checked from the definition.
void check_separates(const DigitalLine& L, const Image& x1, const Image& x2) {
    int s1 = 0, s2 = 0;
    for (const Point& p : x1.points())
        if (int v = L.form(p) - L.offset; v != 0)
            s1 = v > 0 ? 1 : -1;
    for (const Point& p : x2.points())
        if (int v = L.form(p) - L.offset; v != 0)
            s2 = v > 0 ? 1 : -1;
    CHECK(s1 * s2 == -1);
    for (const Point& p : x1.points())
        CHECK((L.form(p) - L.offset) * s1 >= 0);
    for (const Point& p : x2.points())
        CHECK((L.form(p) - L.offset) * s2 >= 0);
}

}  // namespace

TEST_CASE("separation line for an edge pair") {
    // Two lattice triangles sharing the slanted edge (0,0)..(2,2).
    Image upper = catalog::make_lattice_triangle({0, 0}, {2, 2}, {0, 2});
    Image lower = catalog::make_lattice_triangle({0, 0}, {2, 2}, {2, 0});
    auto L = separation_line(upper, lower);
    REQUIRE(L.ok());
    CHECK(L.value().orientation == Orientation::SlopePlus);
    CHECK(L.value().offset == 0);
    check_separates(L.value(), upper, lower);
}

TEST_CASE("separation line for the tee configuration") {
    auto tee = catalog::make_tee();
    auto L = separation_line(tee.x1, tee.x2);
    REQUIRE(L.ok());
    CHECK(L.value().orientation == Orientation::Horizontal);
    CHECK(L.value().offset == 2);
    check_separates(L.value(), tee.x1, tee.x2);
}

TEST_CASE("separation line for the wedge meets the union only at the wedge point") {
    auto w = catalog::make_wedge_45_45();
    auto L = separation_line(w.x1, w.x2);
    REQUIRE(L.ok());
    check_separates(L.value(), w.x1, w.x2);
    int on_line = 0;
    Image u = image_union(w.x1, w.x2);
    for (const Point& p : u.points())
        on_line += L.value().contains(p);
    CHECK(on_line == 1);
    CHECK(L.value().contains({0, 0}));
}

TEST_CASE("no separation for overlapping squares") {
    Image a = catalog::make_rectangle(0, 2, 0, 2);
    Image b = catalog::make_rectangle(1, 3, 0, 2);
    CHECK(separation_line(a, b).code() == Err::NoSeparation);
}
