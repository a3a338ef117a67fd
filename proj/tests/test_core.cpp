#include <doctest.h>

#include "digiplane/core.hpp"

using namespace digiplane;

TEST_CASE("points order lexicographically") {
    CHECK(Point{0, 5} < Point{1, -5});
    CHECK(Point{1, -5} < Point{1, -4});
    CHECK(Point{2, 2} == Point{2, 2});
}

TEST_CASE("c_u adjacency on tuples") {
    int a[] = {0, 0, 0};
    int b[] = {1, 1, 0};
    int c[] = {1, 1, 1};
    int d[] = {0, 2, 0};
    CHECK(cu_adjacent(a, b, 2));
    CHECK_FALSE(cu_adjacent(a, b, 1));
    CHECK(cu_adjacent(a, c, 3));
    CHECK_FALSE(cu_adjacent(a, c, 2));
    CHECK_FALSE(cu_adjacent(a, d, 3));  // a coordinate differs by 2
    CHECK_FALSE(cu_adjacent(a, a, 3));  // distinct points required
}

TEST_CASE("plane adjacency") {
    CHECK(adjacent({0, 0}, {0, 1}, Adjacency::c1));
    CHECK_FALSE(adjacent({0, 0}, {1, 1}, Adjacency::c1));
    CHECK(adjacent({0, 0}, {1, 1}, Adjacency::c2));
    CHECK_FALSE(adjacent({0, 0}, {2, 1}, Adjacency::c2));
    CHECK_FALSE(adjacent({3, 3}, {3, 3}, Adjacency::c2));
    CHECK(adjacent_or_equal({3, 3}, {3, 3}, Adjacency::c2));
}

TEST_CASE("images sort and deduplicate") {
    Image X({{1, 1}, {0, 0}, {1, 1}, {0, 1}}, Adjacency::c2);
    CHECK(X.size() == 3);
    CHECK(X.points() == std::vector<Point>{{0, 0}, {0, 1}, {1, 1}});
    CHECK(X.contains({0, 1}));
    CHECK_FALSE(X.contains({1, 0}));
    CHECK(X.index_of({1, 1}) == 2);
    Window box = X.bounding_box();
    CHECK(box.x0 == 0);
    CHECK(box.x1 == 1);
    CHECK(box.y1 == 1);
}

TEST_CASE("window covers with padding") {
    Window outer{-2, 6, -2, 6}, inner{0, 4, 0, 4};
    CHECK(outer.covers(inner, 2));
    CHECK_FALSE(outer.covers(inner, 3));
    CHECK(outer.padded(1).covers(inner, 3));
    CHECK(Window{0, 1, 0, 0}.points() == std::vector<Point>{{0, 0}, {1, 0}});
}

TEST_CASE("closed neighborhood") {
    Image X({{0, 0}, {1, 0}, {1, 1}, {3, 3}}, Adjacency::c2);
    auto n = closed_neighborhood(X, {0, 0});
    REQUIRE(n.ok());
    CHECK(n.value() == std::vector<Point>{{0, 0}, {1, 0}, {1, 1}});
    auto n1 = closed_neighborhood(X.with_kind(Adjacency::c1), {0, 0});
    CHECK(n1.value() == std::vector<Point>{{0, 0}, {1, 0}});
    CHECK(closed_neighborhood(X, {2, 2}).code() == Err::DomainError);
}

TEST_CASE("components split by adjacency kind") {
    Image X({{0, 0}, {1, 1}, {3, 0}}, Adjacency::c2);
    CHECK(components(X).size() == 2);  // {(0,0),(1,1)} and {(3,0)}
    CHECK(components(X.with_kind(Adjacency::c1)).size() == 3);
    Image empty;
    CHECK(components(empty).empty());
}

TEST_CASE("continuity of self-maps") {
    Image X({{0, 0}, {1, 0}, {2, 0}}, Adjacency::c2);
    SelfMap shift(X, {{0, 0}, {0, 0}, {1, 0}});
    CHECK(is_continuous(shift).value());
    SelfMap tear(X, {{0, 0}, {2, 0}, {2, 0}});
    CHECK_FALSE(is_continuous(tear).value());
    // A value outside the target image is a domain error.
    SelfMap astray(X, {{0, 0}, {0, 0}, {5, 5}});
    CHECK(is_continuous(astray, X, X).code() == Err::DomainError);
}

TEST_CASE("continuity against a differently-ordered source") {
    Image X({{0, 0}, {0, 1}}, Adjacency::c1);
    SelfMap swap(X, {{0, 1}, {0, 0}});
    Image target({{0, 0}, {0, 1}, {0, 2}}, Adjacency::c1);
    CHECK(is_continuous(swap, X, target).value());
}

TEST_CASE("block-U obstruction: no common neighbor") {
    std::vector<Point> pts;
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y)
            if (!(x == 0 && y >= 1))
                pts.push_back({x, y});
    Image X(pts, Adjacency::c2);
    CHECK(no_common_neighbor(X, {-1, 3}, {1, 3}));
    CHECK_FALSE(no_common_neighbor(X, {-1, 0}, {1, 0}));  // (0,0) serves both
}

TEST_CASE("image union and intersection") {
    Image a({{0, 0}, {1, 0}}, Adjacency::c2);
    Image b({{1, 0}, {2, 0}}, Adjacency::c2);
    CHECK(image_union(a, b).points() == std::vector<Point>{{0, 0}, {1, 0}, {2, 0}});
    CHECK(intersection_points(a, b) == std::vector<Point>{{1, 0}});
}
