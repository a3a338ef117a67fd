#ifndef DIGIPLANE_CORE_HPP
#define DIGIPLANE_CORE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace digiplane {

/// A lattice point of the digital plane. Ordering is lexicographic
/// (x first, then y); this is the canonical order used everywhere.
struct Point {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const Point&, const Point&) = default;
    constexpr Point operator+(Point o) const { return {x + o.x, y + o.y}; }
    constexpr Point operator-(Point o) const { return {x - o.x, y - o.y}; }
    constexpr Point operator-() const { return {-x, -y}; }
};

std::string to_string(Point p);

/// c_u adjacency kind. In the plane only c1 (4-neighbor) and c2
/// (8-neighbor) exist.
enum class Adjacency : int { c1 = 1, c2 = 2 };

/// c_u adjacency for general integer tuples: the points differ in at
/// most u coordinates, each differing coordinate differs by exactly 1,
/// and the points are distinct.
bool cu_adjacent(std::span<const int> a, std::span<const int> b, int u);

/// c_u adjacency specialized to the plane.
bool adjacent(Point p, Point q, Adjacency kind);

/// Adjacent or equal.
bool adjacent_or_equal(Point p, Point q, Adjacency kind);

enum class Err {
    None,
    EmptyInput,
    DomainError,
    NotCollinear,
    NotConnected,
    BadSlope,
    NotConvexDisk,
    NotAClosedCurve,
    HoleDetected,
    NotAVertex,
    NoSeparation,
    SharedSetNotEdge,
    GlueMismatch,
    IntersectionNotSingleton,
    CrossAdjacency,
    WindowTooSmall,
    ParseError,
};

const char* err_name(Err e);

struct Error {
    Err code = Err::None;
    std::string message;
};

/// Minimal result type: either a value or an Error.
template <typename T>
class Result {
public:
    Result(T v) : value_(std::move(v)) {}
    Result(Error e) : error_(std::move(e)) {}
    Result(Err code, std::string msg) : error_{code, std::move(msg)} {}

    bool ok() const { return value_.has_value(); }
    explicit operator bool() const { return ok(); }

    const T& value() const& {
        if (!ok())
            throw std::runtime_error(std::string(err_name(error_.code)) + ": " + error_.message);
        return *value_;
    }
    T&& value() && {
        if (!ok())
            throw std::runtime_error(std::string(err_name(error_.code)) + ": " + error_.message);
        return std::move(*value_);
    }
    const T* operator->() const { return &value(); }
    const T& operator*() const { return value(); }

    const Error& error() const {
        static const Error none{};
        return ok() ? none : error_;
    }
    Err code() const { return ok() ? Err::None : error_.code; }

private:
    std::optional<T> value_;
    Error error_;
};

/// An inclusive rectangular window of lattice points.
struct Window {
    int x0 = 0, x1 = 0, y0 = 0, y1 = 0;

    bool contains(Point p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
    long long width() const { return (long long)x1 - x0 + 1; }
    long long height() const { return (long long)y1 - y0 + 1; }
    long long area() const { return width() * height(); }
    Window padded(int pad) const { return {x0 - pad, x1 + pad, y0 - pad, y1 + pad}; }
    /// Does this window contain `inner` with at least `pad` cells to spare
    /// on every side?
    bool covers(const Window& inner, int pad = 0) const {
        return x0 <= inner.x0 - pad && x1 >= inner.x1 + pad && y0 <= inner.y0 - pad &&
               y1 >= inner.y1 + pad;
    }
    std::vector<Point> points() const;
};

/// A finite digital image: a duplicate-free point set with an adjacency
/// kind. Points are kept sorted in canonical (lexicographic) order.
class Image {
public:
    Image() = default;
    Image(std::vector<Point> pts, Adjacency kind);

    const std::vector<Point>& points() const { return points_; }
    Adjacency kind() const { return kind_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    bool contains(Point p) const;
    /// Index of p in canonical order; throws if absent.
    std::size_t index_of(Point p) const;

    /// Bounding box; image must be nonempty.
    Window bounding_box() const;

    Image with_kind(Adjacency k) const { return Image(points_, k); }

    friend bool operator==(const Image&, const Image&) = default;

private:
    std::vector<Point> points_;
    Adjacency kind_ = Adjacency::c2;
};

Image image_union(const Image& a, const Image& b);
std::vector<Point> intersection_points(const Image& a, const Image& b);

/// A total self-map of a digital image, stored as a value table parallel
/// to the canonical point order of the domain.
struct SelfMap {
    Image domain;
    std::vector<Point> values;

    SelfMap() = default;
    SelfMap(Image dom, std::vector<Point> vals);

    Point apply(Point p) const { return values[domain.index_of(p)]; }
};

/// N*(X, kind, p): p together with its neighbors inside X.
/// Domain error if p is not in X.
Result<std::vector<Point>> closed_neighborhood(const Image& X, Point p);

/// Partition of X into kind-components, each sorted, ordered by their
/// least points.
std::vector<std::vector<Point>> components(const Image& X);

/// Local continuity test (adjacent points map to adjacent-or-equal
/// points). `f` maps source points into `target`; a value outside the
/// target is a domain error.
Result<bool> is_continuous(const SelfMap& f, const Image& source, const Image& target);
Result<bool> is_continuous(const SelfMap& f);

/// True iff no point of X is adjacent-or-equal to both p and q. This is
/// the obstruction that rules out retractions onto the block-U image.
bool no_common_neighbor(const Image& X, Point p, Point q);

}  // namespace digiplane

#endif
