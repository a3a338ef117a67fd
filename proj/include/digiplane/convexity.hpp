#ifndef DIGIPLANE_CONVEXITY_HPP
#define DIGIPLANE_CONVEXITY_HPP

#include "digiplane/core.hpp"
#include "digiplane/lines.hpp"

namespace digiplane {

/// A cyclic c2-path of pairwise distinct points.
struct ClosedCurve {
    std::vector<Point> cycle;

    std::size_t size() const { return cycle.size(); }
    bool contains(Point p) const;
};

/// A maximal digital segment of a bounding curve.
struct CurveEdge {
    Orientation orientation;
    Point a, b;  // endpoints in traversal order (a -> b)

    std::vector<Point> points() const { return segment_points(a, b); }
};

/// Decomposition of a digital disk: its minimal bounding curve, interior,
/// edges, vertices and interior angles.
struct DiskReport {
    Image disk;
    ClosedCurve curve;
    std::vector<Point> interior;  // sorted
    std::vector<CurveEdge> edges;
    std::vector<Point> vertices;  // in traversal order, edges[i] ends at vertices[i]
    std::vector<int> angles;      // degrees, parallel to vertices
};

/// Vertices of the Euclidean convex hull, counterclockwise, starting at
/// the canonically least point. Collinear edge-interior points are
/// excluded; a singleton yields itself; a collinear set its two extremes.
std::vector<Point> hull_vertices(const std::vector<Point>& points);

/// Identify the minimal bounding curve of D (the points of D c1-adjacent
/// to the unbounded c1-component of the complement, traced cyclically),
/// verify that the curve bounds D, and report interior, edges, vertices
/// and angles. Errors: EmptyInput, NotAClosedCurve, HoleDetected.
Result<DiskReport> decompose_disk(const Image& D);

/// Interior angle at a vertex, in degrees (45/90/135 on convex disks).
Result<int> interior_angle(const DiskReport& report, Point v);

struct ConvexityReport {
    enum class Kind { SinglePoint, Segment, ConvexDisk, NotConvex };
    Kind kind = Kind::NotConvex;
    std::optional<SegmentInfo> segment;  // set for Segment
    std::optional<DiskReport> disk;      // set for ConvexDisk
    std::vector<Point> hull;             // set for ConvexDisk: hull vertices, hull order
    std::string reason;                  // set for NotConvex
};

const char* convexity_kind_name(ConvexityReport::Kind k);

/// Digital convexity classifier: a single point, a digital segment, or a
/// disk whose bounding-curve edge endpoints are exactly the Euclidean
/// hull vertices.
ConvexityReport is_convex(const Image& Y);

}  // namespace digiplane

#endif
