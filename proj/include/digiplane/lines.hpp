#ifndef DIGIPLANE_LINES_HPP
#define DIGIPLANE_LINES_HPP

#include <optional>
#include <utility>

#include "digiplane/core.hpp"

namespace digiplane {

/// The four admissible digital line orientations (a digital line is
/// horizontal, vertical, or has slope +1 or -1).
enum class Orientation { Horizontal, Vertical, SlopePlus, SlopeMinus };

const char* orientation_name(Orientation o);

/// Linear form whose level sets are the lines of the given orientation:
/// Horizontal: y; Vertical: x; SlopePlus: y - x; SlopeMinus: x + y.
int line_form(Orientation o, Point p);

/// Unit step along a line of the given orientation, in the direction of
/// increasing canonical order.
Point orientation_step(Orientation o);

/// An infinite digital line, represented by orientation and offset.
struct DigitalLine {
    Orientation orientation = Orientation::Horizontal;
    int offset = 0;

    int form(Point p) const { return line_form(orientation, p); }
    bool contains(Point p) const { return form(p) == offset; }

    friend bool operator==(const DigitalLine&, const DigitalLine&) = default;
};

/// A closed digital half-plane: the line together with one side of it.
struct HalfPlane {
    DigitalLine line;
    int side = 1;  // +1 or -1: sign of (form - offset) on the open side

    bool contains(Point p) const {
        int v = line.form(p) - line.offset;
        return v == 0 || (v > 0) == (side > 0);
    }
};

/// Classification of a point list as a digital segment. A singleton has
/// no orientation (the degenerate case).
struct SegmentInfo {
    std::optional<Orientation> orientation;  // nullopt: degenerate singleton
    Point a, b;                              // extreme points, a <= b canonically

    bool degenerate() const { return !orientation.has_value(); }
};

/// Succeeds iff the points form a digital segment: collinear,
/// c2-connected, consecutive points adjacent. Errors: NotCollinear,
/// NotConnected, BadSlope, EmptyInput.
Result<SegmentInfo> classify_segment(const std::vector<Point>& points);

/// All lattice points of the segment from a to b (which must span an
/// admissible direction).
std::vector<Point> segment_points(Point a, Point b);

/// The two extreme parallel lines of the given orientation meeting a
/// convex disk X; offsets are the min and max of the linear form over X.
/// Both lines meet X only in its minimal bounding curve.
Result<std::pair<DigitalLine, DigitalLine>> sandwich_lines(const Image& X, Orientation o);

/// A line of separation of two convex disks meeting either in a common
/// edge or in a single wedge point. Orientations are tried in the fixed
/// order Horizontal, Vertical, SlopeMinus, SlopePlus; the first line
/// satisfying the side conditions is returned.
Result<DigitalLine> separation_line(const Image& x1, const Image& x2);

}  // namespace digiplane

#endif
