#ifndef DIGIPLANE_RETRACTION_HPP
#define DIGIPLANE_RETRACTION_HPP

#include <functional>
#include <map>

#include "digiplane/convexity.hpp"
#include "digiplane/core.hpp"
#include "digiplane/lines.hpp"

namespace digiplane {

/// A c2-retraction of the digital plane onto a finite image, evaluated
/// lazily from its construction scheme. No global table is materialized.
class Retraction {
public:
    Retraction() = default;
    Retraction(Image target, std::string scheme, std::function<Point(Point)> eval)
        : target_(std::move(target)), scheme_(std::move(scheme)), eval_(std::move(eval)) {}

    const Image& target() const { return target_; }
    const std::string& scheme() const { return scheme_; }
    Point operator()(Point p) const { return eval_(p); }

private:
    Image target_;
    std::string scheme_;
    std::function<Point(Point)> eval_;
};

/// Identity retraction onto X (every plane point must already be handled
/// by the caller; off-image points are clamped nowhere). Provided for
/// composition tests.
Retraction identity_retraction(const Image& X);

/// Retraction backed by an explicit finite table; points outside the
/// table fall back to the given map (or to the nearest tabled point of
/// the table's window when none is given).
Retraction table_retraction(Image target, std::map<Point, Point> table,
                            std::function<Point(Point)> fallback = nullptr);

/// Column-clamp (Fig.-3 style) retraction of the plane onto a convex
/// disk, with axis-parallel sandwich lines of the given orientation
/// (Vertical: the extreme columns; Horizontal: the extreme rows).
Result<Retraction> build_axis_retraction(const Image& X,
                                         Orientation sandwich = Orientation::Vertical);

/// Retraction of the plane onto a convex disk whose sandwich lines are
/// slanted with the given slope (-1 or +1). The slope +1 case is the
/// slope -1 construction conjugated with the reflection x -> -x.
Result<Retraction> build_slanted_retraction(const Image& X, int slope);

/// Retraction onto the union of two convex disks whose intersection is a
/// common edge of both minimal bounding curves, glued along a line of
/// separation. Well-definedness on the line is machine-checked before
/// the retraction is returned.
Result<Retraction> build_edge_union_retraction(const Image& x1, const Image& x2);

struct WedgeCheck {
    Point wedge_point;
    bool endpoint_of_both;  // wedge point is an edge endpoint of both disks
};

/// Succeeds iff the two images share exactly one point and have no other
/// cross-adjacency. Errors: IntersectionNotSingleton, CrossAdjacency.
Result<WedgeCheck> check_wedge(const Image& x1, const Image& x2);

/// Retraction onto a wedge of two convex disks, glued along a separation
/// line through the wedge point.
Result<Retraction> build_wedge_retraction(const Image& x1, const Image& x2);

struct VerifyReport {
    bool pass = true;
    std::string failure;                          // description of the first failure
    std::optional<std::pair<Point, Point>> bad_pair;  // offending adjacent pair, if any
    bool boundary_checked = false;  // whether the disk boundary postcondition ran
};

/// Check a retraction over a finite window: identity on the target,
/// image containment, c2-continuity of every adjacent pair, and (when
/// the target decomposes as a disk and the window leaves two cells of
/// margin) the boundary postcondition r(window \ Int S) within S.
/// The window must contain the target's bounding box.
Result<VerifyReport> verify_retraction(const Retraction& r, const Window& window);

}  // namespace digiplane

#endif
