#ifndef DIGIPLANE_CATALOG_HPP
#define DIGIPLANE_CATALOG_HPP

#include <array>

#include "digiplane/core.hpp"
#include "digiplane/retraction.hpp"

namespace digiplane {
namespace catalog {

/// All lattice points of [x0,x1] x [y0,y1].
Image make_rectangle(int x0, int x1, int y0, int y1, Adjacency kind = Adjacency::c2);

/// Lattice points of the closed Euclidean triangle with vertices (0,0),
/// (4,0), (4,3); 11 points. Digitally convex only after removing (0,0).
Image make_fig1_triangle();

/// [-n,n]^2 minus the slot {0} x [1,n]; a non-convex disk that is not a
/// c2-retract of the plane. Requires n > 2.
Image make_block_u(int n);

/// Lattice points of a closed Euclidean triangle whose vertices span
/// admissible edge slopes.
Image make_lattice_triangle(Point a, Point b, Point c);

struct TeeExample {
    Image x1;      // [0,4] x [2,4]
    Image x2;      // [2,4] x [0,2]
    Image whole;   // the union
    Retraction r;  // retraction of the plane onto the union
};

/// The tee: a union meeting in a non-maximal shared segment, with the
/// explicit four-value retraction table on [0,4]^2 extended outside by
/// the axis retraction of the square.
TeeExample make_tee();

struct AnnulusExample {
    Image x;                     // [-3,3]^2 minus the origin, 48 points
    std::array<Image, 4> parts;  // the four quadrant disks
    Image inner_ring;            // the 8-point ring around the origin
    Retraction r;                // piecewise retraction of x onto the ring
};

/// The annulus whose retraction onto its inner ring shows the union of
/// four convex disks need not have the AFPP.
AnnulusExample make_annulus();

/// A c2 simple closed curve with k points: k = 4 the diamond
/// {(0,0),(1,1),(2,0),(1,-1)}, k = 8 the ring max(|x|,|y|) = 1.
Result<Image> make_scc_diamond(int k);

struct WedgePair {
    Image x1;  // lattice triangle (0,0),(2,2),(2,0)
    Image x2;  // lattice triangle (0,0),(-2,-2),(-2,0)
};

/// Two convex disks meeting only at the origin with 45-degree interior
/// angles there.
WedgePair make_wedge_45_45();

}  // namespace catalog
}  // namespace digiplane

#endif
