// Reference embeddings and exact oracles for the invariant.
//
// Fixtures: the flat ring solid (donut), tubes around simple closed lattice
// paths (one voxel per path point), a cube with a straight tunnel drilled
// through, and a knotted tube around a three-crossing closed braid path.
// Tube markings are canonical: the meridian is the boundary square of the
// interior face at the first straight vertex of the path, and the longitude
// is the far-corner parallel walk (path shifted by (1,1,1)), which stays on
// the tube surface whenever the tube is manifold.
//
// Oracles: linking_parity counts, exactly and without floating point, the
// crossings of a lattice cycle over the core curve (the path through cell
// centers) in a fixed generic projection — the mod-2 linking number; and
// meridian_disc_crossings counts the cycle's passes along the tube direction
// through the corner rails of one tube voxel — the cycle's mod-2 crossing
// count with the meridian disc.  Together they decide, independently of any
// linear algebra, which marking classes bound on each side of the tube.
#pragma once

#include <cstddef>
#include <vector>

#include "tori/cubical.hpp"
#include "tori/embedding.hpp"
#include "tori/errors.hpp"

namespace tori::fixtures {

// Simple lattice path: distinct points, consecutive ones at unit distance.
// Closed paths also step from the last point back to the first and need at
// least 4 points.
struct LatticePath {
  std::vector<cubical::Voxel> points;
  bool closed = false;

  static LatticePath make(std::vector<cubical::Voxel> points, bool closed);

  std::size_t size() const { return points.size(); }
};

// Flat square ring: the z = 0 layer of an outer x outer square with the
// interior removed.  outer >= 3.  Marked with the girdle at x = 1 across
// the y = 0 row and the inner-rim walk of the hole.
embedding::MarkedTorusEmbedding donut(int outer, int box_margin = 2);

// The 8-point rectangle path whose tube is voxel-for-voxel the 3-donut.
LatticePath rect_ring_path();

// Closed three-crossing braid path: two horizontal rails joined by three
// over-bridges at z = 2; reduced alternating diagram with three crossings,
// hence a knotted (trefoil) core.
LatticePath trefoil_path();

// Tube around a closed path: one voxel per point, canonical marking.
// InputError when the path is open or has no straight vertex; PinchedSolid
// when non-consecutive points come closer than sqrt(2).
embedding::MarkedTorusEmbedding tube(const LatticePath& path,
                                     int box_margin = 2);

// side x side x side cube (side >= 4) minus the straight x-tunnel at
// (y, z) = (1, 1).  Marked with the entry-mouth girdle and the through-and-
// back longitude.
embedding::MarkedTorusEmbedding drilled_cube(int side, int box_margin = 2);

// Tube around the trefoil path with the longitude spliced, if necessary, so
// that its linking parity with the core equals framing_parity (0 or 1).
embedding::MarkedTorusEmbedding trefoil_tube(int framing_parity,
                                             int box_margin = 2);

// Mod-2 linking number of the cycle with the core curve (the closed path
// through cell centers).  Exact: both curves are doubled to integer
// coordinates (cycle even, core odd), crossings are counted in the fixed
// projection direction (3, 1000003, 1000033) by 3x3 integer determinants,
// and the parity offset provably excludes every degenerate incidence for
// coordinates up to 100000 (InputError beyond).  SharedPoint when the cycle
// traverses a core edge — linking a curve while riding along it is
// meaningless.
int linking_parity(const cubical::EdgeCycle& cycle, const LatticePath& core);

// Mod-2 crossing count of the cycle with the meridian disc of the core's
// tube: passes along the tube direction through the four corner rails of
// the tube voxel at the first straight vertex (the middle of a collinear
// voxel triple, so those rails belong to that voxel alone).  For a cycle on
// the tube surface this is the longitude coefficient of its class.
int meridian_disc_crossings(const cubical::EdgeCycle& cycle,
                            const LatticePath& core);

}  // namespace tori::fixtures
