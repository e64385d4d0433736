// Cubical complexes over the unit lattice, with exact GF(2) boundary
// operators.
//
// Geometry model: a voxel is the closed unit cube with integer anchor
// (x, y, z) spanning [x, x+1] x [y, y+1] x [z, z+1].  A cell is an anchor
// vertex plus an axis-extent bitmask (bit a set => the cell spans one unit
// along axis a); the popcount of the mask is the cell dimension.  Cells are
// kept sorted lexicographically by (x, y, z, mask), so indices are stable
// and every lookup is a binary search — no hashing, fully deterministic.
//
// The boundary of a cell with extent set S is, for each axis a in S, the
// pair of cells (anchor, S \ {a}) and (anchor + e_a, S \ {a}); over GF(2)
// orientation disappears and d(d(.)) = 0, which build routines verify.
//
// A voxel set is accepted only when its boundary is a closed 2-manifold:
// every boundary edge must bound exactly two boundary faces (four means
// solid cubes meet along an edge diagonal), and the boundary faces around
// every boundary vertex must close into a single edge-linked cycle (two
// cycles mean solid cubes meet at a corner diagonal).
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "tori/errors.hpp"
#include "tori/gf2.hpp"

namespace tori::cubical {

// Anchors and lattice vertices share one integer-triple type.
struct Voxel {
  std::int32_t x = 0;
  std::int32_t y = 0;
  std::int32_t z = 0;
  auto operator<=>(const Voxel&) const = default;
};

// Coordinates are capped well inside int32 so cell anchors (coordinate + 1)
// and bounding-box growth can never overflow.
inline constexpr std::int32_t kCoordBound = std::int32_t{1} << 30;

struct VoxelSolid {
  std::vector<Voxel> voxels;  // sorted, unique

  // Validates: nonempty, all coordinates within +-kCoordBound; sorts and
  // rejects duplicates.
  static VoxelSolid from_voxels(std::vector<Voxel> voxels);

  bool contains(const Voxel& v) const;
  std::size_t size() const { return voxels.size(); }
  // Inclusive anchor range (min corner, max corner) of the voxel anchors.
  std::pair<Voxel, Voxel> bounding_box() const;
};

struct Cell {
  std::int32_t x = 0;
  std::int32_t y = 0;
  std::int32_t z = 0;
  std::uint8_t mask = 0;  // bit 0 = x extent, bit 1 = y, bit 2 = z
  int dim() const;
  auto operator<=>(const Cell&) const = default;
};

// The 2*dim boundary cells of one cell, in deterministic order.
std::vector<Cell> boundary_cells(const Cell& cell);
// All 2^dim corner vertices of one cell (as dimension-0 cells).
std::vector<Cell> vertices_of(const Cell& cell);

struct CubicalComplex {
  std::array<std::vector<Cell>, 4> cells;  // per dimension, sorted
  gf2::Gf2Matrix d1;  // vertices x edges
  gf2::Gf2Matrix d2;  // edges x faces
  gf2::Gf2Matrix d3;  // faces x cubes

  std::size_t count(int dim) const { return cells[dim].size(); }
  std::optional<std::uint32_t> index_of(int dim, const Cell& cell) const;
};

struct SurfaceComplex {
  CubicalComplex complex;  // dimensions 0..2 populated; d3 has no columns
  // Per face (aligned with complex.cells[2]): the solid voxel and the
  // non-solid voxel whose interface the face is.
  std::vector<std::pair<Voxel, Voxel>> face_sources;
};

// Complex of all closed cells of the solid's voxels.  Raises PinchedSolid
// when the boundary is not a closed 2-manifold.
CubicalComplex build_complex(const VoxelSolid& solid);

// The boundary 2-manifold itself, with face provenance.  Same gate.
SurfaceComplex boundary_surface(const VoxelSolid& solid);

// Betti numbers (b0, b1, b2) from boundary ranks.
std::array<std::size_t, 3> betti_numbers(const CubicalComplex& complex);
// V - E + F - C.
long long euler_characteristic(const CubicalComplex& complex);
// Connectivity of the 1-skeleton (and hence of the whole complex).
bool is_connected(const CubicalComplex& complex);
// Closed surface is one torus: connected and Euler characteristic zero.
bool is_torus(const SurfaceComplex& surface);

// Closed walk along lattice edges: consecutive points (cyclically) at unit
// distance.  Repeated points and edges are allowed; the GF(2) boundary of
// the traversed-edge chain is automatically zero.
struct EdgeCycle {
  std::vector<Voxel> points;

  // Validates: at least 2 points, coordinates within bounds, every
  // consecutive pair (including last -> first) at unit distance.
  static EdgeCycle from_points(std::vector<Voxel> points);

  // One edge cell per step, in traversal order (repeats possible).
  std::vector<Cell> step_edges() const;
};

// GF(2) chain of the walk over the complex's edge index space; a step
// outside the 1-skeleton raises CycleNotOnSurface naming the edge.
gf2::Gf2Vector chain_of(const EdgeCycle& cycle, const CubicalComplex& complex);
// Same membership test without throwing.
bool chain_supported(const EdgeCycle& cycle, const CubicalComplex& complex);

// Rank of H1 of the surface.
std::size_t h1_rank(const SurfaceComplex& surface);

// Coordinates of the cycle's homology class in a deterministic H1 basis
// (fundamental cycles of the lexicographic spanning forest, first
// independent ones kept).  Length = h1_rank.
gf2::Gf2Vector class_of_cycle(const SurfaceComplex& surface,
                              const EdgeCycle& cycle);

// True when the two classes are linearly independent in H1.
bool independent_in_h1(const SurfaceComplex& surface, const EdgeCycle& a,
                       const EdgeCycle& b);

// Closed walk whose chain is chain(a) XOR chain(b): traverses a, then (when
// the walks share no vertex) a doubled connector path along surface edges,
// then b, then the connector back.  Deterministic.
EdgeCycle splice_cycles(const SurfaceComplex& surface, const EdgeCycle& a,
                        const EdgeCycle& b);

}  // namespace tori::cubical
