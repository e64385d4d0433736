// Marked toroidal embeddings in the unit lattice and their mod-2
// quadruple-point invariant Q.
//
// A component is a voxel solid whose boundary is a single torus, marked by
// two edge cycles m and l on that boundary whose homology classes span H1.
// Against the marking basis, the three nonzero classes are written
//
//   e   = [m]          ee  = [l]          eee = [m] + [l]
//
// with the fixed complexity order e < ee < eee.
//
// Two regions are attached to a component: the compact region (the solid
// itself) and the outer region (an axis-aligned box grown box_margin voxels
// beyond the solid's bounding box, minus the solid).  In each region exactly
// one of the three nonzero marking classes becomes a boundary — the region's
// bounding class.  Writing c for the compact and n for the outer bounding
// class, the invariant of the component is
//
//   Q = 1  iff  c comes later than n in the order e < ee < eee.
//
// Q of a system of separated components is the XOR of the component values.
// Transporting the marking by a determinant-+-1 matrix changes (c, n) by the
// inverse parity class and flips Q exactly when the parity class is the
// antidiagonal — the bridge to tori/mcg.hpp.
#pragma once

#include <vector>

#include "tori/cubical.hpp"
#include "tori/errors.hpp"
#include "tori/gf2.hpp"
#include "tori/mcg.hpp"

namespace tori::embedding {

enum class H1Class : int { e = 1, ee = 2, eee = 3 };

// Coefficient of [m] (bit 0) and of [l] (bit 1).
int meridian_bit(H1Class h);
int longitude_bit(H1Class h);
// Position in the order e < ee < eee (1, 2, 3).
int rank_of(H1Class h);
// Display name: "e", "ee", "eee".
const char* name_of(H1Class h);
// Inverse of the bit maps; the zero class is not a valid H1Class.
H1Class class_from_bits(int mbit, int lbit);

struct MarkedTorusEmbedding {
  cubical::VoxelSolid solid;
  cubical::EdgeCycle m_cycle;
  cubical::EdgeCycle l_cycle;
  int box_margin = 2;
  // Boundary surface of the solid, built once during make().
  cubical::SurfaceComplex surface;

  // Validates everything: box_margin >= 0 (zero is allowed and will starve
  // the outer region later — useful for probing), boundary is a closed
  // 2-manifold (PinchedSolid) and a single torus (NotATorus), both cycles
  // run along surface edges (CycleNotOnSurface), and their classes span H1
  // (DependentMarking).
  static MarkedTorusEmbedding make(cubical::VoxelSolid solid,
                                   cubical::EdgeCycle m_cycle,
                                   cubical::EdgeCycle l_cycle,
                                   int box_margin = 2);
};

// Full complex of the solid.
cubical::CubicalComplex compact_region(const MarkedTorusEmbedding& emb);
// Complex of the grown bounding box minus the solid.  Raises
// KernelDimensionError when the box adds no voxels at all, InputError when
// the box would be absurdly large.
cubical::CubicalComplex outer_region(const MarkedTorusEmbedding& emb);

struct ComponentQ {
  H1Class c = H1Class::e;   // bounding class of the compact region
  H1Class n = H1Class::ee;  // bounding class of the outer region
  int q = 0;

  bool operator==(const ComponentQ&) const = default;
};

// The invariant of one component.  KernelDimensionError when a marking
// cycle leaves a region or a region fails to isolate exactly one bounding
// class (the box_margin-too-small signal).
ComponentQ q_invariant(const MarkedTorusEmbedding& emb);

struct SystemEmbedding {
  std::vector<MarkedTorusEmbedding> components;

  // Validates pairwise separation: every two voxels of different components
  // at L-infinity distance >= 2, so closed cubes cannot share even a corner
  // (ComponentsNotSeparated).  An empty system is allowed.
  static SystemEmbedding make(std::vector<MarkedTorusEmbedding> components);
};

struct SystemQ {
  std::vector<ComponentQ> components;
  int total = 0;  // XOR of component q values
};

SystemQ q_system(const SystemEmbedding& system);

// Parity of quadruple points of any deformation carrying `before` to
// `after` component-by-component: XOR of the two system totals.
// ComponentCountMismatch when the systems have different lengths.
int predict_q(const SystemEmbedding& before, const SystemEmbedding& after);

// Surface cycle realizing mbit*[m] + lbit*[l] (bits in {0,1}, not both 0):
// the marking cycles themselves, or their splice for the sum class.
cubical::EdgeCycle realize_class(const MarkedTorusEmbedding& emb, int mbit,
                                 int lbit);

// Replace the marking by its image under the matrix: the columns of tau(f)
// give the classes of the new m and new l, realized on the surface.
MarkedTorusEmbedding transport_marking(const MarkedTorusEmbedding& emb,
                                       const mcg::MappingClass& f);

// Replace l by the splice of l and m (class [l] + [m]); applying it twice
// restores the original classes.
MarkedTorusEmbedding adjust_framing(const MarkedTorusEmbedding& emb);

}  // namespace tori::embedding
