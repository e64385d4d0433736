#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "tori/cubical.hpp"

using namespace tori::cubical;
using tori::CycleNotOnSurface;
using tori::InputError;
using tori::PinchedSolid;
using tori::gf2::Gf2Vector;

namespace {

VoxelSolid single_voxel() { return VoxelSolid::from_voxels({{0, 0, 0}}); }

VoxelSolid bar() { return VoxelSolid::from_voxels({{0, 0, 0}, {1, 0, 0}}); }

// 3x3 one-voxel-thick square ring at z = 0 with hole at (1, 1, 0).
VoxelSolid ring3() {
  std::vector<Voxel> v;
  for (std::int32_t x = 0; x < 3; ++x) {
    for (std::int32_t y = 0; y < 3; ++y) {
      if (x == 1 && y == 1) continue;
      v.push_back({x, y, 0});
    }
  }
  return VoxelSolid::from_voxels(std::move(v));
}

// Two 3x3 rings sharing a 3-voxel column: genus-2 handlebody, 13 voxels.
VoxelSolid double_ring() {
  std::vector<Voxel> v;
  for (std::int32_t x = 0; x < 3; ++x) {
    for (std::int32_t y = 0; y < 3; ++y) {
      if (x == 1 && y == 1) continue;
      v.push_back({x, y, 0});
    }
  }
  for (std::int32_t x = 2; x < 5; ++x) {
    for (std::int32_t y = 0; y < 3; ++y) {
      if (x == 3 && y == 1) continue;
      if (x == 2) continue;  // shared column already present
      v.push_back({x, y, 0});
    }
  }
  return VoxelSolid::from_voxels(std::move(v));
}

EdgeCycle girdle_x1() {
  return EdgeCycle::from_points({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}});
}

EdgeCycle girdle_x2() {
  return EdgeCycle::from_points({{2, 0, 0}, {2, 1, 0}, {2, 1, 1}, {2, 0, 1}});
}

EdgeCycle hole_rim() {
  return EdgeCycle::from_points({{1, 1, 0}, {2, 1, 0}, {2, 2, 0}, {1, 2, 0}});
}

std::array<std::size_t, 3> oracle_betti(const CubicalComplex& cx) {
  const std::size_t r1 = oracle::rank_of(cx.d1);
  const std::size_t r2 = oracle::rank_of(cx.d2);
  const std::size_t r3 = oracle::rank_of(cx.d3);
  return {cx.count(0) - r1, cx.count(1) - r1 - r2, cx.count(2) - r2 - r3};
}

}  // namespace

TEST_CASE("voxel solid validation") {
  CHECK_THROWS_AS(VoxelSolid::from_voxels({}), InputError);
  CHECK_THROWS_AS(VoxelSolid::from_voxels({{0, 0, 0}, {0, 0, 0}}), InputError);
  CHECK_THROWS_AS(VoxelSolid::from_voxels({{(1 << 30) + 1, 0, 0}}), InputError);

  VoxelSolid s = VoxelSolid::from_voxels({{2, 0, 0}, {0, 0, 0}});
  CHECK(s.size() == 2);
  CHECK(s.voxels[0] == Voxel{0, 0, 0});  // sorted
  CHECK(s.contains({2, 0, 0}));
  CHECK_FALSE(s.contains({1, 0, 0}));
  auto [lo, hi] = s.bounding_box();
  CHECK(lo == Voxel{0, 0, 0});
  CHECK(hi == Voxel{2, 0, 0});
}

TEST_CASE("cell boundary arithmetic") {
  Cell cube{0, 0, 0, 0b111};
  CHECK(cube.dim() == 3);
  auto faces = boundary_cells(cube);
  CHECK(faces.size() == 6);
  for (const Cell& f : faces) CHECK(f.dim() == 2);
  CHECK(vertices_of(cube).size() == 8);

  Cell edge{3, 4, 5, 0b010};
  auto ends = boundary_cells(edge);
  REQUIRE(ends.size() == 2);
  CHECK(ends[0] == Cell{3, 4, 5, 0});
  CHECK(ends[1] == Cell{3, 5, 5, 0});

  // Boundary of boundary cancels: the 24 face-edges cover 12 edges twice.
  std::vector<Cell> face_edges;
  for (const Cell& f : faces) {
    for (const Cell& e : boundary_cells(f)) face_edges.push_back(e);
  }
  std::sort(face_edges.begin(), face_edges.end());
  CHECK(face_edges.size() == 24);
  for (std::size_t i = 0; i < face_edges.size(); i += 2) {
    CHECK(face_edges[i] == face_edges[i + 1]);
  }
}

TEST_CASE("single voxel complex counts and homology") {
  CubicalComplex cx = build_complex(single_voxel());
  CHECK(cx.count(0) == 8);
  CHECK(cx.count(1) == 12);
  CHECK(cx.count(2) == 6);
  CHECK(cx.count(3) == 1);
  CHECK(euler_characteristic(cx) == 1);
  CHECK(betti_numbers(cx) == std::array<std::size_t, 3>{1, 0, 0});
  CHECK(is_connected(cx));

  SurfaceComplex surf = boundary_surface(single_voxel());
  CHECK(surf.complex.count(2) == 6);
  CHECK(surf.complex.count(1) == 12);
  CHECK(surf.complex.count(0) == 8);
  CHECK(surf.face_sources.size() == 6);
  for (const auto& [inside, outside] : surf.face_sources) {
    CHECK(inside == Voxel{0, 0, 0});
    CHECK_FALSE(outside == Voxel{0, 0, 0});
  }
  CHECK(euler_characteristic(surf.complex) == 2);  // sphere
  CHECK(betti_numbers(surf.complex) == std::array<std::size_t, 3>{1, 0, 1});
  CHECK_FALSE(is_torus(surf));
}

TEST_CASE("bar complex counts") {
  CubicalComplex cx = build_complex(bar());
  CHECK(cx.count(0) == 12);
  CHECK(cx.count(1) == 20);
  CHECK(cx.count(2) == 11);
  CHECK(cx.count(3) == 2);
  CHECK(euler_characteristic(cx) == 1);
  CHECK(betti_numbers(cx) == std::array<std::size_t, 3>{1, 0, 0});

  SurfaceComplex surf = boundary_surface(bar());
  CHECK(surf.complex.count(2) == 10);
  CHECK(surf.complex.count(1) == 20);
  CHECK(surf.complex.count(0) == 12);
  CHECK(euler_characteristic(surf.complex) == 2);
  CHECK(betti_numbers(surf.complex) == std::array<std::size_t, 3>{1, 0, 1});
}

TEST_CASE("ring solid is a solid torus") {
  CubicalComplex cx = build_complex(ring3());
  CHECK(betti_numbers(cx) == std::array<std::size_t, 3>{1, 1, 0});
  CHECK(euler_characteristic(cx) == 0);

  SurfaceComplex surf = boundary_surface(ring3());
  CHECK(betti_numbers(surf.complex) == std::array<std::size_t, 3>{1, 2, 1});
  CHECK(euler_characteristic(surf.complex) == 0);
  CHECK(is_torus(surf));
  CHECK(h1_rank(surf) == 2);

  // Surface is a closed 2-manifold: every edge on exactly two faces.
  const auto& d2 = surf.complex.d2;
  std::vector<int> edge_count(surf.complex.count(1), 0);
  for (std::size_t j = 0; j < d2.cols; ++j) {
    for (std::uint32_t r : d2.columns[j]) ++edge_count[r];
  }
  for (int c : edge_count) CHECK(c == 2);

  // Face provenance: inside is solid, outside is not.
  for (const auto& [inside, outside] : surf.face_sources) {
    CHECK(ring3().contains(inside));
    CHECK_FALSE(ring3().contains(outside));
  }
}

TEST_CASE("double ring is genus 2") {
  VoxelSolid s = double_ring();
  CHECK(s.size() == 13);
  CubicalComplex cx = build_complex(s);
  CHECK(betti_numbers(cx) == std::array<std::size_t, 3>{1, 2, 0});
  SurfaceComplex surf = boundary_surface(s);
  CHECK(euler_characteristic(surf.complex) == -2);
  CHECK(betti_numbers(surf.complex) == std::array<std::size_t, 3>{1, 4, 1});
  CHECK_FALSE(is_torus(surf));
}

TEST_CASE("betti numbers agree with dense-elimination oracle") {
  for (const VoxelSolid& s : {single_voxel(), bar(), ring3(), double_ring()}) {
    CubicalComplex cx = build_complex(s);
    CHECK(betti_numbers(cx) == oracle_betti(cx));
    SurfaceComplex surf = boundary_surface(s);
    CHECK(betti_numbers(surf.complex) == oracle_betti(surf.complex));
  }
}

TEST_CASE("pinched solids are rejected") {
  // Edge diagonal.
  CHECK_THROWS_AS(build_complex(VoxelSolid::from_voxels({{0, 0, 0}, {1, 1, 0}})),
                  PinchedSolid);
  // Corner diagonal.
  CHECK_THROWS_AS(
      build_complex(VoxelSolid::from_voxels({{0, 0, 0}, {1, 1, 1}})),
      PinchedSolid);
  CHECK_THROWS_AS(boundary_surface(VoxelSolid::from_voxels({{0, 0, 0}, {1, 1, 0}})),
                  PinchedSolid);
  // Disjoint pieces are fine (not pinched, just disconnected).
  VoxelSolid two = VoxelSolid::from_voxels({{0, 0, 0}, {5, 0, 0}});
  CubicalComplex cx = build_complex(two);
  CHECK_FALSE(is_connected(cx));
  CHECK(betti_numbers(cx)[0] == 2);
  CHECK_FALSE(is_torus(boundary_surface(two)));
}

TEST_CASE("edge cycles validate and produce chains") {
  CHECK_THROWS_AS(EdgeCycle::from_points({{0, 0, 0}}), InputError);
  CHECK_THROWS_AS(EdgeCycle::from_points({{0, 0, 0}, {2, 0, 0}}), InputError);
  CHECK_THROWS_AS(EdgeCycle::from_points({{0, 0, 0}, {1, 1, 0}}), InputError);
  // Open path: last -> first is not a unit step.
  CHECK_THROWS_AS(
      EdgeCycle::from_points({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}), InputError);

  EdgeCycle sq = EdgeCycle::from_points(
      {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
  CHECK(sq.step_edges().size() == 4);

  SurfaceComplex surf = boundary_surface(ring3());
  Gf2Vector chain = chain_of(sq, surf.complex);
  CHECK(chain.support.size() == 4);

  // Doubled edges cancel: out-and-back walk has the zero chain.
  EdgeCycle back_forth = EdgeCycle::from_points({{0, 0, 0}, {1, 0, 0}});
  CHECK(chain_of(back_forth, surf.complex).is_zero());

  EdgeCycle far = EdgeCycle::from_points(
      {{7, 7, 7}, {8, 7, 7}, {8, 8, 7}, {7, 8, 7}});
  CHECK_FALSE(chain_supported(far, surf.complex));
  CHECK_THROWS_AS(chain_of(far, surf.complex), CycleNotOnSurface);
}

TEST_CASE("homology classes of cycles on the ring surface") {
  SurfaceComplex surf = boundary_surface(ring3());
  EdgeCycle m = girdle_x1();
  EdgeCycle m2 = girdle_x2();
  EdgeCycle l = hole_rim();
  EdgeCycle null_sq = EdgeCycle::from_points(
      {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});

  Gf2Vector cm = class_of_cycle(surf, m);
  Gf2Vector cm2 = class_of_cycle(surf, m2);
  Gf2Vector cl = class_of_cycle(surf, l);
  Gf2Vector c0 = class_of_cycle(surf, null_sq);

  CHECK(cm.length == 2);
  CHECK_FALSE(cm.is_zero());
  CHECK_FALSE(cl.is_zero());
  CHECK(c0.is_zero());
  CHECK(cm == cm2);        // parallel girdles are homologous
  CHECK_FALSE(cm == cl);   // meridian and longitude are not

  CHECK(independent_in_h1(surf, m, l));
  CHECK_FALSE(independent_in_h1(surf, m, m2));
  CHECK_FALSE(independent_in_h1(surf, m, m));
  CHECK_FALSE(independent_in_h1(surf, null_sq, m));
}

TEST_CASE("splice composes chains over GF(2)") {
  SurfaceComplex surf = boundary_surface(ring3());
  EdgeCycle m = girdle_x1();
  EdgeCycle m2 = girdle_x2();
  EdgeCycle l = hole_rim();

  // Shared vertex (1,1,0).
  EdgeCycle sml = splice_cycles(surf, m, l);
  CHECK(chain_of(sml, surf.complex) ==
        tori::gf2::add(chain_of(m, surf.complex), chain_of(l, surf.complex)));

  // Disjoint walks: BFS connector, doubled, cancels in the chain.
  EdgeCycle smm = splice_cycles(surf, m, m2);
  CHECK(chain_of(smm, surf.complex) ==
        tori::gf2::add(chain_of(m, surf.complex), chain_of(m2, surf.complex)));
  CHECK(class_of_cycle(surf, smm).is_zero());

  // Spliced meridian+longitude is the third nontrivial class.
  Gf2Vector cs = class_of_cycle(surf, sml);
  CHECK(cs == tori::gf2::add(class_of_cycle(surf, m), class_of_cycle(surf, l)));
  CHECK_FALSE(cs.is_zero());
}
