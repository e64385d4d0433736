// Fixture geometry: canonical marked solids, the crossing-count oracles, and
// their agreement with the kernel-based invariant.
#include "tori/fixtures.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "tori/cubical.hpp"
#include "tori/embedding.hpp"
#include "tori/errors.hpp"

using tori::cubical::EdgeCycle;
using tori::cubical::Voxel;
using tori::embedding::ComponentQ;
using tori::embedding::H1Class;
using tori::embedding::MarkedTorusEmbedding;
using tori::fixtures::donut;
using tori::fixtures::drilled_cube;
using tori::fixtures::LatticePath;
using tori::fixtures::linking_parity;
using tori::fixtures::meridian_disc_crossings;
using tori::fixtures::rect_ring_path;
using tori::fixtures::trefoil_path;
using tori::fixtures::trefoil_tube;
using tori::fixtures::tube;

namespace {

long long dist2(const Voxel& a, const Voxel& b) {
  const long long dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return dx * dx + dy * dy + dz * dz;
}

bool contains_point(const LatticePath& path, const Voxel& p) {
  return std::find(path.points.begin(), path.points.end(), p) !=
         path.points.end();
}

constexpr ComponentQ kTubeQ{H1Class::e, H1Class::ee, 0};

}  // namespace

TEST_CASE("lattice path validation") {
  CHECK_THROWS_AS(LatticePath::make({}, false), tori::InputError);
  CHECK_THROWS_AS(
      LatticePath::make({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}, true),
      tori::InputError);
  CHECK_THROWS_AS(LatticePath::make({{0, 0, 0}, {2, 0, 0}}, false),
                  tori::InputError);
  CHECK_THROWS_AS(
      LatticePath::make({{0, 0, 0}, {1, 0, 0}, {0, 0, 0}, {1, 0, 0}}, true),
      tori::InputError);

  const LatticePath dot = LatticePath::make({{5, -3, 7}}, false);
  CHECK(dot.points.size() == 1);
  CHECK_FALSE(dot.closed);

  const LatticePath ring = rect_ring_path();
  CHECK(ring.closed);
  CHECK(ring.points.size() == 8);
  CHECK(ring.points.front() == Voxel{0, 0, 0});
}

TEST_CASE("donut classes") {
  CHECK_THROWS_AS(donut(2), tori::InputError);
  CHECK(q_invariant(donut(3)) == kTubeQ);
  CHECK(q_invariant(donut(4)) == kTubeQ);
  CHECK(q_invariant(donut(5)) == kTubeQ);
}

TEST_CASE("rect ring tube is the smallest donut") {
  const LatticePath ring = rect_ring_path();
  const MarkedTorusEmbedding t = tube(ring);
  const MarkedTorusEmbedding d = donut(3);
  CHECK(t.solid.size() == d.solid.size());
  for (const Voxel& p : ring.points) CHECK(d.solid.contains(p));
  CHECK(q_invariant(t) == q_invariant(d));
}

TEST_CASE("trefoil path shape") {
  const LatticePath path = trefoil_path();
  CHECK(path.closed);
  CHECK(path.points.size() == 236);
  CHECK(path.points.front() == Voxel{0, 6, 0});

  // Three over-strands at z = 2 above three under-strands at z = 0.
  for (const std::int32_t x : {0, 10, 20}) {
    CHECK(contains_point(path, {x, 0, 2}));
    CHECK(contains_point(path, {x, 0, 0}));
  }

  // Strand clearance: any two points more than two steps apart along the
  // path are at squared distance >= 4, so distinct strands never touch.
  const std::size_t n = path.points.size();
  long long worst = 1000;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 3; j < n && j < i + n - 2; ++j) {
      worst = std::min(worst, dist2(path.points[i], path.points[j]));
    }
  }
  CHECK(worst >= 4);
}

TEST_CASE("tube rejects pinches and all-turn paths") {
  // A filled 3x2 rectangle: opposite rows touch away from the path order.
  const LatticePath filled = LatticePath::make(
      {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {2, 1, 0}, {1, 1, 0}, {0, 1, 0}},
      true);
  CHECK_THROWS_AS(tube(filled), tori::PinchedSolid);

  // A hexagonal skew loop that turns at every vertex has no spot for the
  // entry girdle.
  const LatticePath hexloop = LatticePath::make(
      {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 1}, {0, 0, 1}},
      true);
  CHECK_THROWS_AS(tube(hexloop), tori::InputError);

  CHECK_THROWS_AS(tube(LatticePath::make({{0, 0, 0}, {1, 0, 0}}, false)),
                  tori::InputError);
}

TEST_CASE("linking parity guards") {
  const LatticePath ring = rect_ring_path();
  const MarkedTorusEmbedding t = tube(ring);

  // Riding along the core is rejected...
  CHECK_THROWS_AS(linking_parity(EdgeCycle::from_points(ring.points), ring),
                  tori::SharedPoint);
  // ...but merely touching a core point is fine: the girdle contains one.
  CHECK(contains_point(ring, t.m_cycle.points.front()));
  CHECK(linking_parity(t.m_cycle, ring) == 1);

  CHECK_THROWS_AS(
      linking_parity(t.m_cycle,
                     LatticePath::make({{0, 0, 0}, {1, 0, 0}}, false)),
      tori::InputError);

  const LatticePath far_ring = LatticePath::make({{150000, 0, 0},
                                                  {150001, 0, 0},
                                                  {150001, 1, 0},
                                                  {150000, 1, 0}},
                                                 true);
  CHECK_THROWS_AS(linking_parity(t.m_cycle, far_ring), tori::InputError);
}

TEST_CASE("oracle pins on the rect ring") {
  const LatticePath ring = rect_ring_path();
  const MarkedTorusEmbedding t = tube(ring);
  CHECK(meridian_disc_crossings(t.m_cycle, ring) == 0);
  CHECK(meridian_disc_crossings(t.l_cycle, ring) == 1);
  CHECK(linking_parity(t.m_cycle, ring) == 1);
  CHECK(linking_parity(t.l_cycle, ring) == 0);
  CHECK_THROWS_AS(
      meridian_disc_crossings(t.m_cycle,
                              LatticePath::make({{0, 0, 0}, {1, 0, 0}}, false)),
      tori::InputError);
}

TEST_CASE("raw trefoil framing is odd") {
  const LatticePath path = trefoil_path();
  const MarkedTorusEmbedding t = tube(path);
  CHECK(linking_parity(t.l_cycle, path) == 1);
  CHECK(linking_parity(t.m_cycle, path) == 1);
}

TEST_CASE("trefoil tube classes") {
  const MarkedTorusEmbedding even = trefoil_tube(0);
  const MarkedTorusEmbedding odd = trefoil_tube(1);
  CHECK(q_invariant(even) == kTubeQ);
  CHECK(q_invariant(odd) == ComponentQ{H1Class::e, H1Class::eee, 0});
  CHECK(q_invariant(even) == q_invariant(tube(rect_ring_path())));
  CHECK_THROWS_AS(trefoil_tube(2), tori::InputError);
  CHECK_THROWS_AS(trefoil_tube(-1), tori::InputError);
}

TEST_CASE("drilled cube classes") {
  CHECK_THROWS_AS(drilled_cube(3), tori::InputError);
  const ComponentQ expected{H1Class::ee, H1Class::e, 1};
  CHECK(q_invariant(drilled_cube(4)) == expected);
  CHECK(q_invariant(drilled_cube(5)) == expected);
}

TEST_CASE("crossing oracles agree with the kernel solver") {
  struct Probe {
    MarkedTorusEmbedding emb;
    LatticePath core;
  };
  const std::vector<Probe> probes = {
      {tube(rect_ring_path()), rect_ring_path()},
      {trefoil_tube(0), trefoil_path()},
      {trefoil_tube(1), trefoil_path()},
  };
  for (const Probe& probe : probes) {
    const ComponentQ cq = q_invariant(probe.emb);
    for (const H1Class h : {H1Class::e, H1Class::ee, H1Class::eee}) {
      const EdgeCycle cycle = realize_class(
          probe.emb, meridian_bit(h), longitude_bit(h));
      // Null in the solid <=> no pass through the meridian disc.
      CHECK((h == cq.c) == (meridian_disc_crossings(cycle, probe.core) == 0));
      // Null outside <=> even linking with the core.
      CHECK((h == cq.n) == (linking_parity(cycle, probe.core) == 0));
    }
  }
}
