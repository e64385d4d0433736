#include "tori/fixtures.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

namespace tori::fixtures {

namespace {

using cubical::Voxel;

std::int32_t coord(const Voxel& v, int axis) {
  switch (axis) {
    case 0: return v.x;
    case 1: return v.y;
    case 2: return v.z;
  }
  throw InternalError("axis out of range");
}

Voxel unit(int axis) {
  Voxel v;
  if (axis == 0) v.x = 1;
  if (axis == 1) v.y = 1;
  if (axis == 2) v.z = 1;
  return v;
}

Voxel add(const Voxel& a, const Voxel& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

long long dist2(const Voxel& a, const Voxel& b) {
  const long long dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return dx * dx + dy * dy + dz * dz;
}

// Axis of a unit step (callers guarantee unit distance).
int step_axis(const Voxel& a, const Voxel& b) {
  if (a.x != b.x) return 0;
  if (a.y != b.y) return 1;
  return 2;
}

// Smallest cyclic index i >= 1 whose incoming and outgoing step directions
// agree; -1 when every vertex is a turn.
int first_straight_vertex(const std::vector<Voxel>& pts) {
  const int n = static_cast<int>(pts.size());
  for (int i = 1; i <= n; ++i) {
    const Voxel& prev = pts[static_cast<std::size_t>(i - 1)];
    const Voxel& cur = pts[static_cast<std::size_t>(i % n)];
    const Voxel& next = pts[static_cast<std::size_t>((i + 1) % n)];
    const Voxel in{cur.x - prev.x, cur.y - prev.y, cur.z - prev.z};
    const Voxel out{next.x - cur.x, next.y - cur.y, next.z - cur.z};
    if (in == out) return i;  // the girdle face sits between pts[i-1], pts[i]
  }
  return -1;
}

// Boundary square of the interior face between consecutive tube voxels
// pts[i-1] and pts[i]: anchored at their componentwise max, spanning the
// two axes transverse to the step.
cubical::EdgeCycle girdle_at(const std::vector<Voxel>& pts, int i) {
  const int n = static_cast<int>(pts.size());
  const Voxel& prev = pts[static_cast<std::size_t>((i - 1 + n) % n)];
  const Voxel& cur = pts[static_cast<std::size_t>(i % n)];
  const int d = step_axis(prev, cur);
  const Voxel anchor{std::max(prev.x, cur.x), std::max(prev.y, cur.y),
                     std::max(prev.z, cur.z)};
  int u = -1, v = -1;
  for (int axis = 0; axis < 3; ++axis) {
    if (axis == d) continue;
    (u < 0 ? u : v) = axis;
  }
  return cubical::EdgeCycle::from_points(
      {anchor, add(anchor, unit(u)), add(add(anchor, unit(u)), unit(v)),
       add(anchor, unit(v))});
}

// The path translated by (1, 1, 1): the far-corner parallel walk.
cubical::EdgeCycle far_corner_walk(const std::vector<Voxel>& pts) {
  std::vector<Voxel> shifted;
  shifted.reserve(pts.size());
  for (const Voxel& p : pts) shifted.push_back({p.x + 1, p.y + 1, p.z + 1});
  return cubical::EdgeCycle::from_points(std::move(shifted));
}

// Non-consecutive points at squared distance <= 1 would make the tube
// voxels coincide or share a face away from the path order.
void check_taut(const LatticePath& path) {
  const std::size_t n = path.points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool consecutive =
          (j == i + 1) || (path.closed && i == 0 && j == n - 1);
      if (consecutive) continue;
      if (dist2(path.points[i], path.points[j]) <= 1) {
        throw PinchedSolid(
            "path points " + std::to_string(i) + " and " + std::to_string(j) +
            " are identical or face-adjacent but not consecutive; the tube "
            "would touch itself");
      }
    }
  }
}

constexpr std::int32_t kLinkCoordBound = 100000;

void check_link_coords(const std::vector<Voxel>& pts, const char* what) {
  for (const Voxel& p : pts) {
    if (std::abs(p.x) > kLinkCoordBound || std::abs(p.y) > kLinkCoordBound ||
        std::abs(p.z) > kLinkCoordBound) {
      throw InputError(std::string(what) +
                       " coordinates must have magnitude at most " +
                       std::to_string(kLinkCoordBound) +
                       " for the crossing computation");
    }
  }
}

struct Triple {
  __int128 x, y, z;
};

__int128 det3(const Triple& a, const Triple& b, const Triple& c) {
  return a.x * (b.y * c.z - b.z * c.y) - b.x * (a.y * c.z - a.z * c.y) +
         c.x * (a.y * b.z - a.z * b.y);
}

// Strictly between 0 and 1 as a fraction n/d (d != 0).
bool open_unit(__int128 n, __int128 d) {
  if (d > 0) return n > 0 && n < d;
  return n < 0 && n > d;
}

}  // namespace

LatticePath LatticePath::make(std::vector<Voxel> points, bool closed) {
  if (points.empty()) {
    throw InputError("a lattice path needs at least one point");
  }
  if (closed && points.size() < 4) {
    throw InputError("a closed lattice path needs at least 4 points");
  }
  for (const Voxel& p : points) {
    if (std::abs(p.x) >= cubical::kCoordBound ||
        std::abs(p.y) >= cubical::kCoordBound ||
        std::abs(p.z) >= cubical::kCoordBound) {
      throw InputError("path coordinate out of bounds");
    }
  }
  const std::size_t n = points.size();
  const std::size_t steps = closed ? n : n - 1;
  for (std::size_t k = 0; k < steps; ++k) {
    if (dist2(points[k], points[(k + 1) % n]) != 1) {
      throw InputError("path points " + std::to_string(k) + " and " +
                       std::to_string((k + 1) % n) +
                       " are not at unit distance");
    }
  }
  std::vector<Voxel> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("path revisits a point; it must be simple");
  }
  LatticePath out;
  out.points = std::move(points);
  out.closed = closed;
  return out;
}

embedding::MarkedTorusEmbedding donut(int outer, int box_margin) {
  if (outer < 3) {
    throw InputError("donut needs outer >= 3, got " + std::to_string(outer));
  }
  std::vector<Voxel> voxels;
  for (std::int32_t x = 0; x < outer; ++x) {
    for (std::int32_t y = 0; y < outer; ++y) {
      if (x > 0 && x < outer - 1 && y > 0 && y < outer - 1) continue;
      voxels.push_back({x, y, 0});
    }
  }
  const cubical::EdgeCycle m = cubical::EdgeCycle::from_points(
      {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}});
  // Inner-rim walk of the hole in the bottom plane.
  std::vector<Voxel> rim;
  const std::int32_t hi = outer - 1;
  for (std::int32_t x = 1; x < hi; ++x) rim.push_back({x, 1, 0});
  for (std::int32_t y = 1; y < hi; ++y) rim.push_back({hi, y, 0});
  for (std::int32_t x = hi; x > 1; --x) rim.push_back({x, hi, 0});
  for (std::int32_t y = hi; y > 1; --y) rim.push_back({1, y, 0});
  const cubical::EdgeCycle l = cubical::EdgeCycle::from_points(std::move(rim));
  return embedding::MarkedTorusEmbedding::make(
      cubical::VoxelSolid::from_voxels(std::move(voxels)), m, l, box_margin);
}

LatticePath rect_ring_path() {
  return LatticePath::make({{0, 0, 0},
                            {1, 0, 0},
                            {2, 0, 0},
                            {2, 1, 0},
                            {2, 2, 0},
                            {1, 2, 0},
                            {0, 2, 0},
                            {0, 1, 0}},
                           true);
}

LatticePath trefoil_path() {
  std::vector<Voxel> pts;
  pts.push_back({0, 6, 0});
  const auto line_to = [&pts](std::int32_t x, std::int32_t y, std::int32_t z) {
    const Voxel target{x, y, z};
    Voxel cur = pts.back();
    while (!(cur == target)) {
      if (cur.x != target.x) cur.x += target.x > cur.x ? 1 : -1;
      else if (cur.y != target.y) cur.y += target.y > cur.y ? 1 : -1;
      else cur.z += target.z > cur.z ? 1 : -1;
      pts.push_back(cur);
    }
  };
  // Descent through a crossing column: the strand leaves the plane and
  // bridges over the y = 0 rail at height z = 2.
  const auto descend_bridge = [&](std::int32_t x) {
    line_to(x, 2, 0);
    line_to(x, 2, 2);
    line_to(x, -2, 2);
    line_to(x, -2, 0);
    line_to(x, -4, 0);
  };

  descend_bridge(0);
  line_to(4, -4, 0);
  line_to(4, 0, 0);
  line_to(12, 0, 0);  // under the bridge at x = 10
  line_to(12, 6, 0);
  line_to(20, 6, 0);
  descend_bridge(20);
  line_to(24, -4, 0);
  line_to(24, 0, 0);
  line_to(30, 0, 0);
  line_to(30, -8, 0);  // bottom closure
  line_to(-8, -8, 0);
  line_to(-8, 0, 0);
  line_to(2, 0, 0);  // under the bridge at x = 0
  line_to(2, 6, 0);
  line_to(10, 6, 0);
  descend_bridge(10);
  line_to(14, -4, 0);
  line_to(14, 0, 0);
  line_to(22, 0, 0);  // under the bridge at x = 20
  line_to(22, 6, 0);
  line_to(28, 6, 0);  // top closure
  line_to(28, 10, 0);
  line_to(-4, 10, 0);
  line_to(-4, 6, 0);
  line_to(0, 6, 0);
  pts.pop_back();  // the closing step is implied

  return LatticePath::make(std::move(pts), true);
}

embedding::MarkedTorusEmbedding tube(const LatticePath& path, int box_margin) {
  if (!path.closed) {
    throw InputError("tube needs a closed path");
  }
  check_taut(path);
  const int straight = first_straight_vertex(path.points);
  if (straight < 0) {
    throw InputError(
        "path has no straight vertex; the entry girdle needs two consecutive "
        "steps in the same direction");
  }
  cubical::EdgeCycle m = girdle_at(path.points, straight);
  cubical::EdgeCycle l = far_corner_walk(path.points);
  return embedding::MarkedTorusEmbedding::make(
      cubical::VoxelSolid::from_voxels(path.points), std::move(m), std::move(l),
      box_margin);
}

embedding::MarkedTorusEmbedding drilled_cube(int side, int box_margin) {
  if (side < 4) {
    throw InputError("drilled_cube needs side >= 4, got " +
                     std::to_string(side));
  }
  std::vector<Voxel> voxels;
  voxels.reserve(static_cast<std::size_t>(side) * side * side - side);
  for (std::int32_t x = 0; x < side; ++x) {
    for (std::int32_t y = 0; y < side; ++y) {
      for (std::int32_t z = 0; z < side; ++z) {
        if (y == 1 && z == 1) continue;  // the tunnel
        voxels.push_back({x, y, z});
      }
    }
  }
  const cubical::EdgeCycle m = cubical::EdgeCycle::from_points(
      {{0, 1, 1}, {0, 2, 1}, {0, 2, 2}, {0, 1, 2}});
  // Through the tunnel along its floor line, back under the bottom wall.
  std::vector<Voxel> through;
  for (std::int32_t x = 0; x <= side; ++x) through.push_back({x, 1, 1});
  for (std::int32_t x = side; x >= 0; --x) through.push_back({x, 1, 0});
  const cubical::EdgeCycle l =
      cubical::EdgeCycle::from_points(std::move(through));
  return embedding::MarkedTorusEmbedding::make(
      cubical::VoxelSolid::from_voxels(std::move(voxels)), m, l, box_margin);
}

embedding::MarkedTorusEmbedding trefoil_tube(int framing_parity,
                                             int box_margin) {
  if (framing_parity != 0 && framing_parity != 1) {
    throw InputError("framing_parity must be 0 or 1, got " +
                     std::to_string(framing_parity));
  }
  const LatticePath path = trefoil_path();
  embedding::MarkedTorusEmbedding out = tube(path, box_margin);
  if (linking_parity(out.l_cycle, path) != framing_parity) {
    out = embedding::adjust_framing(out);
    if (linking_parity(out.l_cycle, path) != framing_parity) {
      throw InternalError("framing adjustment did not flip the linking parity");
    }
  }
  return out;
}

int linking_parity(const cubical::EdgeCycle& cycle, const LatticePath& core) {
  if (!core.closed) {
    throw InputError("linking parity needs a closed core path");
  }
  check_link_coords(cycle.points, "cycle");
  check_link_coords(core.points, "core");

  // A cycle step that runs along a core edge makes the framing reading
  // meaningless.
  std::vector<std::pair<Voxel, Voxel>> core_edges;
  const std::size_t cn = core.points.size();
  core_edges.reserve(cn);
  for (std::size_t k = 0; k < cn; ++k) {
    Voxel a = core.points[k];
    Voxel b = core.points[(k + 1) % cn];
    if (b < a) std::swap(a, b);
    core_edges.push_back({a, b});
  }
  std::sort(core_edges.begin(), core_edges.end());
  const std::size_t yn = cycle.points.size();
  for (std::size_t k = 0; k < yn; ++k) {
    Voxel a = cycle.points[k];
    Voxel b = cycle.points[(k + 1) % yn];
    if (b < a) std::swap(a, b);
    if (std::binary_search(core_edges.begin(), core_edges.end(),
                           std::make_pair(a, b))) {
      throw SharedPoint("cycle traverses a core edge at step " +
                        std::to_string(k));
    }
  }

  // Double all coordinates: cycle vertices become even, core centers odd, so
  // the two curves are disjoint and, with the projection direction below, no
  // crossing test can land on a boundary case.
  const Triple v{3, 1000003, 1000033};
  int parity = 0;
  for (std::size_t i = 0; i < yn; ++i) {
    const Voxel& a0v = cycle.points[i];
    const Voxel& a1v = cycle.points[(i + 1) % yn];
    const Triple a0{2 * static_cast<__int128>(a0v.x),
                    2 * static_cast<__int128>(a0v.y),
                    2 * static_cast<__int128>(a0v.z)};
    const Triple da{2 * static_cast<__int128>(a1v.x - a0v.x),
                    2 * static_cast<__int128>(a1v.y - a0v.y),
                    2 * static_cast<__int128>(a1v.z - a0v.z)};
    for (std::size_t j = 0; j < cn; ++j) {
      const Voxel& b0v = core.points[j];
      const Voxel& b1v = core.points[(j + 1) % cn];
      const Triple b0{2 * static_cast<__int128>(b0v.x) + 1,
                      2 * static_cast<__int128>(b0v.y) + 1,
                      2 * static_cast<__int128>(b0v.z) + 1};
      const Triple db{2 * static_cast<__int128>(b1v.x - b0v.x),
                      2 * static_cast<__int128>(b1v.y - b0v.y),
                      2 * static_cast<__int128>(b1v.z - b0v.z)};
      // Solve s*da - t*db - w*v = b0 - a0 by Cramer's rule; a transverse
      // projected crossing has s, t strictly inside (0, 1), and the cycle
      // passes in front when w > 0.
      const Triple ndb{-db.x, -db.y, -db.z};
      const Triple nv{-v.x, -v.y, -v.z};
      const Triple r{b0.x - a0.x, b0.y - a0.y, b0.z - a0.z};
      const __int128 d = det3(da, ndb, nv);
      if (d == 0) continue;  // parallel segments never overlap here
      const __int128 ds = det3(r, ndb, nv);
      if (!open_unit(ds, d)) continue;
      const __int128 dt = det3(da, r, nv);
      if (!open_unit(dt, d)) continue;
      const __int128 dw = det3(da, ndb, r);
      if (dw == 0) {
        throw InternalError(
            "projected crossing with zero height; impossible for "
            "parity-offset curves");
      }
      if ((d > 0) == (dw > 0)) parity ^= 1;
    }
  }
  return parity;
}

int meridian_disc_crossings(const cubical::EdgeCycle& cycle,
                            const LatticePath& core) {
  if (!core.closed) {
    throw InputError("the meridian disc needs a closed core path");
  }
  const int straight = first_straight_vertex(core.points);
  if (straight < 0) {
    throw InputError("core path has no straight vertex for a meridian disc");
  }
  const int n = static_cast<int>(core.points.size());
  const Voxel& before = core.points[static_cast<std::size_t>(straight - 1)];
  const Voxel& mid = core.points[static_cast<std::size_t>(straight % n)];
  const int d = step_axis(before, mid);
  int u = -1, v = -1;
  for (int axis = 0; axis < 3; ++axis) {
    if (axis == d) continue;
    (u < 0 ? u : v) = axis;
  }
  // The straight vertex is the middle of three collinear tube voxels, so
  // both axis caps of `mid` are interior and its four side faces are clean
  // surface.  The ring of the tube surface girdling `mid` halfway along is
  // isotopic to the marking girdle one cap over, and a surface cycle
  // crosses it once per step along one of the four corner rails of `mid`.
  int parity = 0;
  const std::size_t yn = cycle.points.size();
  for (std::size_t k = 0; k < yn; ++k) {
    const Voxel& p = cycle.points[k];
    const Voxel& q = cycle.points[(k + 1) % yn];
    if (step_axis(p, q) != d) continue;
    if (std::min(coord(p, d), coord(q, d)) != coord(mid, d)) continue;
    const std::int32_t pu = coord(p, u), pv = coord(p, v);
    if ((pu == coord(mid, u) || pu == coord(mid, u) + 1) &&
        (pv == coord(mid, v) || pv == coord(mid, v) + 1)) {
      parity ^= 1;
    }
  }
  return parity;
}

}  // namespace tori::fixtures
