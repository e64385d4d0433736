#include "tori/cubical.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace tori::cubical {

namespace {

std::string voxel_str(const Voxel& v) {
  return "(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ", " +
         std::to_string(v.z) + ")";
}

std::string cell_str(const Cell& c) {
  return "(" + std::to_string(c.x) + ", " + std::to_string(c.y) + ", " +
         std::to_string(c.z) + "; mask " + std::to_string(int(c.mask)) + ")";
}

std::int32_t coord(const Cell& c, int axis) {
  return axis == 0 ? c.x : (axis == 1 ? c.y : c.z);
}

Cell shifted(Cell c, int axis, std::int32_t d) {
  if (axis == 0) c.x += d;
  if (axis == 1) c.y += d;
  if (axis == 2) c.z += d;
  return c;
}

void check_coord_bounds(const Voxel& v) {
  if (v.x < -kCoordBound || v.x > kCoordBound || v.y < -kCoordBound ||
      v.y > kCoordBound || v.z < -kCoordBound || v.z > kCoordBound) {
    throw InputError("coordinate out of range at " + voxel_str(v));
  }
}

// Sorted-unique cell list from an unsorted one with duplicates.
std::vector<Cell> sorted_unique(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

std::optional<std::uint32_t> find_cell(const std::vector<Cell>& cells,
                                       const Cell& c) {
  auto it = std::lower_bound(cells.begin(), cells.end(), c);
  if (it == cells.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::uint32_t>(it - cells.begin());
}

// Boundary matrix from dimension dim to dim-1 over the given sorted lists.
gf2::Gf2Matrix boundary_matrix(const std::vector<Cell>& lower,
                               const std::vector<Cell>& upper) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
  entries.reserve(upper.size() * 6);
  for (std::size_t j = 0; j < upper.size(); ++j) {
    for (const Cell& b : boundary_cells(upper[j])) {
      auto i = find_cell(lower, b);
      if (!i) {
        throw InternalError("boundary cell " + cell_str(b) +
                            " missing from complex");
      }
      entries.push_back({*i, static_cast<std::uint32_t>(j)});
    }
  }
  return gf2::Gf2Matrix::from_entries(lower.size(), upper.size(), entries);
}

// d(d(.)) = 0, checked column by column on the composed boundary.
void check_boundary_squares_to_zero(const gf2::Gf2Matrix& lower,
                                    const gf2::Gf2Matrix& upper) {
  for (std::size_t j = 0; j < upper.cols; ++j) {
    if (!lower.apply(upper.column(j)).is_zero()) {
      throw InternalError("boundary of boundary nonzero at column " +
                          std::to_string(j));
    }
  }
}

struct SurfaceData {
  std::vector<Cell> faces;                          // sorted
  std::vector<std::pair<Voxel, Voxel>> sources;     // aligned with faces
  std::vector<Cell> edges;                          // sorted
  std::vector<std::array<std::uint32_t, 2>> edge_faces;  // aligned with edges
};

// The two edges of a face that contain a given corner vertex.
std::array<Cell, 2> face_edges_at_vertex(const Cell& face, const Cell& v) {
  std::array<Cell, 2> out;
  int n = 0;
  for (int axis = 0; axis < 3; ++axis) {
    if (!(face.mask & (1 << axis))) continue;
    // Edge along `axis`: anchored at the face anchor on that axis, at the
    // vertex's coordinates on the other axes.
    Cell e = v;
    if (axis == 0) e.x = face.x;
    if (axis == 1) e.y = face.y;
    if (axis == 2) e.z = face.z;
    e.mask = static_cast<std::uint8_t>(1 << axis);
    out[n++] = e;
  }
  return out;
}

// Boundary faces with provenance + the closed-2-manifold gate.
SurfaceData collect_surface(const VoxelSolid& solid) {
  static constexpr std::array<std::array<std::int32_t, 3>, 6> kDirs = {{
      {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}};

  std::vector<std::pair<Cell, std::pair<Voxel, Voxel>>> collected;
  for (const Voxel& v : solid.voxels) {
    for (const auto& d : kDirs) {
      const Voxel n{v.x + d[0], v.y + d[1], v.z + d[2]};
      if (solid.contains(n)) continue;
      // Interface perpendicular to the step axis, at the far plane for a
      // positive step and the near plane otherwise.
      int axis = d[0] != 0 ? 0 : (d[1] != 0 ? 1 : 2);
      Cell face{v.x, v.y, v.z,
                static_cast<std::uint8_t>(0b111 & ~(1 << axis))};
      if (d[axis] > 0) face = shifted(face, axis, 1);
      collected.push_back({face, {v, n}});
    }
  }
  std::sort(collected.begin(), collected.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  SurfaceData data;
  data.faces.reserve(collected.size());
  data.sources.reserve(collected.size());
  for (auto& [face, src] : collected) {
    data.faces.push_back(face);
    data.sources.push_back(src);
  }

  // Edge condition: exactly two incident boundary faces per boundary edge.
  std::vector<std::pair<Cell, std::uint32_t>> edge_use;
  edge_use.reserve(data.faces.size() * 4);
  for (std::size_t j = 0; j < data.faces.size(); ++j) {
    for (const Cell& e : boundary_cells(data.faces[j])) {
      edge_use.push_back({e, static_cast<std::uint32_t>(j)});
    }
  }
  std::sort(edge_use.begin(), edge_use.end());
  for (std::size_t i = 0; i < edge_use.size();) {
    std::size_t j = i;
    while (j < edge_use.size() && edge_use[j].first == edge_use[i].first) ++j;
    if (j - i != 2) {
      throw PinchedSolid("boundary edge " + cell_str(edge_use[i].first) +
                         " lies on " + std::to_string(j - i) +
                         " boundary faces (solid cubes meet along an edge "
                         "diagonal)");
    }
    data.edges.push_back(edge_use[i].first);
    data.edge_faces.push_back({edge_use[i].second, edge_use[i + 1].second});
    i = j;
  }

  // Vertex condition: faces around each boundary vertex close into one
  // cycle under share-an-edge-at-this-vertex adjacency.
  std::vector<std::pair<Cell, std::uint32_t>> vertex_use;
  vertex_use.reserve(data.faces.size() * 4);
  for (std::size_t j = 0; j < data.faces.size(); ++j) {
    for (const Cell& v : vertices_of(data.faces[j])) {
      vertex_use.push_back({v, static_cast<std::uint32_t>(j)});
    }
  }
  std::sort(vertex_use.begin(), vertex_use.end());
  std::vector<std::uint32_t> group, stack;
  for (std::size_t i = 0; i < vertex_use.size();) {
    std::size_t j = i;
    group.clear();
    while (j < vertex_use.size() && vertex_use[j].first == vertex_use[i].first) {
      group.push_back(vertex_use[j].second);
      ++j;
    }
    const Cell vert = vertex_use[i].first;
    // Walk the link graph: each face has two edges at this vertex, each
    // such edge joins exactly two faces, so the link is 2-regular; a single
    // cycle reaches the whole group.
    std::vector<bool> seen(group.size(), false);
    stack.assign(1, 0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::uint32_t face_id = group[stack.back()];
      stack.pop_back();
      for (const Cell& e : face_edges_at_vertex(data.faces[face_id], vert)) {
        auto ei = find_cell(data.edges, e);
        if (!ei) throw InternalError("face edge missing from edge list");
        for (std::uint32_t other : data.edge_faces[*ei]) {
          if (other == face_id) continue;
          auto it = std::lower_bound(group.begin(), group.end(), other);
          if (it == group.end() || *it != other) {
            throw InternalError("edge-linked face missing from vertex group");
          }
          const std::size_t k = static_cast<std::size_t>(it - group.begin());
          if (!seen[k]) {
            seen[k] = true;
            ++reached;
            stack.push_back(static_cast<std::uint32_t>(k));
          }
        }
      }
    }
    if (reached != group.size()) {
      throw PinchedSolid("boundary faces around vertex " + cell_str(vert) +
                         " split into multiple cycles (solid cubes meet at a "
                         "corner diagonal)");
    }
    i = j;
  }
  return data;
}

// Union-find with path halving.
struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = std::uint32_t(i);
  }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

VoxelSolid VoxelSolid::from_voxels(std::vector<Voxel> voxels) {
  if (voxels.empty()) throw InputError("voxel solid must be nonempty");
  for (const Voxel& v : voxels) check_coord_bounds(v);
  std::sort(voxels.begin(), voxels.end());
  if (std::adjacent_find(voxels.begin(), voxels.end()) != voxels.end()) {
    throw InputError("duplicate voxel in solid");
  }
  return VoxelSolid{std::move(voxels)};
}

bool VoxelSolid::contains(const Voxel& v) const {
  return std::binary_search(voxels.begin(), voxels.end(), v);
}

std::pair<Voxel, Voxel> VoxelSolid::bounding_box() const {
  Voxel lo = voxels.front(), hi = voxels.front();
  for (const Voxel& v : voxels) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    lo.z = std::min(lo.z, v.z);
    hi.x = std::max(hi.x, v.x);
    hi.y = std::max(hi.y, v.y);
    hi.z = std::max(hi.z, v.z);
  }
  return {lo, hi};
}

int Cell::dim() const { return std::popcount(mask); }

std::vector<Cell> boundary_cells(const Cell& cell) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(2 * cell.dim()));
  for (int axis = 0; axis < 3; ++axis) {
    if (!(cell.mask & (1 << axis))) continue;
    Cell near = cell;
    near.mask = static_cast<std::uint8_t>(cell.mask & ~(1 << axis));
    out.push_back(near);
    out.push_back(shifted(near, axis, 1));
  }
  return out;
}

std::vector<Cell> vertices_of(const Cell& cell) {
  std::vector<Cell> out;
  const int d = cell.dim();
  out.reserve(std::size_t{1} << d);
  std::array<int, 3> axes{};
  int n = 0;
  for (int axis = 0; axis < 3; ++axis) {
    if (cell.mask & (1 << axis)) axes[n++] = axis;
  }
  for (int pick = 0; pick < (1 << n); ++pick) {
    Cell v = cell;
    v.mask = 0;
    for (int i = 0; i < n; ++i) {
      if (pick & (1 << i)) v = shifted(v, axes[i], 1);
    }
    out.push_back(v);
  }
  return out;
}

std::optional<std::uint32_t> CubicalComplex::index_of(int dim,
                                                      const Cell& cell) const {
  return find_cell(cells[dim], cell);
}

CubicalComplex build_complex(const VoxelSolid& solid) {
  collect_surface(solid);  // closed-2-manifold gate

  CubicalComplex cx;
  std::vector<Cell> cubes;
  cubes.reserve(solid.size());
  for (const Voxel& v : solid.voxels) cubes.push_back({v.x, v.y, v.z, 0b111});
  cx.cells[3] = std::move(cubes);  // already sorted (voxels sorted, same key)

  std::vector<Cell> faces;
  faces.reserve(solid.size() * 6);
  for (const Cell& c : cx.cells[3]) {
    for (const Cell& f : boundary_cells(c)) faces.push_back(f);
  }
  cx.cells[2] = sorted_unique(std::move(faces));

  std::vector<Cell> edges;
  edges.reserve(cx.cells[2].size() * 4);
  for (const Cell& f : cx.cells[2]) {
    for (const Cell& e : boundary_cells(f)) edges.push_back(e);
  }
  cx.cells[1] = sorted_unique(std::move(edges));

  std::vector<Cell> verts;
  verts.reserve(cx.cells[1].size() * 2);
  for (const Cell& e : cx.cells[1]) {
    for (const Cell& v : boundary_cells(e)) verts.push_back(v);
  }
  cx.cells[0] = sorted_unique(std::move(verts));

  cx.d1 = boundary_matrix(cx.cells[0], cx.cells[1]);
  cx.d2 = boundary_matrix(cx.cells[1], cx.cells[2]);
  cx.d3 = boundary_matrix(cx.cells[2], cx.cells[3]);
  check_boundary_squares_to_zero(cx.d1, cx.d2);
  check_boundary_squares_to_zero(cx.d2, cx.d3);
  return cx;
}

SurfaceComplex boundary_surface(const VoxelSolid& solid) {
  SurfaceData data = collect_surface(solid);

  SurfaceComplex surface;
  surface.complex.cells[2] = data.faces;
  surface.face_sources = data.sources;
  surface.complex.cells[1] = data.edges;

  std::vector<Cell> verts;
  verts.reserve(data.edges.size() * 2);
  for (const Cell& e : data.edges) {
    for (const Cell& v : boundary_cells(e)) verts.push_back(v);
  }
  surface.complex.cells[0] = sorted_unique(std::move(verts));

  surface.complex.d1 =
      boundary_matrix(surface.complex.cells[0], surface.complex.cells[1]);
  surface.complex.d2 =
      boundary_matrix(surface.complex.cells[1], surface.complex.cells[2]);
  surface.complex.d3 = gf2::Gf2Matrix::zeros(surface.complex.cells[2].size(), 0);
  check_boundary_squares_to_zero(surface.complex.d1, surface.complex.d2);
  return surface;
}

std::array<std::size_t, 3> betti_numbers(const CubicalComplex& complex) {
  const std::size_t r1 = gf2::rank(complex.d1);
  const std::size_t r2 = gf2::rank(complex.d2);
  const std::size_t r3 = gf2::rank(complex.d3);
  return {complex.count(0) - r1, complex.count(1) - r1 - r2,
          complex.count(2) - r2 - r3};
}

long long euler_characteristic(const CubicalComplex& complex) {
  return static_cast<long long>(complex.count(0)) -
         static_cast<long long>(complex.count(1)) +
         static_cast<long long>(complex.count(2)) -
         static_cast<long long>(complex.count(3));
}

bool is_connected(const CubicalComplex& complex) {
  if (complex.count(0) == 0) return false;
  UnionFind uf(complex.count(0));
  for (const Cell& e : complex.cells[1]) {
    const auto b = boundary_cells(e);
    auto i0 = complex.index_of(0, b[0]);
    auto i1 = complex.index_of(0, b[1]);
    if (!i0 || !i1) throw InternalError("edge endpoint missing from complex");
    uf.unite(*i0, *i1);
  }
  const std::uint32_t root = uf.find(0);
  for (std::uint32_t i = 1; i < complex.count(0); ++i) {
    if (uf.find(i) != root) return false;
  }
  return true;
}

bool is_torus(const SurfaceComplex& surface) {
  return is_connected(surface.complex) &&
         euler_characteristic(surface.complex) == 0;
}

EdgeCycle EdgeCycle::from_points(std::vector<Voxel> points) {
  if (points.size() < 2) {
    throw InputError("edge cycle needs at least 2 points");
  }
  for (const Voxel& p : points) check_coord_bounds(p);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Voxel& a = points[i];
    const Voxel& b = points[(i + 1) % points.size()];
    const std::int64_t dx = std::int64_t{b.x} - a.x;
    const std::int64_t dy = std::int64_t{b.y} - a.y;
    const std::int64_t dz = std::int64_t{b.z} - a.z;
    if (dx * dx + dy * dy + dz * dz != 1) {
      throw InputError("cycle step " + voxel_str(a) + " -> " + voxel_str(b) +
                       " is not a unit lattice step");
    }
  }
  return EdgeCycle{std::move(points)};
}

std::vector<Cell> EdgeCycle::step_edges() const {
  std::vector<Cell> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Voxel& a = points[i];
    const Voxel& b = points[(i + 1) % points.size()];
    Cell e{std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z), 0};
    if (a.x != b.x) e.mask = 1;
    if (a.y != b.y) e.mask = 2;
    if (a.z != b.z) e.mask = 4;
    out.push_back(e);
  }
  return out;
}

gf2::Gf2Vector chain_of(const EdgeCycle& cycle, const CubicalComplex& complex) {
  std::vector<std::uint32_t> hits;
  hits.reserve(cycle.points.size());
  for (const Cell& e : cycle.step_edges()) {
    auto i = find_cell(complex.cells[1], e);
    if (!i) {
      throw CycleNotOnSurface("cycle edge " + cell_str(e) +
                              " is not an edge of the complex");
    }
    hits.push_back(*i);
  }
  std::sort(hits.begin(), hits.end());
  std::vector<std::uint32_t> support;
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j < hits.size() && hits[j] == hits[i]) ++j;
    if ((j - i) % 2 == 1) support.push_back(hits[i]);
    i = j;
  }
  return gf2::Gf2Vector{complex.count(1), std::move(support)};
}

bool chain_supported(const EdgeCycle& cycle, const CubicalComplex& complex) {
  for (const Cell& e : cycle.step_edges()) {
    if (!find_cell(complex.cells[1], e)) return false;
  }
  return true;
}

namespace {

// Deterministic H1 machinery shared by class/independence queries: a cached
// reduction of d2 plus an echelonized residual basis with one
// fundamental-cycle representative per basis slot.
struct H1Basis {
  gf2::Gf2Solver boundary_solver;
  std::vector<gf2::Gf2Vector> residuals;  // mutually distinct low rows

  explicit H1Basis(const SurfaceComplex& surface)
      : boundary_solver(surface.complex.d2) {
    const auto& complex = surface.complex;
    const std::size_t edge_count = complex.count(1);
    const std::size_t vertex_count = complex.count(0);
    const std::size_t rank_d1 = gf2::rank(complex.d1);
    const std::size_t want =
        edge_count - rank_d1 - boundary_solver.rank();  // h1 rank

    // Lexicographic BFS spanning forest over the 1-skeleton.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(
        vertex_count);  // vertex -> (neighbor vertex, edge index)
    for (std::size_t ei = 0; ei < edge_count; ++ei) {
      const auto b = boundary_cells(complex.cells[1][ei]);
      auto i0 = complex.index_of(0, b[0]);
      auto i1 = complex.index_of(0, b[1]);
      if (!i0 || !i1) throw InternalError("edge endpoint missing");
      adj[*i0].push_back({*i1, static_cast<std::uint32_t>(ei)});
      adj[*i1].push_back({*i0, static_cast<std::uint32_t>(ei)});
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    constexpr std::uint32_t kUnset = 0xffffffffu;
    std::vector<std::uint32_t> parent_edge(vertex_count, kUnset);
    std::vector<std::uint32_t> parent_vertex(vertex_count, kUnset);
    std::vector<bool> visited(vertex_count, false);
    std::vector<bool> tree_edge(edge_count, false);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t root = 0; root < vertex_count; ++root) {
      if (visited[root]) continue;
      visited[root] = true;
      queue.assign(1, root);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t u = queue[head];
        for (const auto& [v, ei] : adj[u]) {
          if (visited[v]) continue;
          visited[v] = true;
          parent_edge[v] = ei;
          parent_vertex[v] = u;
          tree_edge[ei] = true;
          queue.push_back(v);
        }
      }
    }

    // Fundamental cycle of a non-tree edge: the edge plus both root paths
    // (shared segments above the meeting point cancel over GF(2)).
    auto fundamental_chain = [&](std::uint32_t ei) {
      std::vector<std::uint32_t> acc{ei};
      const auto b = boundary_cells(complex.cells[1][ei]);
      for (const Cell& endpoint : b) {
        std::uint32_t v = *complex.index_of(0, endpoint);
        while (parent_edge[v] != kUnset) {
          acc.push_back(parent_edge[v]);
          v = parent_vertex[v];
        }
      }
      std::sort(acc.begin(), acc.end());
      std::vector<std::uint32_t> support;
      for (std::size_t i = 0; i < acc.size();) {
        std::size_t j = i;
        while (j < acc.size() && acc[j] == acc[i]) ++j;
        if ((j - i) % 2 == 1) support.push_back(acc[i]);
        i = j;
      }
      return gf2::Gf2Vector{edge_count, std::move(support)};
    };

    for (std::uint32_t ei = 0; ei < edge_count && residuals.size() < want;
         ++ei) {
      if (tree_edge[ei]) continue;
      gf2::Gf2Vector r = boundary_solver.reduce(fundamental_chain(ei));
      r = eliminate(r, nullptr);
      if (!r.is_zero()) residuals.push_back(std::move(r));
    }
    if (residuals.size() != want) {
      throw InternalError("fundamental cycles span less than H1");
    }
  }

  // Reduce r against the collected residuals; when `used` is non-null,
  // records which basis slots took part.
  gf2::Gf2Vector eliminate(gf2::Gf2Vector r,
                           std::vector<std::uint32_t>* used) const {
    bool progress = true;
    while (!r.is_zero() && progress) {
      progress = false;
      for (std::size_t k = 0; k < residuals.size(); ++k) {
        if (!r.is_zero() &&
            residuals[k].support.back() == r.support.back()) {
          r = gf2::add(r, residuals[k]);
          if (used) used->push_back(static_cast<std::uint32_t>(k));
          progress = true;
          break;
        }
      }
    }
    return r;
  }
};

}  // namespace

std::size_t h1_rank(const SurfaceComplex& surface) {
  const auto& complex = surface.complex;
  return complex.count(1) - gf2::rank(complex.d1) - gf2::rank(complex.d2);
}

gf2::Gf2Vector class_of_cycle(const SurfaceComplex& surface,
                              const EdgeCycle& cycle) {
  H1Basis basis(surface);
  gf2::Gf2Vector r = basis.boundary_solver.reduce(chain_of(cycle, surface.complex));
  std::vector<std::uint32_t> used;
  r = basis.eliminate(std::move(r), &used);
  if (!r.is_zero()) {
    throw InternalError("cycle residual escapes the H1 basis");
  }
  std::sort(used.begin(), used.end());
  std::vector<std::uint32_t> support;
  for (std::size_t i = 0; i < used.size();) {
    std::size_t j = i;
    while (j < used.size() && used[j] == used[i]) ++j;
    if ((j - i) % 2 == 1) support.push_back(used[i]);
    i = j;
  }
  return gf2::Gf2Vector{basis.residuals.size(), std::move(support)};
}

bool independent_in_h1(const SurfaceComplex& surface, const EdgeCycle& a,
                       const EdgeCycle& b) {
  // reduce() is a linear normal form modulo boundaries, so two classes
  // coincide exactly when their residuals are identical, and a class is
  // trivial exactly when its residual is zero.
  gf2::Gf2Solver solver(surface.complex.d2);
  gf2::Gf2Vector ra = solver.reduce(chain_of(a, surface.complex));
  gf2::Gf2Vector rb = solver.reduce(chain_of(b, surface.complex));
  return !ra.is_zero() && !rb.is_zero() && !(ra == rb);
}

EdgeCycle splice_cycles(const SurfaceComplex& surface, const EdgeCycle& a,
                        const EdgeCycle& b) {
  const auto& complex = surface.complex;
  if (!chain_supported(a, complex) || !chain_supported(b, complex)) {
    throw CycleNotOnSurface("splice endpoints must lie on the surface");
  }

  // Find a meeting vertex of the two walks, if any (smallest position in a).
  std::vector<Voxel> b_sorted = b.points;
  std::sort(b_sorted.begin(), b_sorted.end());
  std::size_t a_at = a.points.size();
  std::size_t b_at = 0;
  std::vector<Voxel> connector;  // path from a-walk to b-walk, exclusive ends
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    if (std::binary_search(b_sorted.begin(), b_sorted.end(), a.points[i])) {
      a_at = i;
      break;
    }
  }
  if (a_at < a.points.size()) {
    const Voxel& u = a.points[a_at];
    for (std::size_t j = 0; j < b.points.size(); ++j) {
      if (b.points[j] == u) {
        b_at = j;
        break;
      }
    }
  } else {
    // BFS along surface edges from every a-vertex to the nearest b-vertex.
    const std::size_t vertex_count = complex.count(0);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(
        vertex_count);
    for (std::size_t ei = 0; ei < complex.count(1); ++ei) {
      const auto bd = boundary_cells(complex.cells[1][ei]);
      auto i0 = complex.index_of(0, bd[0]);
      auto i1 = complex.index_of(0, bd[1]);
      adj[*i0].push_back({*i1, static_cast<std::uint32_t>(ei)});
      adj[*i1].push_back({*i0, static_cast<std::uint32_t>(ei)});
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    auto vertex_index = [&](const Voxel& p) {
      auto i = complex.index_of(0, Cell{p.x, p.y, p.z, 0});
      if (!i) throw InternalError("walk vertex missing from surface");
      return *i;
    };
    constexpr std::uint32_t kUnset = 0xffffffffu;
    std::vector<std::uint32_t> prev(vertex_count, kUnset);
    std::vector<bool> from_a(vertex_count, false);
    std::vector<std::uint32_t> queue;
    std::vector<Voxel> a_sorted = a.points;
    std::sort(a_sorted.begin(), a_sorted.end());
    a_sorted.erase(std::unique(a_sorted.begin(), a_sorted.end()),
                   a_sorted.end());
    for (const Voxel& p : a_sorted) {
      const std::uint32_t i = vertex_index(p);
      if (!from_a[i]) {
        from_a[i] = true;
        queue.push_back(i);
      }
    }
    std::vector<bool> is_b(vertex_count, false);
    for (const Voxel& p : b.points) is_b[vertex_index(p)] = true;

    std::uint32_t hit = kUnset;
    for (std::size_t head = 0; head < queue.size() && hit == kUnset; ++head) {
      const std::uint32_t u = queue[head];
      for (const auto& [v, ei] : adj[u]) {
        (void)ei;
        if (from_a[v] || prev[v] != kUnset) continue;
        prev[v] = u;
        if (is_b[v]) {
          hit = v;
          break;
        }
        queue.push_back(v);
      }
    }
    if (hit == kUnset) {
      throw InternalError("surface is disconnected between the two walks");
    }
    // Reconstruct hit -> ... -> (a vertex).
    std::vector<Voxel> path;
    std::uint32_t cur = hit;
    while (true) {
      const Cell& c = complex.cells[0][cur];
      path.push_back(Voxel{c.x, c.y, c.z});
      if (from_a[cur]) break;
      cur = prev[cur];
    }
    std::reverse(path.begin(), path.end());  // a-vertex ... b-vertex
    // Locate the endpoints inside the walks.
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      if (a.points[i] == path.front()) {
        a_at = i;
        break;
      }
    }
    for (std::size_t j = 0; j < b.points.size(); ++j) {
      if (b.points[j] == path.back()) {
        b_at = j;
        break;
      }
    }
    connector.assign(path.begin() + 1, path.end());  // exclude the a-vertex
  }

  // Assemble: a from its meeting point all the way around, the connector
  // out, b all the way around, the connector back.  Without a connector the
  // closing step of b runs straight back into the start of a; with one, the
  // first connector point closes back to the a meeting vertex.
  std::vector<Voxel> pts;
  pts.reserve(a.points.size() + b.points.size() + 2 * connector.size() + 2);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    pts.push_back(a.points[(a_at + i) % a.points.size()]);
  }
  pts.push_back(a.points[a_at]);
  for (const Voxel& p : connector) pts.push_back(p);
  for (std::size_t j = 1; j < b.points.size(); ++j) {
    pts.push_back(b.points[(b_at + j) % b.points.size()]);
  }
  if (!connector.empty()) {
    pts.push_back(b.points[b_at]);
    for (std::size_t k = connector.size() - 1; k-- > 0;) {
      pts.push_back(connector[k]);
    }
  }
  return EdgeCycle::from_points(std::move(pts));
}

}  // namespace tori::cubical
