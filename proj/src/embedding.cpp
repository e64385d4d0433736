#include "tori/embedding.hpp"

#include <cstdlib>
#include <string>
#include <utility>

namespace tori::embedding {

namespace {

// The unique nonzero marking class whose chain is a GF(2) boundary in the
// region.  The candidate chains are m, l, m XOR l over the region's edges.
H1Class bounding_class(const cubical::CubicalComplex& region,
                       const cubical::EdgeCycle& m_cycle,
                       const cubical::EdgeCycle& l_cycle,
                       const char* region_name) {
  gf2::Gf2Vector chain_m, chain_l;
  try {
    chain_m = cubical::chain_of(m_cycle, region);
    chain_l = cubical::chain_of(l_cycle, region);
  } catch (const CycleNotOnSurface& e) {
    throw KernelDimensionError(std::string("a marking cycle leaves the ") +
                               region_name +
                               " region (box_margin too small?): " + e.what());
  }

  const gf2::Gf2Solver faces(region.d2);
  int found = 0;
  H1Class result = H1Class::e;
  for (const H1Class h : {H1Class::e, H1Class::ee, H1Class::eee}) {
    gf2::Gf2Vector rhs = gf2::Gf2Vector::zeros(chain_m.length);
    if (meridian_bit(h)) rhs = gf2::add(rhs, chain_m);
    if (longitude_bit(h)) rhs = gf2::add(rhs, chain_l);
    if (faces.solve(rhs).has_value()) {
      ++found;
      result = h;
    }
  }
  if (found != 1) {
    throw KernelDimensionError(
        std::string(region_name) + " region admits " + std::to_string(found) +
        " bounding marking classes, expected exactly 1 (box_margin too "
        "small, or the marking does not span H1 of the boundary)");
  }
  return result;
}

}  // namespace

int meridian_bit(H1Class h) { return static_cast<int>(h) & 1; }

int longitude_bit(H1Class h) { return (static_cast<int>(h) >> 1) & 1; }

int rank_of(H1Class h) { return static_cast<int>(h); }

const char* name_of(H1Class h) {
  switch (h) {
    case H1Class::e: return "e";
    case H1Class::ee: return "ee";
    case H1Class::eee: return "eee";
  }
  throw InternalError("H1 class out of range");
}

H1Class class_from_bits(int mbit, int lbit) {
  const int value = (mbit ? 1 : 0) | (lbit ? 2 : 0);
  if (value == 0) {
    throw InternalError("the zero class is not a marking class");
  }
  return static_cast<H1Class>(value);
}

MarkedTorusEmbedding MarkedTorusEmbedding::make(cubical::VoxelSolid solid,
                                                cubical::EdgeCycle m_cycle,
                                                cubical::EdgeCycle l_cycle,
                                                int box_margin) {
  if (box_margin < 0) {
    throw InputError("box_margin must be nonnegative, got " +
                     std::to_string(box_margin));
  }
  cubical::SurfaceComplex surface = cubical::boundary_surface(solid);
  if (!cubical::is_torus(surface)) {
    throw NotATorus(
        "boundary surface has Euler characteristic " +
        std::to_string(cubical::euler_characteristic(surface.complex)) +
        " and is " +
        (cubical::is_connected(surface.complex) ? "connected"
                                                : "disconnected") +
        "; expected one torus");
  }
  // Raises CycleNotOnSurface if a marking step leaves the boundary.
  (void)cubical::chain_of(m_cycle, surface.complex);
  (void)cubical::chain_of(l_cycle, surface.complex);
  if (!cubical::independent_in_h1(surface, m_cycle, l_cycle)) {
    throw DependentMarking(
        "marking cycle classes do not span H1 of the boundary torus");
  }
  MarkedTorusEmbedding out;
  out.solid = std::move(solid);
  out.m_cycle = std::move(m_cycle);
  out.l_cycle = std::move(l_cycle);
  out.box_margin = box_margin;
  out.surface = std::move(surface);
  return out;
}

cubical::CubicalComplex compact_region(const MarkedTorusEmbedding& emb) {
  return cubical::build_complex(emb.solid);
}

cubical::CubicalComplex outer_region(const MarkedTorusEmbedding& emb) {
  const auto [lo, hi] = emb.solid.bounding_box();
  const long long m = emb.box_margin;
  const long long nx = (hi.x - lo.x + 1) + 2 * m;
  const long long ny = (hi.y - lo.y + 1) + 2 * m;
  const long long nz = (hi.z - lo.z + 1) + 2 * m;
  constexpr long long kMaxBoxVoxels = 2000000;
  if (nx * ny * nz > kMaxBoxVoxels) {
    throw InputError("outer box would contain " + std::to_string(nx * ny * nz) +
                     " voxels (limit " + std::to_string(kMaxBoxVoxels) +
                     "); reduce box_margin");
  }
  std::vector<cubical::Voxel> voxels;
  voxels.reserve(static_cast<std::size_t>(nx * ny * nz) - emb.solid.size());
  for (std::int32_t x = lo.x - emb.box_margin; x <= hi.x + emb.box_margin; ++x) {
    for (std::int32_t y = lo.y - emb.box_margin; y <= hi.y + emb.box_margin;
         ++y) {
      for (std::int32_t z = lo.z - emb.box_margin; z <= hi.z + emb.box_margin;
           ++z) {
        const cubical::Voxel v{x, y, z};
        if (!emb.solid.contains(v)) voxels.push_back(v);
      }
    }
  }
  if (voxels.empty()) {
    throw KernelDimensionError(
        "outer region is empty: the grown box adds no voxels (box_margin too "
        "small)");
  }
  return cubical::build_complex(cubical::VoxelSolid::from_voxels(voxels));
}

ComponentQ q_invariant(const MarkedTorusEmbedding& emb) {
  const cubical::CubicalComplex compact = compact_region(emb);
  const H1Class c = bounding_class(compact, emb.m_cycle, emb.l_cycle,
                                   "compact");
  const cubical::CubicalComplex outer = outer_region(emb);
  const H1Class n = bounding_class(outer, emb.m_cycle, emb.l_cycle, "outer");
  if (c == n) {
    throw InternalError(
        "compact and outer regions share a bounding class; impossible for a "
        "validated torus component");
  }
  ComponentQ out;
  out.c = c;
  out.n = n;
  out.q = rank_of(c) > rank_of(n) ? 1 : 0;
  return out;
}

SystemEmbedding SystemEmbedding::make(
    std::vector<MarkedTorusEmbedding> components) {
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t j = i + 1; j < components.size(); ++j) {
      for (const cubical::Voxel& a : components[i].solid.voxels) {
        for (const cubical::Voxel& b : components[j].solid.voxels) {
          const std::int32_t dx = std::abs(a.x - b.x);
          const std::int32_t dy = std::abs(a.y - b.y);
          const std::int32_t dz = std::abs(a.z - b.z);
          if (std::max({dx, dy, dz}) < 2) {
            throw ComponentsNotSeparated(
                "components " + std::to_string(i) + " and " +
                std::to_string(j) +
                " have voxels closer than 2 (closed cubes touch or overlap)");
          }
        }
      }
    }
  }
  SystemEmbedding out;
  out.components = std::move(components);
  return out;
}

SystemQ q_system(const SystemEmbedding& system) {
  SystemQ out;
  out.components.reserve(system.components.size());
  for (const MarkedTorusEmbedding& emb : system.components) {
    out.components.push_back(q_invariant(emb));
    out.total ^= out.components.back().q;
  }
  return out;
}

int predict_q(const SystemEmbedding& before, const SystemEmbedding& after) {
  if (before.components.size() != after.components.size()) {
    throw ComponentCountMismatch(
        "systems have " + std::to_string(before.components.size()) + " and " +
        std::to_string(after.components.size()) +
        " components; they must match one-to-one");
  }
  return q_system(before).total ^ q_system(after).total;
}

cubical::EdgeCycle realize_class(const MarkedTorusEmbedding& emb, int mbit,
                                 int lbit) {
  if (mbit && !lbit) return emb.m_cycle;
  if (!mbit && lbit) return emb.l_cycle;
  if (mbit && lbit) {
    return cubical::splice_cycles(emb.surface, emb.m_cycle, emb.l_cycle);
  }
  throw InputError("cannot realize the zero class as a marking cycle");
}

MarkedTorusEmbedding transport_marking(const MarkedTorusEmbedding& emb,
                                       const mcg::MappingClass& f) {
  const mcg::ParityClass p = mcg::tau(f);
  // Columns of the parity matrix give the images of [m] and [l].
  cubical::EdgeCycle new_m = realize_class(emb, p.a ? 1 : 0, p.c ? 1 : 0);
  cubical::EdgeCycle new_l = realize_class(emb, p.b ? 1 : 0, p.d ? 1 : 0);
  return MarkedTorusEmbedding::make(emb.solid, std::move(new_m),
                                    std::move(new_l), emb.box_margin);
}

MarkedTorusEmbedding adjust_framing(const MarkedTorusEmbedding& emb) {
  cubical::EdgeCycle new_l =
      cubical::splice_cycles(emb.surface, emb.l_cycle, emb.m_cycle);
  return MarkedTorusEmbedding::make(emb.solid, emb.m_cycle, std::move(new_l),
                                    emb.box_margin);
}

}  // namespace tori::embedding
