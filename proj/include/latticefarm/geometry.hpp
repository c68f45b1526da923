#pragma once

#include <array>
#include <cstdint>

namespace latticefarm {

// (x, y, z, t); component d in [0, dims[d]).
using Coord4 = std::array<int, 4>;

inline long volume(const Coord4& dims) {
  return 1L * dims[0] * dims[1] * dims[2] * dims[3];
}

// Lexicographic site index, x fastest: x + Lx*(y + Ly*(z + Lz*t)).
// Throws OutOfBounds for coordinates outside dims.
long site_index(const Coord4& coord, const Coord4& dims);
Coord4 coord_of_index(long index, const Coord4& dims);

// Periodic shift by sign (+1/-1) in dimension mu.
Coord4 neighbor(const Coord4& coord, int mu, int sign, const Coord4& dims);

// Checkerboard class id: (x%m) + m*((y%m) + m*((z%m) + m*(t%m))), m in {2,4}.
// Links in one class have disjoint staple footprints (m=4 covers 1x2 loops).
int parity_class(const Coord4& coord, int m);

// Static decomposition of a periodic 4D lattice over a rank grid. Each rank
// owns the slab [grid_coord[d]*local[d], (grid_coord[d]+1)*local[d]) per
// dimension; halo slabs of depth 2 surround it on all sides.
struct Geometry {
  Coord4 global_dims{};
  Coord4 rank_grid{};
  Coord4 local_dims{};
  int halo_depth = 2;

  int comm_size() const {
    return rank_grid[0] * rank_grid[1] * rank_grid[2] * rank_grid[3];
  }
  long global_volume() const { return volume(global_dims); }
  long local_volume() const { return volume(local_dims); }

  // Rank ids are x-fastest lexicographic over the grid, like site indices.
  Coord4 rank_coord(int rank) const;
  int rank_of_coord(const Coord4& grid_coord) const;

  // Global coordinate of a rank's local (0,0,0,0).
  Coord4 local_origin(int rank) const;

  // Rank owning a global coordinate.
  int owner_rank(const Coord4& coord) const;

  // Grid neighbor of `rank` in dimension d (periodic wrap).
  int neighbor_rank(int rank, int d, int sign) const;
};

// Validates divisibility, grid/size consistency and that decomposed
// dimensions keep at least halo_depth sites per rank.
Geometry build_geometry(const Coord4& global_dims, const Coord4& rank_grid,
                        int comm_size);

}  // namespace latticefarm
