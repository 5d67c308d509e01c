#pragma once

// Geometry of the three regular tilings used by boardless games.
//
// Every cell of the infinite tiling has a board-independent CanonCoord.
// Boards of a given dimension occupy a fixed, origin-anchored region of the
// lattice, so a perimeter expansion never moves an existing cell in
// coordinate space: the expanded board is a strict superset of the old one.
//
// Lattice conventions:
//   Square   (x, y)  column / row, y grows upward.
//   Hexagon  (q, r)  axial coordinates of a point-topped tiling; r is the
//                    horizontal band (grows upward), q grows to the right.
//   Triangle (x, y)  y is the horizontal band, x the half-unit column.
//                    A cell points up iff x + y is even.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/static_vector.hpp>

namespace boardless {

enum class Shape : std::uint8_t { Square, Hexagon, Triangle };

inline constexpr Shape kAllShapes[] = {Shape::Square, Shape::Hexagon, Shape::Triangle};

std::string_view to_string(Shape shape);
Shape parse_shape(std::string_view text);

struct CanonCoord {
  int x = 0;
  int y = 0;

  friend bool operator==(const CanonCoord&, const CanonCoord&) = default;
};

enum class Orient : std::uint8_t { Up, Down };

/// Orientation of a triangular cell; fixed by coordinate parity.
constexpr Orient triangle_orient(CanonCoord c) {
  return ((c.x + c.y) % 2 == 0) ? Orient::Up : Orient::Down;
}

/// A point of the scaled-integer lattice that carries cell corners. Shared
/// corners of neighbouring cells compare equal exactly.
struct LatticePoint {
  int x = 0;
  int y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

using NeighbourList = boost::container::static_vector<CanonCoord, 12>;
using CornerList = boost::container::static_vector<LatticePoint, 6>;

struct BoardSpec {
  Shape shape = Shape::Square;
  int dim = 1;

  friend bool operator==(const BoardSpec&, const BoardSpec&) = default;
};

/// Visual row of a cell in lattice terms (triangles use half-bands, so the
/// up- and down-pointing cells of one band sit on different rows).
constexpr int lattice_row(Shape shape, CanonCoord c) {
  if (shape == Shape::Triangle) return 2 * c.y + (triangle_orient(c) == Orient::Down ? 1 : 0);
  return c.y;
}

/// Packs a coordinate into the canonical traversal key: rows bottom-up, then
/// left to right. Sorting cells by this key yields the cell-id order.
constexpr std::int64_t canonical_key(Shape shape, CanonCoord c) {
  return (static_cast<std::int64_t>(lattice_row(shape, c)) << 32) + (static_cast<std::int64_t>(c.x) + (std::int64_t{1} << 31));
}

std::size_t cell_count(BoardSpec spec);

struct PerimeterGrowth {
  std::size_t added = 0;
  int new_dim = 0;
};

PerimeterGrowth perimeter_added_cells(Shape shape, int prev_dim);

/// Id of a previous-board cell after one perimeter expansion.
/// Throws std::invalid_argument when `row` is not the row of `prev_cell_id`.
std::size_t perimeter_map_index(Shape shape, int prev_dim, int row, std::size_t prev_cell_id);

/// Row (from 0, bottom to top) of a cell id on a regular board.
int board_row_of(BoardSpec spec, std::size_t cell_id);

/// First cell id of every row of a regular board, plus the cell count.
std::vector<std::size_t> row_offsets(BoardSpec spec);

NeighbourList vertex_neighbors(Shape shape, CanonCoord c);
NeighbourList edge_neighbors(Shape shape, CanonCoord c);

inline constexpr int max_vertex_neighbors(Shape shape) {
  switch (shape) {
    case Shape::Square: return 8;
    case Shape::Hexagon: return 6;
    case Shape::Triangle: return 12;
  }
  return 0;
}

inline constexpr int max_edge_neighbors(Shape shape) {
  switch (shape) {
    case Shape::Square: return 4;
    case Shape::Hexagon: return 6;
    case Shape::Triangle: return 3;
  }
  return 0;
}

/// Corner points of a cell in counter-clockwise order.
CornerList cell_corners(Shape shape, CanonCoord c);

/// Ordering key for lattice points: bottom-up, then left to right.
constexpr std::int64_t point_key(LatticePoint p) {
  return (static_cast<std::int64_t>(p.y) << 32) + (static_cast<std::int64_t>(p.x) + (std::int64_t{1} << 31));
}

/// True iff the cell lies on the board of the given spec.
bool board_contains(BoardSpec spec, CanonCoord c);

/// Cells of a regular board in id order.
std::vector<CanonCoord> enumerate_board(BoardSpec spec);

/// Lattice offset that carries old-board coordinates onto the board produced
/// by one perimeter expansion. Boards are origin-anchored, so this is zero for
/// every shape; it is exposed so callers can state the invariant explicitly.
CanonCoord perimeter_expansion_offset(Shape shape, int prev_dim);

/// Cells of a straight line of n initial tiles centred on the lattice origin,
/// along the middle row.
std::vector<CanonCoord> initial_tile_coords(Shape shape, int n);

/// Unit directions along which straight lines are read (one per axis).
std::span<const CanonCoord> line_axes(Shape shape);

}  // namespace boardless
