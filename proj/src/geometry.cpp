#include "boardless/geometry.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

namespace boardless {

namespace {

// Square boards span [lo, lo + dim - 1] on both axes.
int square_low(int dim) { return -((dim - 1) / 2); }

// Bottom-left (up-pointing) cell of a triangular board. The anchor moves by
// (-3, -1) per +3 dimension, which keeps the old board one band inside the
// new one on every side.
CanonCoord triangle_anchor(int dim) {
  const int y0 = -((dim - 1) / 3);
  const int phase = (dim % 3 == 0) ? -2 : 0;
  return {3 * y0 + phase, y0};
}

int row_length(BoardSpec spec, int row) {
  const int d = spec.dim;
  switch (spec.shape) {
    case Shape::Square: return d;
    case Shape::Hexagon: return d + std::min(row, 2 * d - 2 - row);
    case Shape::Triangle: {
      const int band = row / 2;
      return (row % 2 == 0) ? d - band : d - band - 1;
    }
  }
  return 0;
}

int row_count(BoardSpec spec) {
  switch (spec.shape) {
    case Shape::Square: return spec.dim;
    case Shape::Hexagon:
    case Shape::Triangle: return 2 * spec.dim - 1;
  }
  return 0;
}

void require_dim(int dim) {
  if (dim < 1) throw std::invalid_argument("board dimension must be >= 1");
}

}  // namespace

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::Square: return "square";
    case Shape::Hexagon: return "hexagon";
    case Shape::Triangle: return "triangle";
  }
  return "?";
}

Shape parse_shape(std::string_view text) {
  if (text == "square") return Shape::Square;
  if (text == "hexagon" || text == "hex" || text == "hexagonal") return Shape::Hexagon;
  if (text == "triangle" || text == "tri" || text == "triangular") return Shape::Triangle;
  throw std::invalid_argument("unknown shape: " + std::string(text));
}

std::size_t cell_count(BoardSpec spec) {
  require_dim(spec.dim);
  const auto d = static_cast<std::size_t>(spec.dim);
  switch (spec.shape) {
    case Shape::Square:
    case Shape::Triangle: return d * d;
    case Shape::Hexagon: return 3 * d * (d - 1) + 1;
  }
  return 0;
}

PerimeterGrowth perimeter_added_cells(Shape shape, int prev_dim) {
  require_dim(prev_dim);
  const auto d = static_cast<std::size_t>(prev_dim);
  switch (shape) {
    case Shape::Square: return {(4 * (d + 2)) - 4, prev_dim + 2};
    case Shape::Hexagon: return {(6 * (d + 1)) - 6, prev_dim + 1};
    case Shape::Triangle: return {(3 * (((d + 3) * 2) - 1)) - 6, prev_dim + 3};
  }
  return {};
}

int board_row_of(BoardSpec spec, std::size_t cell_id) {
  if (cell_id >= cell_count(spec)) throw std::out_of_range("cell id outside board");
  std::size_t start = 0;
  const int rows = row_count(spec);
  for (int row = 0; row < rows; ++row) {
    const auto len = static_cast<std::size_t>(row_length(spec, row));
    if (cell_id < start + len) return row;
    start += len;
  }
  throw std::logic_error("row lookup ran past the last row");
}

std::vector<std::size_t> row_offsets(BoardSpec spec) {
  require_dim(spec.dim);
  std::vector<std::size_t> out{0};
  const int rows = row_count(spec);
  for (int row = 0; row < rows; ++row) out.push_back(out.back() + static_cast<std::size_t>(row_length(spec, row)));
  return out;
}

std::size_t perimeter_map_index(Shape shape, int prev_dim, int row, std::size_t prev_cell_id) {
  const BoardSpec prev{shape, prev_dim};
  if (prev_cell_id >= cell_count(prev)) throw std::invalid_argument("cell id outside previous board");
  if (row != board_row_of(prev, prev_cell_id)) {
    throw std::invalid_argument("row " + std::to_string(row) + " does not hold cell " + std::to_string(prev_cell_id));
  }
  const auto d = static_cast<std::size_t>(prev_dim);
  const auto r = static_cast<std::size_t>(row);
  switch (shape) {
    case Shape::Square: return (d + 1) + (2 * (r + 1)) + prev_cell_id;
    case Shape::Hexagon: return d + (2 * (r + 1)) + prev_cell_id;
    case Shape::Triangle: return ((d + 3) * 2) - 2 + (2 * (r + 1)) + prev_cell_id;
  }
  return 0;
}

CornerList cell_corners(Shape shape, CanonCoord c) {
  switch (shape) {
    case Shape::Square:
      return {{c.x, c.y}, {c.x + 1, c.y}, {c.x + 1, c.y + 1}, {c.x, c.y + 1}};
    case Shape::Hexagon: {
      // Centre at (2q + r, 3r); width 2 units, height 4 units.
      const int cx = 2 * c.x + c.y;
      const int cy = 3 * c.y;
      return {{cx, cy - 2}, {cx + 1, cy - 1}, {cx + 1, cy + 1}, {cx, cy + 2}, {cx - 1, cy + 1}, {cx - 1, cy - 1}};
    }
    case Shape::Triangle:
      if (triangle_orient(c) == Orient::Up) return {{c.x - 1, c.y}, {c.x + 1, c.y}, {c.x, c.y + 1}};
      return {{c.x, c.y}, {c.x + 1, c.y + 1}, {c.x - 1, c.y + 1}};
  }
  return {};
}

NeighbourList vertex_neighbors(Shape shape, CanonCoord c) {
  switch (shape) {
    case Shape::Square: {
      NeighbourList out;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx != 0 || dy != 0) out.push_back({c.x + dx, c.y + dy});
        }
      }
      return out;
    }
    case Shape::Hexagon: return edge_neighbors(shape, c);
    case Shape::Triangle: {
      // The six cells around lattice point (X, Y) are {X-1, X, X+1} x {Y-1, Y}.
      NeighbourList out;
      for (const LatticePoint p : cell_corners(shape, c)) {
        for (int dy = -1; dy <= 0; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const CanonCoord n{p.x + dx, p.y + dy};
            if (n == c) continue;
            if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
          }
        }
      }
      return out;
    }
  }
  return {};
}

NeighbourList edge_neighbors(Shape shape, CanonCoord c) {
  switch (shape) {
    case Shape::Square:
      return {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
    case Shape::Hexagon:
      return {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}, {c.x + 1, c.y - 1}, {c.x - 1, c.y + 1}};
    case Shape::Triangle:
      if (triangle_orient(c) == Orient::Up) return {{c.x - 1, c.y}, {c.x + 1, c.y}, {c.x, c.y - 1}};
      return {{c.x - 1, c.y}, {c.x + 1, c.y}, {c.x, c.y + 1}};
  }
  return {};
}

bool board_contains(BoardSpec spec, CanonCoord c) {
  const int d = spec.dim;
  switch (spec.shape) {
    case Shape::Square: {
      const int lo = square_low(d);
      return c.x >= lo && c.x < lo + d && c.y >= lo && c.y < lo + d;
    }
    case Shape::Hexagon: {
      const int n = d - 1;
      return std::abs(c.x) <= n && std::abs(c.y) <= n && std::abs(c.x + c.y) <= n;
    }
    case Shape::Triangle: {
      const CanonCoord a = triangle_anchor(d);
      const int band = c.y - a.y;
      if (band < 0 || band >= d) return false;
      const int first = a.x + band;
      const int last = first + 2 * (d - 1 - band);
      return c.x >= first && c.x <= last;
    }
  }
  return false;
}

std::vector<CanonCoord> enumerate_board(BoardSpec spec) {
  std::vector<CanonCoord> out;
  out.reserve(cell_count(spec));
  const int d = spec.dim;
  switch (spec.shape) {
    case Shape::Square: {
      const int lo = square_low(d);
      for (int y = lo; y < lo + d; ++y) {
        for (int x = lo; x < lo + d; ++x) out.push_back({x, y});
      }
      break;
    }
    case Shape::Hexagon: {
      const int n = d - 1;
      for (int r = -n; r <= n; ++r) {
        for (int q = std::max(-n, -n - r); q <= std::min(n, n - r); ++q) out.push_back({q, r});
      }
      break;
    }
    case Shape::Triangle: {
      const CanonCoord a = triangle_anchor(d);
      for (int band = 0; band < d; ++band) {
        const int y = a.y + band;
        const int first = a.x + band;
        for (int k = 0; k < d - band; ++k) out.push_back({first + 2 * k, y});
        for (int k = 0; k < d - band - 1; ++k) out.push_back({first + 1 + 2 * k, y});
      }
      break;
    }
  }
  return out;
}

CanonCoord perimeter_expansion_offset(Shape, int prev_dim) {
  require_dim(prev_dim);
  return {0, 0};
}

std::vector<CanonCoord> initial_tile_coords(Shape, int n) {
  std::vector<CanonCoord> out;
  if (n <= 0) return out;
  // One lattice column per tile; on triangles the strip alternates up/down.
  const int first = -((n - 1) / 2);
  for (int i = 0; i < n; ++i) out.push_back({first + i, 0});
  return out;
}

std::span<const CanonCoord> line_axes(Shape shape) {
  static constexpr std::array<CanonCoord, 4> square{{{1, 0}, {0, 1}, {1, 1}, {1, -1}}};
  static constexpr std::array<CanonCoord, 3> hex{{{1, 0}, {0, 1}, {1, -1}}};
  switch (shape) {
    case Shape::Square: return square;
    case Shape::Hexagon: return hex;
    case Shape::Triangle: return {};
  }
  return {};
}

}  // namespace boardless
