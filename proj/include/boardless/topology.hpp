#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boardless/geometry.hpp"

namespace boardless {

using CellId = std::uint32_t;

/// Compressed adjacency lists: row i is items[offsets[i], offsets[i+1]).
struct Csr {
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint32_t> items;

  std::size_t rows() const { return offsets.size() - 1; }
  std::span<const std::uint32_t> operator[](std::size_t row) const {
    return {items.data() + offsets[row], items.data() + offsets[row + 1]};
  }

  friend bool operator==(const Csr&, const Csr&) = default;
};

struct Edge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable cell/vertex/edge graph of one board, with adjacency and
/// perimeter classification precomputed at construction.
///
/// Cell ids follow canonical traversal order (rows bottom-up, left to right);
/// vertex and edge ids follow the same order applied to their lattice points
/// and midpoints.
class Topology {
 public:
  Shape shape() const { return shape_; }
  /// Side length when the board is a regular board built from a BoardSpec.
  std::optional<int> dim() const { return dim_; }

  std::size_t cell_count() const { return cells_.size(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  CanonCoord coord(CellId id) const { return cells_[id]; }
  const std::vector<CanonCoord>& cells() const { return cells_; }
  /// Canonical keys of the cells, ascending.
  const std::vector<std::int64_t>& keys() const { return keys_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<CellId> find(CanonCoord c) const;
  bool contains(CanonCoord c) const { return find(c).has_value(); }

  std::span<const std::uint32_t> cell_vertices(CellId id) const { return cell_vertices_[id]; }
  std::span<const std::uint32_t> cell_edges(CellId id) const { return cell_edges_[id]; }
  std::span<const std::uint32_t> edge_adjacent(CellId id) const { return edge_adjacency_[id]; }
  std::span<const std::uint32_t> vertex_adjacent(CellId id) const { return vertex_adjacency_[id]; }

  /// Throws std::out_of_range for an invalid id.
  bool is_perimeter(CellId id) const;
  std::vector<CellId> perimeter() const;

  friend bool operator==(const Topology&, const Topology&) = default;

  friend Topology build_from_sorted(Shape shape, std::vector<CanonCoord> cells, std::optional<int> dim);
  friend Topology extend_topology(const Topology& old, std::vector<CanonCoord> merged,
                                  const std::vector<CellId>& old_to_new, const std::vector<CellId>& added);

 private:
  Shape shape_ = Shape::Square;
  std::optional<int> dim_;
  std::vector<CanonCoord> cells_;
  std::vector<std::int64_t> keys_;
  std::vector<LatticePoint> vertices_;
  std::vector<std::int64_t> vertex_keys_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> edge_keys_;
  Csr cell_vertices_;
  Csr cell_edges_;
  Csr edge_adjacency_;
  Csr vertex_adjacency_;
  std::vector<std::uint8_t> perimeter_;
};

Topology build_regular(BoardSpec spec);

/// Builds a topology from cells already in canonical order without duplicates.
Topology build_from_sorted(Shape shape, std::vector<CanonCoord> cells, std::optional<int> dim);

/// Grows `old` to the cell list `merged` (canonical order), where old cell i
/// now has id old_to_new[i] and `added` lists the new ids. Only the graph
/// around the added cells is recomputed; the result equals a full rebuild.
Topology extend_topology(const Topology& old, std::vector<CanonCoord> merged, const std::vector<CellId>& old_to_new,
                         const std::vector<CellId>& added);

/// Builds a topology over an arbitrary non-empty cell set (duplicates are
/// ignored). Cell ids are assigned in canonical traversal order.
Topology build_from_cells(Shape shape, std::vector<CanonCoord> cells);

bool is_perimeter(const Topology& t, CellId id);

}  // namespace boardless
