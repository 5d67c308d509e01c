#include "boardless/topology.hpp"

#include <algorithm>
#include <tuple>
#include <stdexcept>

namespace boardless {

namespace {

struct Incidence {
  std::int64_t key;
  std::uint32_t cell;
  std::uint32_t slot;
};

bool incidence_less(const Incidence& l, const Incidence& r) {
  if (l.key != r.key) return l.key < r.key;
  if (l.cell != r.cell) return l.cell < r.cell;
  return l.slot < r.slot;
}

// Groups a sorted incidence list by key; returns run starts (size = runs + 1).
std::vector<std::uint32_t> run_starts(const std::vector<Incidence>& sorted) {
  std::vector<std::uint32_t> starts;
  for (std::uint32_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i].key != sorted[i - 1].key) starts.push_back(i);
  }
  starts.push_back(static_cast<std::uint32_t>(sorted.size()));
  return starts;
}

// Edge midpoints are unique per edge; keep them doubled to stay integral.
std::int64_t edge_key(LatticePoint a, LatticePoint b) { return point_key({a.x + b.x, a.y + b.y}); }

void sort_cells(Shape shape, std::vector<CanonCoord>& cells) {
  std::sort(cells.begin(), cells.end(), [shape](CanonCoord a, CanonCoord b) {
    return canonical_key(shape, a) < canonical_key(shape, b);
  });
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

}  // namespace

Topology build_from_sorted(Shape shape, std::vector<CanonCoord> cells, std::optional<int> dim) {
  if (cells.empty()) throw std::invalid_argument("a topology needs at least one cell");
  Topology t;
  t.shape_ = shape;
  t.dim_ = dim;
  t.cells_ = std::move(cells);
  const auto n = static_cast<std::uint32_t>(t.cells_.size());
  const auto corners = static_cast<std::uint32_t>(cell_corners(shape, {0, 0}).size());

  t.keys_.reserve(n);
  for (const CanonCoord c : t.cells_) t.keys_.push_back(canonical_key(shape, c));

  // Vertices: every cell corner, deduplicated by exact lattice point.
  std::vector<Incidence> vinc;
  std::vector<Incidence> einc;
  vinc.reserve(std::size_t{n} * corners);
  einc.reserve(std::size_t{n} * corners);
  std::vector<LatticePoint> points(std::size_t{n} * corners);
  for (std::uint32_t cell = 0; cell < n; ++cell) {
    const auto pts = cell_corners(shape, t.cells_[cell]);
    for (std::uint32_t s = 0; s < corners; ++s) {
      points[std::size_t{cell} * corners + s] = pts[s];
      vinc.push_back({point_key(pts[s]), cell, s});
      einc.push_back({edge_key(pts[s], pts[(s + 1) % corners]), cell, s});
    }
  }
  std::sort(vinc.begin(), vinc.end(), incidence_less);
  std::sort(einc.begin(), einc.end(), incidence_less);
  const auto vstarts = run_starts(vinc);
  const auto estarts = run_starts(einc);

  t.cell_vertices_.items.assign(std::size_t{n} * corners, 0);
  t.vertices_.reserve(vstarts.size() - 1);
  t.vertex_keys_.reserve(vstarts.size() - 1);
  for (std::uint32_t v = 0; v + 1 < vstarts.size(); ++v) {
    const Incidence& first = vinc[vstarts[v]];
    t.vertices_.push_back(points[std::size_t{first.cell} * corners + first.slot]);
    t.vertex_keys_.push_back(first.key);
    for (std::uint32_t i = vstarts[v]; i < vstarts[v + 1]; ++i) {
      t.cell_vertices_.items[std::size_t{vinc[i].cell} * corners + vinc[i].slot] = v;
    }
  }

  t.cell_edges_.items.assign(std::size_t{n} * corners, 0);
  t.edges_.reserve(estarts.size() - 1);
  t.edge_keys_.reserve(estarts.size() - 1);
  for (std::uint32_t e = 0; e + 1 < estarts.size(); ++e) {
    const Incidence& first = einc[estarts[e]];
    const std::size_t base = std::size_t{first.cell} * corners;
    const std::uint32_t va = t.cell_vertices_.items[base + first.slot];
    const std::uint32_t vb = t.cell_vertices_.items[base + (first.slot + 1) % corners];
    t.edges_.push_back({std::min(va, vb), std::max(va, vb)});
    t.edge_keys_.push_back(first.key);
    for (std::uint32_t i = estarts[e]; i < estarts[e + 1]; ++i) {
      t.cell_edges_.items[std::size_t{einc[i].cell} * corners + einc[i].slot] = e;
    }
  }

  t.cell_vertices_.offsets.resize(n + 1);
  t.cell_edges_.offsets.resize(n + 1);
  for (std::uint32_t cell = 0; cell <= n; ++cell) {
    t.cell_vertices_.offsets[cell] = cell * corners;
    t.cell_edges_.offsets[cell] = cell * corners;
  }

  // Adjacency derived from shared graph elements, not from lattice offsets.
  std::vector<std::uint32_t> scratch;
  t.edge_adjacency_.offsets.reserve(n + 1);
  t.vertex_adjacency_.offsets.reserve(n + 1);
  t.perimeter_.assign(n, 0);
  const auto full = static_cast<std::size_t>(max_vertex_neighbors(shape));
  for (std::uint32_t cell = 0; cell < n; ++cell) {
    scratch.clear();
    for (const std::uint32_t e : t.cell_edges_[cell]) {
      for (std::uint32_t i = estarts[e]; i < estarts[e + 1]; ++i) {
        if (einc[i].cell != cell) scratch.push_back(einc[i].cell);
      }
    }
    std::sort(scratch.begin(), scratch.end());
    t.edge_adjacency_.items.insert(t.edge_adjacency_.items.end(), scratch.begin(), scratch.end());
    t.edge_adjacency_.offsets.push_back(static_cast<std::uint32_t>(t.edge_adjacency_.items.size()));

    scratch.clear();
    for (const std::uint32_t v : t.cell_vertices_[cell]) {
      for (std::uint32_t i = vstarts[v]; i < vstarts[v + 1]; ++i) {
        if (vinc[i].cell != cell) scratch.push_back(vinc[i].cell);
      }
    }
    std::sort(scratch.begin(), scratch.end());
    scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
    t.vertex_adjacency_.items.insert(t.vertex_adjacency_.items.end(), scratch.begin(), scratch.end());
    t.vertex_adjacency_.offsets.push_back(static_cast<std::uint32_t>(t.vertex_adjacency_.items.size()));
    t.perimeter_[cell] = scratch.size() < full ? 1 : 0;
  }
  return t;
}

std::optional<CellId> Topology::find(CanonCoord c) const {
  const std::int64_t key = canonical_key(shape_, c);
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<CellId>(it - keys_.begin());
}

bool Topology::is_perimeter(CellId id) const {
  if (id >= perimeter_.size()) throw std::out_of_range("cell id " + std::to_string(id) + " not on board");
  return perimeter_[id] != 0;
}

std::vector<CellId> Topology::perimeter() const {
  std::vector<CellId> out;
  for (CellId id = 0; id < perimeter_.size(); ++id) {
    if (perimeter_[id] != 0) out.push_back(id);
  }
  return out;
}

Topology build_regular(BoardSpec spec) {
  return build_from_sorted(spec.shape, enumerate_board(spec), spec.dim);
}

Topology build_from_cells(Shape shape, std::vector<CanonCoord> cells) {
  sort_cells(shape, cells);
  return build_from_sorted(shape, std::move(cells), std::nullopt);
}

bool is_perimeter(const Topology& t, CellId id) { return t.is_perimeter(id); }

namespace {

// Merges two sorted key lists; returns the new position of each old entry and
// fills `merged` with the union.
void merge_keys(const std::vector<std::int64_t>& old, const std::vector<std::int64_t>& fresh,
                std::vector<std::int64_t>& merged, std::vector<std::uint32_t>& map) {
  map.resize(old.size());
  merged.resize(old.size() + fresh.size());
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t out = 0;
  while (i < old.size()) {
    while (j < fresh.size() && fresh[j] < old[i]) merged[out++] = fresh[j++];
    map[i] = static_cast<std::uint32_t>(out);
    merged[out++] = old[i++];
  }
  while (j < fresh.size()) merged[out++] = fresh[j++];
}

// Scratch space reused across extensions; growth runs call this once per move.
struct ExtendScratch {
  std::vector<std::pair<std::int64_t, LatticePoint>> fresh_points;
  std::vector<std::tuple<std::int64_t, LatticePoint, LatticePoint>> fresh_sides;
  std::vector<CornerList> added_corners;
  std::vector<std::int64_t> fresh_keys;
  std::vector<std::uint32_t> vmap;
  std::vector<std::uint32_t> emap;
  std::vector<std::uint32_t> old_of;
  std::vector<CellId> fresh_v;
  std::vector<CellId> fresh_e;
  std::vector<std::uint32_t> fresh_vo;
  std::vector<std::uint32_t> fresh_eo;
  std::vector<std::pair<CellId, CellId>> gain_v;
  std::vector<std::pair<CellId, CellId>> gain_e;
};

std::uint32_t index_of(const std::vector<std::int64_t>& keys, std::int64_t key) {
  return static_cast<std::uint32_t>(std::lower_bound(keys.begin(), keys.end(), key) - keys.begin());
}

}  // namespace

Topology extend_topology(const Topology& old, std::vector<CanonCoord> merged, const std::vector<CellId>& old_to_new,
                         const std::vector<CellId>& added) {
  if (added.empty()) return old;
  thread_local ExtendScratch scratch;
  ExtendScratch& z = scratch;
  const Shape shape = old.shape_;
  const auto corners = static_cast<std::uint32_t>(old.cell_vertices_[0].size());
  Topology t;
  t.shape_ = shape;
  t.cells_ = std::move(merged);
  const auto n = static_cast<std::uint32_t>(t.cells_.size());
  t.keys_.resize(n);
  for (std::size_t i = 0; i < old_to_new.size(); ++i) t.keys_[old_to_new[i]] = old.keys_[i];
  for (const CellId id : added) t.keys_[id] = canonical_key(shape, t.cells_[id]);

  // Corners and sides of the added cells that the old board lacks.
  z.fresh_points.clear();
  z.fresh_sides.clear();
  z.added_corners.clear();
  const auto& ovk = old.vertex_keys_;
  const auto& oek = old.edge_keys_;
  for (const CellId id : added) {
    const CornerList pts = cell_corners(shape, t.cells_[id]);
    for (std::uint32_t s = 0; s < corners; ++s) {
      const std::int64_t vk = point_key(pts[s]);
      if (!std::binary_search(ovk.begin(), ovk.end(), vk)) z.fresh_points.push_back({vk, pts[s]});
      const LatticePoint b = pts[(s + 1) % corners];
      const std::int64_t ek = edge_key(pts[s], b);
      if (!std::binary_search(oek.begin(), oek.end(), ek)) z.fresh_sides.push_back({ek, pts[s], b});
    }
    z.added_corners.push_back(pts);
  }
  auto by_key = [](const auto& l, const auto& r) { return std::get<0>(l) < std::get<0>(r); };
  auto same_key = [](const auto& l, const auto& r) { return std::get<0>(l) == std::get<0>(r); };
  std::sort(z.fresh_points.begin(), z.fresh_points.end(), by_key);
  z.fresh_points.erase(std::unique(z.fresh_points.begin(), z.fresh_points.end(), same_key), z.fresh_points.end());
  std::sort(z.fresh_sides.begin(), z.fresh_sides.end(), by_key);
  z.fresh_sides.erase(std::unique(z.fresh_sides.begin(), z.fresh_sides.end(), same_key), z.fresh_sides.end());

  z.fresh_keys.clear();
  for (const auto& p : z.fresh_points) z.fresh_keys.push_back(p.first);
  merge_keys(ovk, z.fresh_keys, t.vertex_keys_, z.vmap);
  t.vertices_.resize(t.vertex_keys_.size());
  for (std::size_t i = 0; i < old.vertices_.size(); ++i) t.vertices_[z.vmap[i]] = old.vertices_[i];
  for (const auto& p : z.fresh_points) t.vertices_[index_of(t.vertex_keys_, p.first)] = p.second;

  z.fresh_keys.clear();
  for (const auto& s : z.fresh_sides) z.fresh_keys.push_back(std::get<0>(s));
  merge_keys(oek, z.fresh_keys, t.edge_keys_, z.emap);
  t.edges_.resize(t.edge_keys_.size());
  for (std::size_t i = 0; i < old.edges_.size(); ++i) {
    t.edges_[z.emap[i]] = {z.vmap[old.edges_[i].a], z.vmap[old.edges_[i].b]};
  }
  for (const auto& [key, a, b] : z.fresh_sides) {
    const std::uint32_t va = index_of(t.vertex_keys_, point_key(a));
    const std::uint32_t vb = index_of(t.vertex_keys_, point_key(b));
    t.edges_[index_of(t.edge_keys_, key)] = {std::min(va, vb), std::max(va, vb)};
  }

  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  z.old_of.assign(n, kNone);
  for (std::uint32_t i = 0; i < old_to_new.size(); ++i) z.old_of[old_to_new[i]] = i;
  const auto& old_of = z.old_of;

  t.cell_vertices_.items.resize(std::size_t{n} * corners);
  t.cell_edges_.items.resize(std::size_t{n} * corners);
  t.cell_vertices_.offsets.resize(n + 1);
  t.cell_edges_.offsets.resize(n + 1);
  for (std::uint32_t cell = 0; cell <= n; ++cell) {
    t.cell_vertices_.offsets[cell] = t.cell_edges_.offsets[cell] = cell * corners;
  }
  std::size_t next_added = 0;
  for (std::uint32_t cell = 0; cell < n; ++cell) {
    std::uint32_t* vs = &t.cell_vertices_.items[std::size_t{cell} * corners];
    std::uint32_t* es = &t.cell_edges_.items[std::size_t{cell} * corners];
    if (old_of[cell] != kNone) {
      const std::uint32_t* ovs = &old.cell_vertices_.items[std::size_t{old_of[cell]} * corners];
      const std::uint32_t* oes = &old.cell_edges_.items[std::size_t{old_of[cell]} * corners];
      for (std::uint32_t s = 0; s < corners; ++s) {
        vs[s] = z.vmap[ovs[s]];
        es[s] = z.emap[oes[s]];
      }
    } else {
      const CornerList& pts = z.added_corners[next_added++];
      for (std::uint32_t s = 0; s < corners; ++s) {
        vs[s] = index_of(t.vertex_keys_, point_key(pts[s]));
        es[s] = index_of(t.edge_keys_, edge_key(pts[s], pts[(s + 1) % corners]));
      }
    }
  }

  // Added cells look their neighbours up. Old cells only gain added
  // neighbours, which adjacency symmetry hands over from the added rows.
  z.fresh_v.clear();
  z.fresh_e.clear();
  z.fresh_vo.assign(1, 0);
  z.fresh_eo.assign(1, 0);
  z.gain_v.clear();
  z.gain_e.clear();
  auto lookup_row = [&](CellId id, const NeighbourList& ns, std::vector<CellId>& row, std::vector<std::uint32_t>& offs,
                        std::vector<std::pair<CellId, CellId>>& gains) {
    const std::size_t start = row.size();
    for (const CanonCoord c : ns) {
      const auto f = t.find(c);
      if (!f) continue;
      row.push_back(*f);
      if (old_of[*f] != kNone) gains.push_back({*f, id});
    }
    std::sort(row.begin() + static_cast<std::ptrdiff_t>(start), row.end());
    offs.push_back(static_cast<std::uint32_t>(row.size()));
  };
  for (const CellId id : added) {
    lookup_row(id, edge_neighbors(shape, t.cells_[id]), z.fresh_e, z.fresh_eo, z.gain_e);
    lookup_row(id, vertex_neighbors(shape, t.cells_[id]), z.fresh_v, z.fresh_vo, z.gain_v);
  }
  std::sort(z.gain_v.begin(), z.gain_v.end());
  std::sort(z.gain_e.begin(), z.gain_e.end());

  const auto full = static_cast<std::uint32_t>(max_vertex_neighbors(shape));
  t.perimeter_.resize(n);
  // Rows are written through raw pointers into buffers sized up front.
  auto prepare = [&](Csr& out, const Csr& in, std::size_t extra) {
    out.offsets.resize(n + 1);
    out.items.resize(in.items.size() + extra);
  };
  prepare(t.edge_adjacency_, old.edge_adjacency_, z.gain_e.size() + z.fresh_e.size());
  prepare(t.vertex_adjacency_, old.vertex_adjacency_, z.gain_v.size() + z.fresh_v.size());
  struct Cursor {
    std::uint32_t* items;
    std::uint32_t* offsets;
    std::uint32_t at = 0;
    std::size_t gain = 0;
  };
  Cursor ce{t.edge_adjacency_.items.data(), t.edge_adjacency_.offsets.data()};
  Cursor cv{t.vertex_adjacency_.items.data(), t.vertex_adjacency_.offsets.data()};
  // Old row remapped, merged with the added cells this cell gained.
  auto old_row = [&](const Csr& in, std::uint32_t cell, const std::vector<std::pair<CellId, CellId>>& gains,
                     Cursor& c) {
    const std::uint32_t start = c.at;
    const std::uint32_t row = old_of[cell];
    for (std::uint32_t i = in.offsets[row]; i < in.offsets[row + 1]; ++i) c.items[c.at++] = old_to_new[in.items[i]];
    const std::uint32_t mid = c.at;
    for (; c.gain < gains.size() && gains[c.gain].first == cell; ++c.gain) c.items[c.at++] = gains[c.gain].second;
    // A handful of gained ids: insertion keeps the row sorted without a buffer.
    for (std::uint32_t i = mid; i < c.at; ++i) {
      const std::uint32_t v = c.items[i];
      std::uint32_t j = i;
      for (; j > start && c.items[j - 1] > v; --j) c.items[j] = c.items[j - 1];
      c.items[j] = v;
    }
    c.offsets[cell + 1] = c.at;
    return c.at - start;
  };
  auto fresh_row = [&](const std::vector<CellId>& rows, const std::vector<std::uint32_t>& offs, std::size_t k,
                       std::uint32_t cell, Cursor& c) {
    for (std::uint32_t i = offs[k]; i < offs[k + 1]; ++i) c.items[c.at++] = rows[i];
    c.offsets[cell + 1] = c.at;
    return offs[k + 1] - offs[k];
  };
  std::size_t fresh = 0;
  for (std::uint32_t cell = 0; cell < n; ++cell) {
    if (old_of[cell] == kNone) {
      fresh_row(z.fresh_e, z.fresh_eo, fresh, cell, ce);
      const std::uint32_t deg = fresh_row(z.fresh_v, z.fresh_vo, fresh, cell, cv);
      t.perimeter_[cell] = deg < full ? 1 : 0;
      ++fresh;
    } else {
      const bool gained = cv.gain < z.gain_v.size() && z.gain_v[cv.gain].first == cell;
      old_row(old.edge_adjacency_, cell, z.gain_e, ce);
      const std::uint32_t deg = old_row(old.vertex_adjacency_, cell, z.gain_v, cv);
      t.perimeter_[cell] = gained ? (deg < full ? 1 : 0) : old.perimeter_[old_of[cell]];
    }
  }
  return t;
}

}  // namespace boardless
