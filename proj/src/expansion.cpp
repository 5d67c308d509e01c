#include "boardless/expansion.hpp"

#include <algorithm>

namespace boardless {

BoardSpec base_board(Shape shape) { return {shape, shape == Shape::Hexagon ? 21 : 41}; }

BoardSpec initial_board(Shape shape, int initial_tiles) {
  const int n = std::max(initial_tiles, 0);
  switch (shape) {
    case Shape::Square: return {shape, n == 0 ? 3 : n + 2};
    case Shape::Hexagon: return {shape, n == 0 ? 2 : (n + 4) / 2};
    case Shape::Triangle: return {shape, n == 0 ? 4 : n + 3};
  }
  return {shape, 1};
}

std::pair<Topology, IndexMapping> perimeter_expand(const Topology& t) {
  if (!t.dim()) throw std::invalid_argument("perimeter expansion needs a regular board");
  const Shape shape = t.shape();
  const int d = *t.dim();
  const auto growth = perimeter_added_cells(shape, d);
  Topology next = build_regular({shape, growth.new_dim});

  IndexMapping m;
  m.old_to_new.resize(t.cell_count());
  const auto rows = row_offsets({shape, d});
  for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
    for (std::size_t id = rows[r]; id < rows[r + 1]; ++id) {
      m.old_to_new[id] = static_cast<CellId>(perimeter_map_index(shape, d, static_cast<int>(r), id));
    }
  }
  std::vector<std::uint8_t> hit(next.cell_count(), 0);
  for (CellId id : m.old_to_new) hit[id] = 1;
  for (CellId id = 0; id < next.cell_count(); ++id) {
    if (hit[id] == 0) m.added.push_back(id);
  }
  return {std::move(next), std::move(m)};
}

std::vector<CanonCoord> zone_missing(const Topology& t, CanonCoord placed) {
  std::vector<CanonCoord> out;
  for (CanonCoord n : vertex_neighbors(t.shape(), placed)) {
    if (!t.contains(n)) out.push_back(n);
  }
  const Shape shape = t.shape();
  std::sort(out.begin(), out.end(),
            [shape](CanonCoord a, CanonCoord b) { return canonical_key(shape, a) < canonical_key(shape, b); });
  return out;
}

std::pair<Topology, IndexMapping> zone_expand(const Topology& t, CanonCoord placed) {
  if (!t.contains(placed)) throw std::invalid_argument("zone expansion around a cell that is not on the board");
  const Shape shape = t.shape();
  const auto missing = zone_missing(t, placed);

  // Walk the merged board in canonical order; each old cell moves up by the
  // number of new cells seen so far.
  std::vector<CanonCoord> merged;
  merged.reserve(t.cell_count() + missing.size());
  IndexMapping m;
  m.old_to_new.resize(t.cell_count());
  const auto& old = t.cells();
  const auto& old_keys = t.keys();
  std::size_t i = 0;
  std::size_t j = 0;
  CellId counter = 0;
  while (i < old.size() || j < missing.size()) {
    const bool take_new =
        i == old.size() || (j < missing.size() && canonical_key(shape, missing[j]) < old_keys[i]);
    const auto id = static_cast<CellId>(merged.size());
    if (take_new) {
      merged.push_back(missing[j++]);
      m.added.push_back(id);
      ++counter;
    } else {
      m.old_to_new[i] = static_cast<CellId>(i) + counter;
      merged.push_back(old[i++]);
    }
  }
  Topology next = extend_topology(t, std::move(merged), m.old_to_new, m.added);
  return {std::move(next), std::move(m)};
}

namespace {

struct SiteRemap {
  const IndexMapping& m;
  SiteId old_board;
  SiteId delta;

  SiteId operator()(SiteId s) const { return s < old_board ? m.old_to_new[s] : s + delta; }
};

SiteRemap prepare(GameState& st, const std::shared_ptr<const Topology>& board, const IndexMapping& mapping) {
  const auto old_n = static_cast<SiteId>(st.board_sites());
  if (mapping.old_to_new.size() != old_n || board->cell_count() != old_n + mapping.added.size()) {
    throw std::invalid_argument("mapping does not match the board sizes");
  }
  const auto delta = static_cast<SiteId>(board->cell_count() - old_n);
  for (std::size_t c = 1; c < st.containers.size(); ++c) st.containers[c].offset += delta;
  st.containers[0].topology = board;
  SiteRemap f{mapping, old_n, delta};
  for (Move& mv : st.trial.moves) {
    mv.to = f(mv.to);
    if (mv.from) mv.from = f(*mv.from);
  }
  for (SiteId& s : st.initial_sites) s = f(s);
  return f;
}

}  // namespace

void migrate_state_map(GameState& st, std::shared_ptr<const Topology> board, const IndexMapping& mapping) {
  const SiteRemap f = prepare(st, board, mapping);
  const ContainerState& old = st.states[0];
  ContainerState next(board->cell_count());
  next.playable.clear();
  std::vector<std::uint16_t> support(st.support.empty() ? 0 : board->cell_count(), 0);
  for (SiteId s = 0; s < old.site_count(); ++s) {
    const SiteId t = f.m.old_to_new[s];
    if (old.playable.test(s)) next.playable.set(t);
    if (!support.empty()) support[t] = st.support[s];
    if (old.empty.test(s)) continue;
    next.empty.reset(t);
    next.what[t] = old.what[s];
    next.who[t] = old.who[s];
    next.count[t] = old.count[s];
    next.state[t] = old.state[s];
  }
  st.states[0] = std::move(next);
  st.support = std::move(support);
  st.owned.remap(f);
  // Added sites are empty, so no old site changes support or playability.
  admit_new_sites(st, mapping.added);
}

void migrate_state_replay(GameState& st, std::shared_ptr<const Topology> board, const IndexMapping& mapping) {
  const SiteId old_n = static_cast<SiteId>(st.board_sites());
  st.owned.erase_if([old_n](SiteId s) { return s < old_n; });
  const SiteRemap f = prepare(st, board, mapping);
  st.owned.remap(f);

  st.states[0] = ContainerState(board->cell_count());
  st.occupied = 0;
  if (!st.initial_sites.empty()) {
    const std::uint16_t comp = st.setup->initial_component;
    const std::uint16_t owner = st.setup->components.at(comp - 1).owner;
    for (SiteId s : st.initial_sites) {
      st.states[0].put(s, comp, owner);
      st.owned.append(owner, comp, s);
      ++st.occupied;
    }
  }
  replay_trial(st);
}

std::shared_ptr<const Topology> initial_topology(const Setup& setup) {
  if (setup.strategy == Strategy::Base) return std::make_shared<const Topology>(build_regular(base_board(setup.shape)));
  const int dim = setup.initial_dim.value_or(initial_board(setup.shape, setup.initial_tiles).dim);
  return std::make_shared<const Topology>(build_regular({setup.shape, dim}));
}

GameState make_initial_state(std::shared_ptr<const Setup> setup) {
  auto board = initial_topology(*setup);
  return initial_state_on(std::move(setup), std::move(board));
}

Move make_move(const GameState& st, SiteId to) {
  Move m;
  m.to = to;
  m.player = st.player_to_move();
  m.component = st.component_of(m.player);
  m.from = st.hand_site(m.component);
  return m;
}

void play_move(GameState& st, Move m) {
  if (m.to >= st.board_sites() || !st.states[0].playable.test(m.to)) {
    throw IllegalMove("move to site " + std::to_string(m.to) + " is not playable");
  }
  const Topology& board = st.board();
  m.edge = board.is_perimeter(m.to);
  const Strategy strategy = st.setup->strategy;
  if (m.edge && strategy != Strategy::Base) {
    const CanonCoord placed = board.coord(m.to);
    const bool grows = is_perimeter_family(strategy) || !zone_missing(board, placed).empty();
    if (grows) {
      auto [next, mapping] = is_perimeter_family(strategy) ? perimeter_expand(board) : zone_expand(board, placed);
      ExpansionEvent ev;
      ev.move_index = st.trial.moves.size();
      ev.strategy = strategy;
      ev.old_cells = board.cell_count();
      ev.new_cells = next.cell_count();
      ev.old_dim = board.dim();
      ev.new_dim = next.dim();
      const auto old_n = static_cast<SiteId>(ev.old_cells);
      const auto delta = static_cast<SiteId>(ev.new_cells - ev.old_cells);
      auto topo = std::make_shared<const Topology>(std::move(next));
      if (is_replay(strategy)) {
        migrate_state_replay(st, topo, mapping);
      } else {
        migrate_state_map(st, topo, mapping);
      }
      m.to = mapping.old_to_new[m.to];
      if (m.from) m.from = *m.from < old_n ? mapping.old_to_new[*m.from] : *m.from + delta;
      ev.mapping = std::move(mapping);
      st.events.push_back(std::move(ev));
    }
  }
  apply_move(st, m);
}

std::optional<SiteId> resolve(const GameState& st, CanonCoord c) { return st.board().find(c); }

void play_at(GameState& st, CanonCoord c) {
  const auto site = resolve(st, c);
  if (!site) {
    throw OutOfBounds("cell (" + std::to_string(c.x) + ", " + std::to_string(c.y) + ") is not on the board");
  }
  play_move(st, make_move(st, *site));
}

std::vector<CanonCoord> trial_coords(const GameState& st) {
  std::vector<CanonCoord> out;
  out.reserve(st.trial.moves.size());
  for (const Move& m : st.trial.moves) out.push_back(st.board().coord(m.to));
  return out;
}

GameState undo(const GameState& st, std::size_t k) {
  const std::size_t n = st.trial.moves.size();
  if (k > n) throw std::out_of_range("cannot undo " + std::to_string(k) + " of " + std::to_string(n) + " moves");
  const auto coords = trial_coords(st);
  GameState fresh = make_initial_state(st.setup);
  fresh.trial.seed = st.trial.seed;
  for (std::size_t i = 0; i + k < n; ++i) play_at(fresh, coords[i]);
  return fresh;
}

}  // namespace boardless
