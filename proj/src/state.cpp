#include "boardless/state.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace boardless {

ContainerState::ContainerState(std::size_t sites)
    : empty(sites, true), what(sites, 0), who(sites, 0), count(sites, 0), state(sites, 0), playable(sites, true) {}

void ContainerState::put(SiteId s, std::uint16_t component, std::uint16_t owner, std::uint32_t n) {
  empty.reset(s);
  what[s] = component;
  who[s] = owner;
  count[s] += n;
}

void ContainerState::take(SiteId s, std::uint32_t n) {
  count[s] = count[s] > n ? count[s] - n : 0;
  if (count[s] == 0) {
    empty.set(s);
    what[s] = 0;
    who[s] = 0;
    state[s] = 0;
  }
}

void place_on(ContainerState& cs, SiteId s, std::uint16_t component, std::uint16_t owner) {
  if (s >= cs.site_count() || !cs.playable.test(s)) {
    throw IllegalMove("site " + std::to_string(s) + " is not playable");
  }
  if (component == 0) throw IllegalMove("component index 0 is reserved");
  cs.put(s, component, owner);
  cs.playable.reset(s);
}

void remove_from(ContainerState& cs, SiteId s) {
  if (s >= cs.site_count() || cs.empty.test(s)) {
    throw IllegalMove("site " + std::to_string(s) + " holds no component");
  }
  cs.take(s);
  cs.playable.set(s);
}

std::string check_coherence(const ContainerState& cs) {
  const std::size_t n = cs.site_count();
  if (cs.empty.size() != n || cs.playable.size() != n || cs.who.size() != n || cs.count.size() != n ||
      cs.state.size() != n) {
    return "chunk sizes disagree";
  }
  for (SiteId s = 0; s < n; ++s) {
    const bool e = cs.empty.test(s);
    if (e != (cs.what[s] == 0) || e != (cs.count[s] == 0)) {
      return "site " + std::to_string(s) + ": empty/what/count disagree";
    }
    if (cs.what[s] == 0 && (cs.who[s] != 0 || cs.state[s] != 0)) {
      return "site " + std::to_string(s) + ": owner or state without component";
    }
  }
  return {};
}

OwnedRegistry::OwnedRegistry(std::size_t owners, std::size_t components)
    : owners_(owners), components_(components), sets_(owners * components) {}

std::vector<SiteId>& OwnedRegistry::slot(std::uint16_t owner, std::uint16_t component) {
  if (owner >= owners_ || component >= components_) throw std::out_of_range("owner/component out of range");
  return sets_[owner * components_ + component];
}

void OwnedRegistry::add(std::uint16_t owner, std::uint16_t component, SiteId site) {
  auto& v = slot(owner, component);
  const auto it = std::lower_bound(v.begin(), v.end(), site);
  if (it == v.end() || *it != site) v.insert(it, site);
}

void OwnedRegistry::append(std::uint16_t owner, std::uint16_t component, SiteId site) {
  slot(owner, component).push_back(site);
}

void OwnedRegistry::normalize() {
  for (auto& v : sets_) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
}

void OwnedRegistry::remove(std::uint16_t owner, std::uint16_t component, SiteId site) {
  auto& v = slot(owner, component);
  const auto it = std::lower_bound(v.begin(), v.end(), site);
  if (it != v.end() && *it == site) v.erase(it);
}

const std::vector<SiteId>& OwnedRegistry::sites(std::uint16_t owner, std::uint16_t component) const {
  return const_cast<OwnedRegistry*>(this)->slot(owner, component);
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Base: return "BASE";
    case Strategy::PeriRe: return "PERI-RE";
    case Strategy::PeriMap: return "PERI-MAP";
    case Strategy::ZoneRe: return "ZONE-RE";
    case Strategy::ZoneMap: return "ZONE-MAP";
  }
  return "?";
}

Strategy parse_strategy(std::string_view text) {
  std::string t(text);
  for (auto& ch : t) ch = ch == '_' ? '-' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (Strategy s : kAllStrategies) {
    if (to_string(s) == t) return s;
  }
  throw std::invalid_argument("unknown strategy: " + std::string(text));
}

std::size_t GameState::total_sites() const {
  const Container& last = containers.back();
  return last.offset + last.site_count();
}

std::size_t GameState::container_of(SiteId global) const {
  for (std::size_t c = containers.size(); c-- > 0;) {
    if (global >= containers[c].offset) {
      if (global >= containers[c].offset + containers[c].site_count()) break;
      return c;
    }
  }
  throw std::out_of_range("global site " + std::to_string(global) + " outside every container");
}

std::optional<SiteId> GameState::hand_site(std::uint16_t component) const {
  const ComponentType& type = setup->components.at(component - 1);
  if (!type.hand) return std::nullopt;
  // A hand holds its owner's hand-kept types in component order, one site each.
  SiteId local = 0;
  for (std::size_t i = 0; i + 1 < component; ++i) {
    if (setup->components[i].owner == type.owner && setup->components[i].hand) ++local;
  }
  for (std::size_t c = 1; c < containers.size(); ++c) {
    if (containers[c].player == type.owner) return containers[c].offset + local;
  }
  return std::nullopt;
}

std::uint16_t GameState::player_to_move() const {
  return static_cast<std::uint16_t>(trial.moves.size() % setup->players + 1);
}

std::uint16_t GameState::component_of(std::uint16_t player) const {
  for (std::size_t i = 0; i < setup->components.size(); ++i) {
    if (setup->components[i].owner == player) return static_cast<std::uint16_t>(i + 1);
  }
  throw std::invalid_argument("player " + std::to_string(player) + " owns no component type");
}

int required_support(const PlacementRule& rule, std::size_t moves_played, std::size_t occupied) {
  if (rule.kind == PlacementRule::Kind::AnyEmpty) return 0;
  if (moves_played < static_cast<std::size_t>(std::max(rule.bootstrap_moves, 0))) {
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(rule.k), occupied));
  }
  return rule.k;
}

namespace {

std::span<const std::uint32_t> rule_neighbours(const GameState& st, SiteId s) {
  return st.setup->rule.adjacency == Adjacency::Edge ? st.board().edge_adjacent(s) : st.board().vertex_adjacent(s);
}

bool uses_support(const GameState& st) { return st.setup->rule.kind != PlacementRule::Kind::AnyEmpty; }

void recompute_playable(GameState& st) {
  ContainerState& b = st.states[0];
  if (!uses_support(st) || st.threshold <= 0) {
    b.playable = b.empty;
    return;
  }
  // With a positive threshold only neighbours of occupied sites qualify.
  b.playable.clear();
  auto visit = [&](SiteId occupied) {
    if (b.empty.test(occupied)) return;
    for (auto nb : rule_neighbours(st, occupied)) {
      if (b.empty.test(nb) && st.support[nb] >= st.threshold) b.playable.set(nb);
    }
  };
  for (SiteId s : st.initial_sites) visit(s);
  for (const Move& m : st.trial.moves) visit(m.to);
}

}  // namespace

void refresh_rules(GameState& st, std::size_t moves_played) {
  const std::size_t n = st.board_sites();
  if (uses_support(st)) {
    st.support.assign(n, 0);
    const ContainerState& b = st.states[0];
    for (SiteId s = 0; s < n; ++s) {
      if (b.empty.test(s)) continue;
      for (auto nb : rule_neighbours(st, s)) ++st.support[nb];
    }
  } else {
    st.support.clear();
  }
  st.threshold = required_support(st.setup->rule, moves_played, st.occupied);
  recompute_playable(st);
}

void admit_new_sites(GameState& st, const std::vector<SiteId>& sites) {
  ContainerState& b = st.states[0];
  for (SiteId s : sites) {
    if (uses_support(st)) {
      std::uint16_t n = 0;
      for (auto nb : rule_neighbours(st, s)) n += b.empty.test(nb) ? 0 : 1;
      st.support[s] = n;
    }
    b.playable.assign(s, b.empty.test(s) && (!uses_support(st) || st.support[s] >= st.threshold));
  }
}

void occupy_board_site(GameState& st, SiteId site, std::uint16_t component, std::uint16_t owner,
                       std::size_t moves_played) {
  ContainerState& b = st.states[0];
  b.put(site, component, owner);
  b.playable.reset(site);
  st.owned.add(owner, component, site);
  ++st.occupied;
  const int threshold = required_support(st.setup->rule, moves_played, st.occupied);
  if (!uses_support(st)) {
    st.threshold = threshold;
    return;
  }
  for (auto nb : rule_neighbours(st, site)) ++st.support[nb];
  if (threshold != st.threshold) {
    st.threshold = threshold;
    recompute_playable(st);
    return;
  }
  for (auto nb : rule_neighbours(st, site)) {
    b.playable.assign(nb, b.empty.test(nb) && st.support[nb] >= threshold);
  }
}

void replay_trial(GameState& st) {
  ContainerState& b = st.states[0];
  const bool counted = uses_support(st);
  if (counted) {
    st.support.assign(st.board_sites(), 0);
    for (SiteId s : st.initial_sites) {
      for (auto nb : rule_neighbours(st, s)) ++st.support[nb];
    }
  } else {
    st.support.clear();
  }
  for (std::size_t i = 0; i < st.trial.moves.size(); ++i) {
    const Move& mv = st.trial.moves[i];
    // Playability as it stood before move i, read off the support counts.
    const bool ok = mv.to < b.site_count() && b.empty.test(mv.to) &&
                    (!counted || st.support[mv.to] >= required_support(st.setup->rule, i, st.occupied));
    if (!ok) {
      throw std::logic_error("replay failure: move " + std::to_string(i) + " to site " + std::to_string(mv.to) +
                             " is no longer playable");
    }
    b.put(mv.to, mv.component, mv.player);
    st.owned.append(mv.player, mv.component, mv.to);
    ++st.occupied;
    if (counted) {
      for (auto nb : rule_neighbours(st, mv.to)) ++st.support[nb];
    }
  }
  st.owned.normalize();
  st.threshold = required_support(st.setup->rule, st.trial.moves.size(), st.occupied);
  recompute_playable(st);
}

void apply_move(GameState& st, const Move& m) {
  ContainerState& b = st.states[0];
  if (m.to >= st.board_sites() || !b.playable.test(m.to)) {
    throw IllegalMove("move to site " + std::to_string(m.to) + " is not playable");
  }
  if (m.from) {
    const std::size_t c = st.container_of(*m.from);
    ContainerState& hand = st.states[c];
    const SiteId local = *m.from - st.containers[c].offset;
    if (c == 0 || hand.empty.test(local) || hand.what[local] != m.component) {
      throw IllegalMove("no component " + std::to_string(m.component) + " at site " + std::to_string(*m.from));
    }
    hand.take(local);
    if (hand.empty.test(local)) st.owned.remove(m.player, m.component, *m.from);
  }
  st.trial.moves.push_back(m);
  occupy_board_site(st, m.to, m.component, m.player, st.trial.moves.size());
}

GameState initial_state_on(std::shared_ptr<const Setup> setup, std::shared_ptr<const Topology> board) {
  GameState st;
  st.setup = setup;
  st.containers.push_back({0, ContainerRole::MainBoard, 0, board, 0});
  st.states.emplace_back(board->cell_count());
  st.owned = OwnedRegistry(setup->players + 1u, setup->components.size() + 1);

  SiteId offset = static_cast<SiteId>(board->cell_count());
  for (std::uint16_t p = 1; p <= setup->players; ++p) {
    std::vector<std::uint16_t> held;
    for (std::size_t i = 0; i < setup->components.size(); ++i) {
      const auto& type = setup->components[i];
      if (type.owner == p && type.hand) held.push_back(static_cast<std::uint16_t>(i + 1));
    }
    if (held.empty()) continue;
    std::vector<CanonCoord> cells;
    for (int i = 0; i < static_cast<int>(held.size()); ++i) cells.push_back({i, 0});
    auto topo = std::make_shared<const Topology>(build_from_cells(Shape::Square, cells));
    const auto id = static_cast<std::uint32_t>(st.containers.size());
    st.containers.push_back({id, ContainerRole::PlayerHand, p, topo, offset});
    ContainerState hand(held.size());
    for (SiteId s = 0; s < held.size(); ++s) {
      const std::uint32_t n = *setup->components[held[s] - 1].hand;
      if (n == 0) continue;
      hand.put(s, held[s], p, n);
      st.owned.add(p, held[s], offset + s);
    }
    hand.playable = hand.empty;
    st.states.push_back(std::move(hand));
    offset += static_cast<SiteId>(held.size());
  }

  if (uses_support(st)) st.support.assign(board->cell_count(), 0);
  st.threshold = required_support(setup->rule, 0, 0);
  if (setup->initial_tiles > 0) {
    const std::uint16_t comp = setup->initial_component;
    const std::uint16_t owner = setup->components.at(comp - 1).owner;
    for (CanonCoord c : initial_tile_coords(setup->shape, setup->initial_tiles)) {
      const auto site = board->find(c);
      if (!site) throw std::invalid_argument("initial tile outside the board");
      st.initial_sites.push_back(*site);
      st.states[0].put(*site, comp, owner);
      st.owned.add(owner, comp, *site);
      ++st.occupied;
    }
  }
  refresh_rules(st, 0);
  return st;
}

OwnedRegistry recompute_owned(const GameState& st) {
  OwnedRegistry r(st.owned.owners(), st.owned.components());
  for (std::size_t c = 0; c < st.containers.size(); ++c) {
    const ContainerState& cs = st.states[c];
    for (SiteId s = 0; s < cs.site_count(); ++s) {
      if (cs.what[s] != 0) r.add(cs.who[s], cs.what[s], st.containers[c].offset + s);
    }
  }
  return r;
}

namespace {

std::string container_name(const Container& c) {
  if (c.role == ContainerRole::MainBoard) return "Board";
  return "Player " + std::to_string(c.player) + " hand";
}

}  // namespace

std::vector<ChunkTable> snapshot_tables(const GameState& st) {
  std::vector<ChunkTable> out;
  for (std::size_t c = 0; c < st.containers.size(); ++c) {
    const ContainerState& cs = st.states[c];
    ChunkTable t;
    t.container = container_name(st.containers[c]);
    t.empty = cs.empty.to_vector();
    t.playable = cs.playable.to_vector();
    for (SiteId s = 0; s < cs.site_count(); ++s) {
      if (cs.what[s] == 0) continue;
      t.what.emplace_back(s, cs.what[s]);
      t.who.emplace_back(s, cs.who[s]);
      t.count.emplace_back(s, cs.count[s]);
    }
    for (SiteId s = 0; s < cs.site_count(); ++s) {
      if (cs.state[s] != 0) t.state.emplace_back(s, cs.state[s]);
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<OwnedRow> owned_report(const GameState& st) {
  std::vector<OwnedRow> out;
  for (std::uint16_t owner = 0; owner <= st.setup->players; ++owner) {
    OwnedRow row;
    row.owner = owner == 0 ? "Board" : "Player " + std::to_string(owner);
    for (std::size_t i = 0; i < st.setup->components.size(); ++i) {
      if (st.setup->components[i].owner != owner) continue;
      row.sets.push_back(st.owned.sites(owner, static_cast<std::uint16_t>(i + 1)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::string join(const std::vector<std::uint32_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

std::string join(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].first << ':' << v[i].second;
  return os.str();
}

}  // namespace

std::string format_tables(const std::vector<ChunkTable>& tables) {
  std::ostringstream os;
  for (const auto& t : tables) {
    os << t.container << '\n';
    os << "  empty    " << join(t.empty) << '\n';
    os << "  what     " << join(t.what) << '\n';
    os << "  who      " << join(t.who) << '\n';
    os << "  count    " << join(t.count) << '\n';
    os << "  state    " << join(t.state) << '\n';
    os << "  playable " << join(t.playable) << '\n';
  }
  return os.str();
}

std::string format_owned(const std::vector<OwnedRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << r.owner << " [";
    for (std::size_t i = 0; i < r.sets.size(); ++i) os << (i ? ", " : "") << '{' << join(r.sets[i]) << '}';
    os << "]\n";
  }
  return os.str();
}

}  // namespace boardless
