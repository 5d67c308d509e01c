#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boardless/chunk_set.hpp"
#include "boardless/topology.hpp"

namespace boardless {

using SiteId = std::uint32_t;

struct IllegalMove : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat container state: one entry per local site in every chunk.
/// Index 0 of what/who means "no component" / "board".
struct ContainerState {
  ContainerState() = default;
  explicit ContainerState(std::size_t sites);

  std::size_t site_count() const { return what.size(); }
  bool is_empty(SiteId s) const { return empty.test(s); }

  ChunkSet empty;
  std::vector<std::uint16_t> what;
  std::vector<std::uint16_t> who;
  std::vector<std::uint32_t> count;
  std::vector<std::uint16_t> state;
  ChunkSet playable;

  /// Low-level chunk update without any rule check.
  void put(SiteId s, std::uint16_t component, std::uint16_t owner, std::uint32_t n = 1);
  /// Removes n components; the site rejoins empty when none are left.
  void take(SiteId s, std::uint32_t n = 1);

  friend bool operator==(const ContainerState&, const ContainerState&) = default;
};

/// Places one component on a playable site. Throws IllegalMove otherwise.
void place_on(ContainerState& cs, SiteId s, std::uint16_t component, std::uint16_t owner);
/// Removes one component. Throws IllegalMove if the site is empty.
void remove_from(ContainerState& cs, SiteId s);

/// Checks the flat-state invariants; returns a description of the first
/// violation or an empty string.
std::string check_coherence(const ContainerState& cs);

enum class ContainerRole : std::uint8_t { MainBoard, PlayerHand };

struct Container {
  std::uint32_t id = 0;
  ContainerRole role = ContainerRole::MainBoard;
  std::uint16_t player = 0;
  std::shared_ptr<const Topology> topology;
  SiteId offset = 0;

  std::size_t site_count() const { return topology->cell_count(); }
};

/// Per owner, per component type: sorted global site indices.
class OwnedRegistry {
 public:
  OwnedRegistry() = default;
  OwnedRegistry(std::size_t owners, std::size_t components);

  std::size_t owners() const { return owners_; }
  std::size_t components() const { return components_; }

  void add(std::uint16_t owner, std::uint16_t component, SiteId site);
  void remove(std::uint16_t owner, std::uint16_t component, SiteId site);
  /// Unordered insert for bulk loads; call normalize() before reading.
  void append(std::uint16_t owner, std::uint16_t component, SiteId site);
  void normalize();
  const std::vector<SiteId>& sites(std::uint16_t owner, std::uint16_t component) const;

  template <class F>
  void remap(F&& f) {
    for (auto& s : sets_) {
      for (auto& site : s) site = f(site);
    }
  }
  /// Drops every entry whose site satisfies pred.
  template <class P>
  void erase_if(P&& pred) {
    for (auto& s : sets_) std::erase_if(s, pred);
  }

  friend bool operator==(const OwnedRegistry&, const OwnedRegistry&) = default;

 private:
  std::vector<SiteId>& slot(std::uint16_t owner, std::uint16_t component);

  std::size_t owners_ = 0;
  std::size_t components_ = 0;
  std::vector<std::vector<SiteId>> sets_;
};

struct Move {
  std::optional<SiteId> from;
  SiteId to = 0;
  std::uint16_t player = 0;
  std::uint16_t component = 0;
  bool edge = false;

  friend bool operator==(const Move&, const Move&) = default;
};

enum class TrialStatus : std::uint8_t { InProgress, Won, NoMoves, MoveCap };

struct Trial {
  std::uint64_t seed = 0;
  std::vector<Move> moves;
  TrialStatus status = TrialStatus::InProgress;
  std::uint16_t winner = 0;

  friend bool operator==(const Trial&, const Trial&) = default;
};

enum class Strategy : std::uint8_t { Base, PeriRe, PeriMap, ZoneRe, ZoneMap };

inline constexpr Strategy kAllStrategies[] = {Strategy::Base, Strategy::PeriRe, Strategy::PeriMap, Strategy::ZoneRe,
                                              Strategy::ZoneMap};

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view text);
inline bool is_perimeter_family(Strategy s) { return s == Strategy::PeriRe || s == Strategy::PeriMap; }
inline bool is_zone_family(Strategy s) { return s == Strategy::ZoneRe || s == Strategy::ZoneMap; }
inline bool is_replay(Strategy s) { return s == Strategy::PeriRe || s == Strategy::ZoneRe; }

enum class Adjacency : std::uint8_t { Edge, Vertex };

struct PlacementRule {
  enum class Kind : std::uint8_t { AnyEmpty, AdjacentAtLeast } kind = Kind::AnyEmpty;
  int k = 0;
  Adjacency adjacency = Adjacency::Edge;
  /// Moves exempted from the full k requirement; during them the requirement
  /// is min(k, occupied cells).
  int bootstrap_moves = 2;

  friend bool operator==(const PlacementRule&, const PlacementRule&) = default;
};

struct ComponentType {
  std::uint16_t owner = 0;
  /// Components initially in the owner's hand; absent means unlimited supply
  /// with no hand container.
  std::optional<std::uint32_t> hand;

  friend bool operator==(const ComponentType&, const ComponentType&) = default;
};

/// Everything needed to rebuild the initial state of a game.
struct Setup {
  Shape shape = Shape::Square;
  Strategy strategy = Strategy::Base;
  std::uint16_t players = 2;
  /// Component type i + 1 is components[i].
  std::vector<ComponentType> components;
  int initial_tiles = 0;
  std::uint16_t initial_component = 0;
  PlacementRule rule;
  /// Overrides the initial board dimension (growth scenarios start at 1).
  std::optional<int> initial_dim;
};

struct IndexMapping {
  std::vector<CellId> old_to_new;
  std::vector<CellId> added;
};

struct ExpansionEvent {
  std::size_t move_index = 0;
  Strategy strategy = Strategy::Base;
  std::size_t old_cells = 0;
  std::size_t new_cells = 0;
  std::optional<int> old_dim;
  std::optional<int> new_dim;
  IndexMapping mapping;

  std::size_t added() const { return new_cells - old_cells; }
};

struct GameState {
  std::shared_ptr<const Setup> setup;
  std::vector<Container> containers;
  std::vector<ContainerState> states;
  OwnedRegistry owned;
  Trial trial;
  /// Current board sites of the initial tiles.
  std::vector<SiteId> initial_sites;
  /// Occupied neighbours of each board site under the rule's adjacency.
  std::vector<std::uint16_t> support;
  std::size_t occupied = 0;
  /// Support threshold the playable chunk was last computed with.
  int threshold = -1;
  std::vector<ExpansionEvent> events;

  const Topology& board() const { return *containers[0].topology; }
  const ContainerState& board_state() const { return states[0]; }
  std::size_t board_sites() const { return containers[0].site_count(); }
  std::size_t total_sites() const;

  /// Container index holding a global site.
  std::size_t container_of(SiteId global) const;
  /// Global site of the hand holding `component`, if it has a hand.
  std::optional<SiteId> hand_site(std::uint16_t component) const;
  std::uint16_t player_to_move() const;
  std::uint16_t component_of(std::uint16_t player) const;
};

/// Builds the starting state of a setup on the given board topology.
GameState initial_state_on(std::shared_ptr<const Setup> setup, std::shared_ptr<const Topology> board);

/// Rule threshold after `moves_played` moves with `occupied` cells occupied.
int required_support(const PlacementRule& rule, std::size_t moves_played, std::size_t occupied);

/// Recomputes support counts and the playable chunk of the board.
void refresh_rules(GameState& st, std::size_t moves_played);

/// Support counts and playability for sites that just appeared on the board;
/// every other site must already be up to date.
void admit_new_sites(GameState& st, const std::vector<SiteId>& sites);

/// Puts a component on a board site, keeping registry, support and playable
/// in sync; `moves_played` counts the moves made once this one lands. Does not
/// touch the trial or hands.
void occupy_board_site(GameState& st, SiteId site, std::uint16_t component, std::uint16_t owner,
                       std::size_t moves_played);

/// Re-applies every trial move to a board that holds only its initial tiles,
/// rebuilding support and playability on the way. Throws std::logic_error if
/// a move no longer applies.
void replay_trial(GameState& st);

/// Applies a legal move on the current board (no expansion) and appends it to
/// the trial. Throws IllegalMove.
void apply_move(GameState& st, const Move& m);

/// Registry rebuilt from the chunks of every container.
OwnedRegistry recompute_owned(const GameState& st);

struct ChunkTable {
  std::string container;
  std::vector<std::uint32_t> empty;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> what;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> who;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> count;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> state;
  std::vector<std::uint32_t> playable;

  friend bool operator==(const ChunkTable&, const ChunkTable&) = default;
};

/// One table per container; what/who/count list occupied sites, state lists
/// non-zero values only.
std::vector<ChunkTable> snapshot_tables(const GameState& st);

struct OwnedRow {
  std::string owner;
  std::vector<std::vector<SiteId>> sets;

  friend bool operator==(const OwnedRow&, const OwnedRow&) = default;
};

std::vector<OwnedRow> owned_report(const GameState& st);

std::string format_tables(const std::vector<ChunkTable>& tables);
std::string format_owned(const std::vector<OwnedRow>& rows);

}  // namespace boardless
