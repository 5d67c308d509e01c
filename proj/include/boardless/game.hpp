#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "boardless/expansion.hpp"

namespace boardless {

struct WinRule {
  enum class Kind : std::uint8_t { None, LineOfN } kind = Kind::None;
  int n = 0;

  friend bool operator==(const WinRule&, const WinRule&) = default;
};

struct GameConfig {
  std::string name;
  Shape shape = Shape::Square;
  Strategy strategy = Strategy::ZoneMap;
  std::uint16_t players = 2;
  std::vector<ComponentType> components;
  int initial_tiles = 0;
  std::uint16_t initial_component = 0;
  PlacementRule placement;
  WinRule win;
  int move_cap = 200;

  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

/// Throws std::invalid_argument describing the first problem found.
void validate(const GameConfig& config);

std::vector<std::string> builtin_config_names();
/// Bundled games: andantino-{square,hexagon,triangle}, freeplace-{...}.
GameConfig builtin_config(std::string_view name);

std::shared_ptr<const Setup> make_setup(const GameConfig& config, Strategy strategy);
std::shared_ptr<const Setup> make_setup(const GameConfig& config);

/// Legal moves of the side to move, ordered by site id (which is canonical
/// traversal order on every board).
std::vector<Move> legal_moves(const GameState& st);

/// True iff `player` has n cells in a row along one lattice axis.
/// Throws std::invalid_argument on triangular boards or n < 2.
bool detect_line(const GameState& st, int n, std::uint16_t player);

/// Length of the longest same-owner line through an occupied site.
int line_length_through(const GameState& st, SiteId site);

struct PlayoutResult {
  std::size_t moves = 0;
  TrialStatus status = TrialStatus::InProgress;
  std::uint16_t winner = 0;
  std::size_t board_cells = 0;
  std::size_t occupied = 0;
  std::size_t expansions = 0;
  std::size_t cells_added = 0;

  friend bool operator==(const PlayoutResult&, const PlayoutResult&) = default;
};

using MoveObserver = std::function<void(const GameState&)>;

/// Plays uniformly random legal moves from `st` until a win, no legal move,
/// or the move cap. The observer, if any, sees the state after every move.
PlayoutResult run_playout(GameState& st, const GameConfig& config, std::uint64_t seed,
                          const MoveObserver& observer = {});

/// Fresh initial state (board built from scratch) followed by run_playout.
PlayoutResult random_playout(const GameConfig& config, Strategy strategy, std::uint64_t seed);

}  // namespace boardless
