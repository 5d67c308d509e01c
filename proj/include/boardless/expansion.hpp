#pragma once

#include <memory>
#include <utility>

#include "boardless/state.hpp"

namespace boardless {

struct OutOfBounds : IllegalMove {
  using IllegalMove::IllegalMove;
};

/// Fixed board of the BASE strategy: 41 per side, or 21 for hexagons.
BoardSpec base_board(Shape shape);

/// Smallest regular board holding a centred line of `initial_tiles` tiles
/// together with all their vertex neighbours.
BoardSpec initial_board(Shape shape, int initial_tiles);

std::pair<Topology, IndexMapping> perimeter_expand(const Topology& t);

/// Vertex neighbours of `placed` missing from the board, in canonical order.
std::vector<CanonCoord> zone_missing(const Topology& t, CanonCoord placed);

std::pair<Topology, IndexMapping> zone_expand(const Topology& t, CanonCoord placed);

/// Remaps chunks, ownership and trial sites onto the new board.
void migrate_state_map(GameState& st, std::shared_ptr<const Topology> board, const IndexMapping& mapping);

/// Resets the board to its initial tiles on the new board and re-applies every
/// trial move in order. Throws std::logic_error if a move no longer applies.
void migrate_state_replay(GameState& st, std::shared_ptr<const Topology> board, const IndexMapping& mapping);

std::shared_ptr<const Topology> initial_topology(const Setup& setup);
GameState make_initial_state(std::shared_ptr<const Setup> setup);

/// Fills player, component and hand source for the player to move.
Move make_move(const GameState& st, SiteId to);

/// Plays a move given in current board indices, expanding the board first
/// when the strategy calls for it.
void play_move(GameState& st, Move m);

std::optional<SiteId> resolve(const GameState& st, CanonCoord c);

/// Plays the side to move at a lattice cell. Throws OutOfBounds when the cell
/// is not on the current board.
void play_at(GameState& st, CanonCoord c);

/// Destination coordinates of the trial, in play order.
std::vector<CanonCoord> trial_coords(const GameState& st);

/// State after taking back the last k moves: a fresh game with the remaining
/// moves replayed. Throws std::out_of_range when k exceeds the moves played.
GameState undo(const GameState& st, std::size_t k);

}  // namespace boardless
